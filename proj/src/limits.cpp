#include "weylcyc/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace weylcyc {

namespace {

std::atomic<int> g_degree_cap{Limits{}.degree_cap};
std::atomic<std::size_t> g_expansion_cap{Limits{}.expansion_cap};
std::atomic<int> g_chamber_cap{Limits{}.chamber_cap};
std::atomic<int> g_series_cap{Limits{}.series_cap};

template <class T>
void read_env(const char* name, T& target) {
  if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
    const long long parsed = std::stoll(v);
    if (parsed > 0) target = static_cast<T>(parsed);
  }
}

}  // namespace

Limits limits() {
  Limits l;
  l.degree_cap = g_degree_cap.load(std::memory_order_relaxed);
  l.expansion_cap = g_expansion_cap.load(std::memory_order_relaxed);
  l.chamber_cap = g_chamber_cap.load(std::memory_order_relaxed);
  l.series_cap = g_series_cap.load(std::memory_order_relaxed);
  return l;
}

void set_limits(const Limits& l) {
  g_degree_cap.store(l.degree_cap, std::memory_order_relaxed);
  g_expansion_cap.store(l.expansion_cap, std::memory_order_relaxed);
  g_chamber_cap.store(l.chamber_cap, std::memory_order_relaxed);
  g_series_cap.store(l.series_cap, std::memory_order_relaxed);
}

Limits limits_from_environment(Limits base) {
  read_env("WEYLCYC_DEGREE_CAP", base.degree_cap);
  read_env("WEYLCYC_EXPANSION_CAP", base.expansion_cap);
  read_env("WEYLCYC_CHAMBER_CAP", base.chamber_cap);
  return base;
}

}  // namespace weylcyc
