#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "weylcyc/rational.hpp"

namespace weylcyc {

struct SuiteConfig {
  int n = 1;
  int r = 2;
  int m = 2;       // h_m order for the hm suite
  int k = -1;      // thm-1-3: component to check, −1 means every k ≤ n
  std::uint64_t seed = 20240601;
  int samples = 0;  // 0 picks the suite default
};

struct IdentityCheck {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::size_t nontrivial = 0;  // samples where some term was nonzero
  Rational max_residual = 0;
  std::string first_failure;
  std::string note;

  void record(const Rational& residual, const std::string& where, bool nontrivial_sample = true);
  bool passed() const { return samples > 0 && failures == 0; }
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::deque<IdentityCheck> checks;  // stable references while suites append
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::uint64_t hash = 14695981039346656037ULL;

  IdentityCheck& check(const std::string& name);
  void absorb(std::string_view text);  // FNV-1a over every generated input
  bool passed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown name and CapExceeded from evaluation.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

std::string hex64(std::uint64_t v);

}  // namespace weylcyc
