#pragma once

#include <cstddef>

namespace weylcyc {

// Process-wide guards against runaway expansions. Set once at startup
// (the CLI reads them from flags / environment); read everywhere else.
struct Limits {
  int degree_cap = 16;                     // max total degree of any WeylPoly produced
  std::size_t expansion_cap = 5'000'000;   // max derivative plans per cocycle evaluation
  int chamber_cap = 8;                     // max number of variables in a cube integral
  int series_cap = 12;                     // max truncation degree of invariant series
};

Limits limits();
void set_limits(const Limits& l);

// Overrides from WEYLCYC_DEGREE_CAP / WEYLCYC_EXPANSION_CAP / WEYLCYC_CHAMBER_CAP.
Limits limits_from_environment(Limits base);

}  // namespace weylcyc
