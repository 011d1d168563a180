#pragma once

#include <vector>

#include "weylcyc/rational.hpp"
#include "weylcyc/upoly.hpp"

namespace weylcyc {

// B_j(x): B_0 = 1, B_j' = j B_{j−1}, ∫_0^1 B_j = 0.
UPoly bernoulli_poly(int j);

// B_0..B_N, read off as B_j(0).
std::vector<Rational> bernoulli_numbers(int N);

}  // namespace weylcyc
