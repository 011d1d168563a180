#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "oracles.hpp"
#include "weylcyc/bernoulli.hpp"
#include "weylcyc/errors.hpp"
#include "weylcyc/generators.hpp"
#include "weylcyc/integrate.hpp"
#include "weylcyc/piecewise.hpp"

using namespace weylcyc;

namespace {
Rational R(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

PiecewisePoly power_convolve(const PiecewisePoly& f, int j) {
  PiecewisePoly out = f;
  for (int i = 1; i < j; ++i) out = circle_convolve(out, f);
  return out;
}
}  // namespace

TEST_CASE("bernoulli numbers") {
  const auto b = bernoulli_numbers(12);
  const auto ref = oracle::bernoulli(12);
  REQUIRE(b.size() == ref.size());
  for (std::size_t j = 0; j < b.size(); ++j) CHECK(b[j] == ref[j]);
  CHECK(b[1] == R(-1, 2));
  CHECK(b[2] == R(1, 6));
  CHECK(b[12] == R(-691, 2730));
}

TEST_CASE("bernoulli polynomials") {
  for (int j = 1; j <= 8; ++j) {
    const UPoly bj = bernoulli_poly(j);
    CHECK(bj.derivative(1) == bernoulli_poly(j - 1) * Rational(j));
    CHECK(simplex_integrate(bj, 1) == 0);
    // B_j(1 − x) = (−1)^j B_j(x)
    const UPoly flipped = bj.compose({UPoly::constant(1, 1) - UPoly::variable(1, 1)});
    CHECK(flipped == bj * Rational(j % 2 == 0 ? 1 : -1));
  }
  CHECK(bernoulli_poly(2) == UPoly::univariate({R(1, 6), R(-1), R(1)}));
}

TEST_CASE("simplex integration matches iterated antiderivatives") {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const int k = 1 + t % 4;
    UPoly f(k);
    for (int term = 0; term < 3; ++term) {
      UPoly m = UPoly::constant(k, rng.coefficient());
      for (int i = 1; i <= k; ++i) m = m * UPoly::variable(k, i).pow(static_cast<unsigned>(rng.uniform(0, 2)));
      f += m;
    }
    CHECK(simplex_integrate(f, k) == oracle::simplex(f, k));
  }
  // vol Δ_k = 1/k!
  for (int k = 0; k <= 6; ++k) CHECK(simplex_integrate(UPoly::constant(k, 1), k) == Rational(1) / factorial(k));
}

TEST_CASE("powers of b1 over the cube") {
  for (int p = 0; p <= 6; ++p) {
    // ∫_{-1/2}^{1/2} x^p dx
    Rational expect = 0;
    if (p % 2 == 0) {
      expect = Rational(2) / (p + 1);
      for (int i = 0; i <= p; ++i) expect /= 2;
    }
    const std::vector<B1Factor> one{{0, 1, p}};
    const std::vector<B1Factor> two{{1, 2, p}};
    CHECK(cube_integrate(one, 1) == expect);
    CHECK(cube_integrate(two, 2) == expect);
  }
}

TEST_CASE("cube integral is the sum over ordering chambers") {
  const std::vector<B1Factor> f{{1, 2, 1}, {2, 3, 2}, {0, 3, 1}};
  Rational total = 0;
  std::vector<int> sigma{1, 2, 3};
  do total += region_integrate(f, Region::from_permutation(sigma));
  while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(cube_integrate(f, 3) == total);
  // b1 is odd about 0, so flipping u ↦ 1 − u negates a product of an odd count
  CHECK(cube_integrate(std::vector<B1Factor>{{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}, 3) == 0);
}

TEST_CASE("closed cycle weights") {
  const auto b = oracle::bernoulli(8);
  for (int l = 2; l <= 6; ++l) {
    const Rational bl = b[static_cast<std::size_t>(l)] / factorial(l);
    const Rational sign = l % 2 == 0 ? 1 : -1;
    CHECK_MESSAGE(cycle_weight(l) == -sign * bl, "l=" << l);
  }
  CHECK(cycle_weight(2) == R(-1, 12));
  CHECK(cycle_weight(4) == R(1, 720));
  CHECK(cycle_weight(6) == R(-1, 30240));
}

TEST_CASE("periodic bernoulli functions") {
  const auto b1 = bernoulli_function(1);
  CHECK(b1.evaluate(R(1, 4)) == R(-1, 4));
  CHECK(b1.evaluate(R(-1, 4)) == R(1, 4));
  CHECK(b1.evaluate(R(5, 4)) == R(-1, 4));
  for (int j = 2; j <= 5; ++j) CHECK(bernoulli_function(j).derivative() == bernoulli_function(j - 1) * Rational(j));
}

TEST_CASE("convolution powers of b1") {
  const auto minus_b1 = bernoulli_function(1) * Rational(-1);
  for (int j = 1; j <= 4; ++j) {
    const auto conv = power_convolve(minus_b1, j) * (Rational(-1) * factorial(j));
    CHECK_MESSAGE(conv == bernoulli_function(j), "j=" << j << " got " << conv.to_string());
  }
  CHECK(circle_convolve(bernoulli_function(2), bernoulli_function(3)) ==
        circle_convolve(bernoulli_function(3), bernoulli_function(2)));
  CHECK(circle_convolve(bernoulli_function(1), PiecewisePoly::constant(3)) == PiecewisePoly::constant(0));
}

TEST_CASE("piecewise evaluation") {
  const PiecewisePoly f({R(0), R(1, 2), R(1)}, {UPoly::univariate({R(1)}), UPoly::univariate({R(0), R(1)})});
  CHECK(f.locate(R(1, 3)) == 0);
  CHECK(f.locate(R(1, 2)) == 1);
  CHECK(f.evaluate(R(3, 4)) == R(3, 4));
  CHECK(f.evaluate(R(-1, 4)) == R(3, 4));
  CHECK(frac(R(-7, 3)) == R(2, 3));
  CHECK((f - f) == PiecewisePoly::constant(0));
}
