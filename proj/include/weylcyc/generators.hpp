#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weylcyc/cochain.hpp"
#include "weylcyc/qmatrix.hpp"

namespace weylcyc {

// Seeded source for sampled suites. Draws use plain modulo on mt19937_64 so
// a given seed produces the same samples on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  int uniform(int lo, int hi) { return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (eng_() & 1U) != 0; }
  // Nonzero a/b with |a| ≤ 3, 1 ≤ b ≤ 3.
  Rational coefficient();

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[eng_() % i]);
  }

 private:
  std::mt19937_64 eng_;
};

// All monomials in y_1..y_2n with min_deg ≤ degree ≤ max_deg, graded-lex order.
std::vector<Monomial> monomials(int n, int min_deg, int max_deg);

WeylPoly random_poly(Rng& rng, int n, int min_deg, int max_deg, int terms);
// a_0 of degree 0..max_deg, later slots of degree 1..max_deg.
ChainWord<WeylPoly> random_word(Rng& rng, int n, int length, int max_deg, int terms = 2);
MatrixElement random_matrix_element(Rng& rng, int n, int r, int min_deg, int max_deg, int terms);
ChainWord<MatrixElement> random_matrix_word(Rng& rng, int n, int r, int length, int max_deg, int terms = 1);

QMatrix random_matrix(Rng& rng, int rows, int cols, int range);
// Product of random block shears and block-diagonal maps; satisfies gᵀωg = ω.
QMatrix random_symplectic(Rng& rng, int n);
std::vector<int> random_permutation(Rng& rng, int k);  // values 1..k
int permutation_sign(const std::vector<int>& perm);

// φ(a_0..a_k) = Σ_t Π_i ℓ_{t,i}(a_i) with ℓ random linear functionals on
// monomials of degree ≤ max_deg; ℓ_{t,i}(1) = 0 for i ≥ 1.
Cochain<WeylPoly> random_cochain(Rng& rng, int n, int degree, int max_deg = 4, int products = 2);

}  // namespace weylcyc
