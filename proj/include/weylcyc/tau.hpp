#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "weylcyc/cochain.hpp"
#include "weylcyc/integrate.hpp"
#include "weylcyc/weyl_poly.hpp"

namespace weylcyc {

// Edge multiplicities m_ij for 0 ≤ i < j ≤ K, stored in pair_index order.
using Multiplicity = std::vector<std::uint8_t>;

inline std::size_t pair_index(int i, int j, int slots) {
  // row-major over i < j with slots = K + 1 positions
  return static_cast<std::size_t>(i * slots - i * (i + 1) / 2 + (j - i - 1));
}
inline std::size_t pair_count(int slots) { return static_cast<std::size_t>(slots * (slots - 1) / 2); }

// One surviving term of μ ∘ S ∘ π on a monomial word: the determinant column
// per position 1..K (empty if no determinant was applied), the edge
// multiplicities, and the rational coefficient multiplying the integral of
// Π b_1(u_j − u_i)^{m_ij}.
struct DerivPlan {
  std::vector<int> sigma;
  Multiplicity multiplicity;
  Rational coefficient;

  std::vector<B1Factor> factors(int slots) const;
};

// Weights of μ ∘ exp(Σ_{i<j} b_1(u_j − u_i) α_ji) on a monomial word, grouped
// by multiplicity pattern; the μ factor Π h! is included. `budget` is
// decremented per enumerated transport and CapExceeded is thrown at zero.
std::map<Multiplicity, Rational> contraction_weights(std::span<const Monomial> word, int n, std::size_t& budget);

// Determinant of derivatives on positions 1..2n: signed derivative words.
std::vector<std::pair<Rational, ChainWord<WeylPoly>>> pi_apply(const ChainWord<WeylPoly>& w);

// Plans of μ ∘ S on a (post-determinant) monomial word with unit coefficient.
std::vector<DerivPlan> s_expand(std::span<const Monomial> word, int n);

// τ_2n = μ ∘ S ∘ π, integrated over σ(Δ_2n) (σ = id gives the standard simplex).
// Copies share caches; evaluation is thread-safe.
class TauCocycle {
 public:
  explicit TauCocycle(int n);
  TauCocycle(int n, std::vector<int> chamber);

  int n() const;
  const std::vector<int>& chamber() const;

  Rational evaluate(const Chain<WeylPoly>& c) const;
  Rational evaluate_word(const ChainWord<WeylPoly>& w) const;  // raw word, constants allowed
  Rational evaluate_monomials(const std::vector<Monomial>& word) const;
  std::vector<DerivPlan> plans(const std::vector<Monomial>& word) const;
  Cochain<WeylPoly> cochain() const;

  std::size_t plans_enumerated() const;
  std::size_t integrals_cached() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Shared standard-simplex instance per n.
const TauCocycle& tau_cocycle(int n);

Rational tau_eval(int n, const Chain<WeylPoly>& c);
Rational tau_sigma_eval(int n, std::span<const int> sigma, const Chain<WeylPoly>& c);

// τ^r(A_0, .., A_K) = Σ over index cycles of τ((A_0)_{i0 i1}, (A_1)_{i1 i2}, .., (A_K)_{iK i0}).
Rational tau_matrix_word(const TauCocycle& tau, const ChainWord<MatrixElement>& w);
Cochain<MatrixElement> matrix_cocycle(int n, int r);
Rational tau_matrix_eval(int n, int r, const Chain<MatrixElement>& c);

template <class E>
Cochain<E> top_cocycle(int n, int r);

template <>
inline Cochain<WeylPoly> top_cocycle<WeylPoly>(int n, int) {
  return tau_cocycle(n).cochain();
}
template <>
inline Cochain<MatrixElement> top_cocycle<MatrixElement>(int n, int r) {
  return matrix_cocycle(n, r);
}

// {τ_2k}_{0≤k≤n} with τ_2k = (−ι_ω)^{n−k} τ_2n / (n−k)!. τ_w = Σ_k u^{n−k} τ_2k
// for W = Q[u], w = 1.
template <class E>
class TauFamily {
 public:
  TauFamily(int n, int r) : n_(n), r_(r) {
    components_.resize(static_cast<std::size_t>(n + 1), Cochain<E>::zero(0, {n, r}));
    Cochain<E> cur = top_cocycle<E>(n, r).memoized();
    components_[static_cast<std::size_t>(n)] = cur;
    Rational fact = 1;
    for (int j = 1; j <= n; ++j) {
      cur = (Rational(-1) * iota_omega(cur)).memoized();
      fact *= j;
      components_[static_cast<std::size_t>(n - j)] = (Rational(1 / fact) * cur).memoized();
    }
  }

  int n() const { return n_; }
  int r() const { return r_; }
  const Cochain<E>& component(int k) const {
    if (k < 0 || k > n_) throw DegreeMismatch("TauFamily component out of range");
    return components_[static_cast<std::size_t>(k)];
  }

 private:
  int n_;
  int r_;
  std::vector<Cochain<E>> components_;
};

}  // namespace weylcyc
