#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "weylcyc/cochain.hpp"
#include "weylcyc/tau.hpp"
#include "weylcyc/matrix_element.hpp"
#include "weylcyc/qmatrix.hpp"
#include "weylcyc/symplectic.hpp"

namespace weylcyc {

// x ⊗ 𝟙 + 1 ⊗ M in h = sp_2n ⊕ gl_r.
struct HElement {
  SpElement sp;
  QMatrix gl;

  HElement(SpElement x, QMatrix m) : sp(std::move(x)), gl(std::move(m)) {}
  static HElement zero(int n, int r) { return HElement(SpElement::zero(n), QMatrix(r, r)); }

  int n() const { return sp.n(); }
  int r() const { return static_cast<int>(gl.rows()); }
  bool is_zero() const { return sp.is_zero() && gl.is_zero(); }
  MatrixElement embed() const;

  friend HElement operator-(const HElement& a, const HElement& b);
  friend bool operator==(const HElement& a, const HElement& b) { return a.sp == b.sp && a.gl == b.gl; }
  std::string to_string() const;
};

// Quadratic part of tr(v)/r on the sp side, value at 0 on the gl side.
HElement pr_projection(const MatrixElement& v);

// C(u, v) = [pr u, pr v] − pr [u, v]
HElement curvature(const MatrixElement& u, const MatrixElement& v);

enum class SeriesKind { Ahat, Ch, AhatCh };

// h-invariant power series on sp_2n ⊕ gl_r, truncated at total degree N.
//   Â(x)  = exp(−Σ_{l≥2} (−1)^l B_l / (2l·l!) tr(x^l)), tr in the defining rep of sp_2n
//   Ch(M) = tr(e^M)
class InvariantPolySeries {
 public:
  InvariantPolySeries(SeriesKind kind, int N);

  SeriesKind kind() const { return kind_; }
  int truncation() const { return N_; }
  std::string name() const;

  // P_0(h) .. P_N(h) from a univariate truncated series in s for P(s·h).
  std::vector<Rational> components(const HElement& h) const;
  Rational component(int k, const HElement& h) const;

  // Coefficient of t_1⋯t_k in P(Σ t_i args_i).
  Rational polarized(std::span<const HElement> args) const;

 private:
  SeriesKind kind_;
  int N_;
};

InvariantPolySeries ahat_series(int N);
InvariantPolySeries chern_character(int N);
InvariantPolySeries ahatch(int N);

Rational polarize_eval(const InvariantPolySeries& P, int k, std::span<const HElement> args);

// Â components of a matrix x given exp(−Σ (−1)^l B_l/(2l·l!) tr(x^l)) with the
// plain matrix trace. On gl_n this is the halved-exponent variant, whose
// square is Â on the sp_2n embedding.
std::vector<Rational> ahat_trace_components(const QMatrix& x, int N);

// χ(P_k)(v_1..v_2k) = 1/(k! 2^k) Σ_σ sgn σ P(C(v_σ1, v_σ2), ..).
// r is the matrix size, needed only when k = 0 (P_0 = r); 0 means "take it from vs".
Rational chern_weil_chi(const InvariantPolySeries& P, int k, std::span<const MatrixElement> vs, int r = 0);

// ev_1(φ)(v_1..v_k) = φ(1 ⊗ v_1 ∧ .. ∧ v_k)
template <class E>
Rational ev1(const Cochain<E>& phi, const std::vector<E>& vs) {
  if (static_cast<int>(vs.size()) != phi.degree()) throw DegreeMismatch("ev1: argument count must equal degree");
  return phi(wedge_embed(AlgebraTraits<E>::unit(phi.shape()), vs));
}

// Lie cochain with trivial coefficients, as a black box on argument lists.
template <class E>
using LieCochain = std::function<Rational(const std::vector<E>&)>;

// (dφ)(x_1..x_{m+1}) = Σ_{i<j} (−1)^{i+j} φ([x_i, x_j], x_1, .. x̂_i .. x̂_j ..)
template <class E, class Bracket>
Rational ce_differential(const LieCochain<E>& phi, const std::vector<E>& xs, Bracket bracket) {
  Rational total = 0;
  const std::size_t m = xs.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<E> args{bracket(xs[i], xs[j])};
      for (std::size_t l = 0; l < m; ++l)
        if (l != i && l != j) args.push_back(xs[l]);
      const Rational v = phi(args);
      total += ((i + j) % 2 == 0) ? v : Rational(-v);
    }
  return total;
}

// h_m(a_1..a_m) = μ ∫_{[0,1]^m} Π_{i<j} exp(b_1(u_j − u_i) α_ji)(1 ⊗ a_1 ⊗ .. ⊗ a_m).
Rational hm_oracle(std::span<const SpElement> args);

// The three generator shapes of W_{n,r} used for the cochain-level comparison.
class WnrElement {
 public:
  enum class Kind { Linear, Cubic, QTimesMatrix };

  static WnrElement linear(int n, int r, int a);                   // p_a ⊗ 𝟙
  static WnrElement cubic(int n, int r, int a, int b, int c);      // p_a q_b q_c ⊗ 𝟙
  static WnrElement q_matrix(int n, int a, const QMatrix& m);  // q_a ⊗ M

  Kind kind() const { return kind_; }
  const MatrixElement& element() const { return element_; }
  std::string to_string() const { return element_.to_string(); }

 private:
  WnrElement(Kind k, MatrixElement e) : kind_(k), element_(std::move(e)) {}
  Kind kind_;
  MatrixElement element_;
};

struct ChernWeilReport {
  enum class Relation { Equal, Opposite, BothZero, Unrelated };
  int n = 0, r = 0, k = 0;
  Rational lhs;  // ev_1(τ^r_2k)(tuple)
  Rational rhs;  // χ(P_k)(tuple)
  Relation relation = Relation::Unrelated;
};

std::string to_string(ChernWeilReport::Relation rel);

// Shared family per (n, r) so repeated checks reuse cocycle caches.
const TauFamily<MatrixElement>& matrix_tau_family(int n, int r);

ChernWeilReport verify_thm13(int n, int r, int k, std::span<const WnrElement> tuple);

}  // namespace weylcyc
