#pragma once

#include <vector>

#include "weylcyc/qmatrix.hpp"
#include "weylcyc/weyl_poly.hpp"

namespace weylcyc {

// Homogeneous quadratic polynomial, i.e. an element of sp_2n ⊂ A_2n.
// The zero polynomial is accepted as the zero of the Lie algebra.
class SpElement {
 public:
  explicit SpElement(WeylPoly poly);
  static SpElement zero(int n) { return SpElement(WeylPoly(n)); }

  const WeylPoly& poly() const { return poly_; }
  int n() const { return poly_.n(); }
  bool is_zero() const { return poly_.is_zero(); }

  friend bool operator==(const SpElement& a, const SpElement& b) = default;

 private:
  WeylPoly poly_;
};

// ω_ij for ω = Σ dp_j ∧ dq_j in the basis y_1..y_2n.
QMatrix symplectic_form(int n);
// ω^{ij}, with Σ_j ω_ij ω^{jk} = δ_i^k.
QMatrix symplectic_form_inverse(int n);
// P with [y_i, y_j] = P_ij under the Moyal bracket (equal to ω^{ij}).
QMatrix poisson_tensor(int n);

// All y_i y_j with i ≤ j, graded-lex order; n(2n+1) elements.
std::vector<SpElement> sp_basis(int n);

// Matrix of y ↦ [h, y] in the basis y_1..y_2n: [h, y_k] = Σ_l M(l,k) y_l.
QMatrix quad_to_sp_matrix(const SpElement& h);

// x ∈ gl_n ↦ Σ_ij x_ij p_i q_j.
SpElement gl_embed(const QMatrix& x);

// gᵀ ω g == ω
bool is_symplectic(const QMatrix& g);

}  // namespace weylcyc
