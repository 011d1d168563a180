#include "weylcyc/symplectic.hpp"

#include "weylcyc/errors.hpp"

namespace weylcyc {

SpElement::SpElement(WeylPoly poly) : poly_(std::move(poly)) {
  if (!poly_.is_zero() && !poly_.is_homogeneous(2))
    throw InvalidArgument("sp element must be homogeneous quadratic: " + poly_.to_string());
}

QMatrix symplectic_form(int n) {
  QMatrix w(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    w(2 * j, 2 * j + 1) = 1;
    w(2 * j + 1, 2 * j) = -1;
  }
  return w;
}

QMatrix symplectic_form_inverse(int n) { return -symplectic_form(n); }

QMatrix poisson_tensor(int n) { return symplectic_form_inverse(n); }

std::vector<SpElement> sp_basis(int n) {
  std::vector<SpElement> basis;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i; j <= 2 * n; ++j)
      basis.emplace_back(WeylPoly::variable(n, i) * WeylPoly::variable(n, j));
  return basis;
}

QMatrix quad_to_sp_matrix(const SpElement& h) {
  const int n = h.n();
  const int v = 2 * n;
  QMatrix m(v, v);
  for (int k = 1; k <= v; ++k) {
    WeylPoly img = moyal_bracket(h.poly(), WeylPoly::variable(n, k));
    for (int l = 1; l <= v; ++l) {
      Monomial mono;
      mono.exps[l - 1] = 1;
      m(l - 1, k - 1) = img.coefficient(mono);
    }
  }
  return m;
}

SpElement gl_embed(const QMatrix& x) {
  if (!x.is_square() || x.rows() < 1) throw DimensionMismatch("gl_embed: square matrix required");
  const int n = static_cast<int>(x.rows());
  WeylPoly h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x(i, j) != 0) h += x(i, j) * (WeylPoly::p(n, i + 1) * WeylPoly::q(n, j + 1));
  return SpElement(std::move(h));
}

bool is_symplectic(const QMatrix& g) {
  if (!g.is_square() || g.rows() % 2 != 0) return false;
  const QMatrix w = symplectic_form(static_cast<int>(g.rows() / 2));
  return g.transpose() * w * g == w;
}

}  // namespace weylcyc
