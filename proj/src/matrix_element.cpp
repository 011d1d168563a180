#include "weylcyc/matrix_element.hpp"

#include <algorithm>

#include "weylcyc/errors.hpp"

namespace weylcyc {

MatrixElement::MatrixElement(int n, int r) : n_(n), r_(r) {
  if (r < 1) throw InvalidArgument("matrix size r must be positive");
  entries_.assign(static_cast<std::size_t>(r * r), WeylPoly(n));
}

MatrixElement MatrixElement::identity(int n, int r) { return scalar(WeylPoly::constant(n, 1), r); }

MatrixElement MatrixElement::scalar(const WeylPoly& f, int r) {
  MatrixElement m(f.n(), r);
  for (int i = 0; i < r; ++i) m.at(i, i) = f;
  return m;
}

MatrixElement MatrixElement::tensor(const WeylPoly& f, const QMatrix& c) {
  if (!c.is_square()) throw DimensionMismatch("tensor: matrix must be square");
  const int r = static_cast<int>(c.rows());
  MatrixElement m(f.n(), r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (c(i, j) != 0) m.at(i, j) = c(i, j) * f;
  return m;
}

bool MatrixElement::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const WeylPoly& p) { return p.is_zero(); });
}

int MatrixElement::degree() const {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

QMatrix MatrixElement::constant_part() const {
  QMatrix c(static_cast<std::size_t>(r_), static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) c(i, j) = at(i, j).constant_term();
  return c;
}

MatrixElement MatrixElement::reduced() const {
  MatrixElement m = *this;
  Rational shift = constant_part().trace() / r_;
  if (shift != 0)
    for (int i = 0; i < r_; ++i) m.at(i, i) -= WeylPoly::constant(n_, shift);
  return m;
}

void MatrixElement::check_shape(const MatrixElement& o, const char* what) const {
  if (n_ != o.n_ || r_ != o.r_) throw DimensionMismatch(std::string(what) + ": shape mismatch");
}

MatrixElement& MatrixElement::operator+=(const MatrixElement& o) {
  check_shape(o, "matrix add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

MatrixElement& MatrixElement::operator-=(const MatrixElement& o) {
  check_shape(o, "matrix sub");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

MatrixElement& MatrixElement::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

bool operator<(const MatrixElement& a, const MatrixElement& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.r_ != b.r_) return a.r_ < b.r_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

std::string MatrixElement::to_string() const {
  std::string s = "{";
  for (int i = 0; i < r_; ++i) {
    s += i ? ", {" : "{";
    for (int j = 0; j < r_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += "}";
  }
  return s + "}";
}

MatrixElement mat_moyal_mul(const MatrixElement& a, const MatrixElement& b) {
  if (a.n() != b.n() || a.r() != b.r()) throw DimensionMismatch("mat_moyal_mul: shape mismatch");
  const int r = a.r();
  MatrixElement c(a.n(), r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < r; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += moyal_product(a.at(i, k), b.at(k, j));
    }
  return c;
}

MatrixElement mat_bracket(const MatrixElement& a, const MatrixElement& b) {
  return mat_moyal_mul(a, b) - mat_moyal_mul(b, a);
}

WeylPoly mat_trace(const MatrixElement& a) {
  WeylPoly t(a.n());
  for (int i = 0; i < a.r(); ++i) t += a.at(i, i);
  return t;
}

}  // namespace weylcyc
