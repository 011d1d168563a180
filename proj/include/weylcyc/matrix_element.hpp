#pragma once

#include <string>
#include <vector>

#include "weylcyc/qmatrix.hpp"
#include "weylcyc/weyl_poly.hpp"

namespace weylcyc {

// Element of A_2n ⊗ gl_r: an r×r grid of Weyl polynomials.
class MatrixElement {
 public:
  MatrixElement() = default;
  MatrixElement(int n, int r);  // zero

  static MatrixElement identity(int n, int r);
  static MatrixElement scalar(const WeylPoly& f, int r);         // f ⊗ 𝟙
  static MatrixElement tensor(const WeylPoly& f, const QMatrix& m);  // f ⊗ m
  static MatrixElement constant(int n, const QMatrix& m) { return tensor(WeylPoly::constant(n, 1), m); }

  int n() const { return n_; }
  int r() const { return r_; }
  WeylPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i * r_ + j)]; }
  const WeylPoly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * r_ + j)]; }

  bool is_zero() const;
  int degree() const;
  QMatrix constant_part() const;  // value at y = 0
  // Subtracts (tr A(0) / r)·𝟙, the representative modulo the unit.
  MatrixElement reduced() const;

  MatrixElement& operator+=(const MatrixElement& o);
  MatrixElement& operator-=(const MatrixElement& o);
  MatrixElement& operator*=(const Rational& c);
  friend MatrixElement operator+(MatrixElement a, const MatrixElement& b) { return a += b; }
  friend MatrixElement operator-(MatrixElement a, const MatrixElement& b) { return a -= b; }
  friend MatrixElement operator*(MatrixElement a, const Rational& c) { return a *= c; }
  friend MatrixElement operator*(const Rational& c, MatrixElement a) { return a *= c; }
  friend MatrixElement operator-(MatrixElement a) { return a *= Rational(-1); }

  friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const MatrixElement& a, const MatrixElement& b);

  // "{{a, b}, {c, d}}" in the polynomial grammar.
  std::string to_string() const;

 private:
  void check_shape(const MatrixElement& o, const char* what) const;
  int n_ = 0;
  int r_ = 0;
  std::vector<WeylPoly> entries_;
};

MatrixElement mat_moyal_mul(const MatrixElement& a, const MatrixElement& b);
MatrixElement mat_bracket(const MatrixElement& a, const MatrixElement& b);
WeylPoly mat_trace(const MatrixElement& a);

}  // namespace weylcyc
