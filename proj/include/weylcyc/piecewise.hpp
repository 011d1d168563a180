#pragma once

#include <string>
#include <vector>

#include "weylcyc/rational.hpp"
#include "weylcyc/upoly.hpp"

namespace weylcyc {

// 1-periodic function given by a univariate polynomial on each interval
// [t_i, t_{i+1}) of 0 = t_0 < ... < t_m = 1.
class PiecewisePoly {
 public:
  PiecewisePoly(std::vector<Rational> breaks, std::vector<UPoly> pieces);
  static PiecewisePoly constant(const Rational& c);
  static PiecewisePoly periodic(const UPoly& p);  // one piece on [0,1)

  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<UPoly>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }

  Rational evaluate(const Rational& t) const;
  // Piece index containing the point x ∈ [0,1).
  std::size_t locate(const Rational& x) const;
  PiecewisePoly derivative() const;
  // Adjacent identical pieces merged.
  PiecewisePoly simplified() const;

  PiecewisePoly& operator*=(const Rational& c);
  friend PiecewisePoly operator*(PiecewisePoly f, const Rational& c) { return f *= c; }
  friend PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g);
  friend PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g);
  // Equality as functions (on the common refinement of the breakpoints).
  friend bool operator==(const PiecewisePoly& f, const PiecewisePoly& g);

  std::string to_string() const;

 private:
  std::vector<Rational> breaks_;
  std::vector<UPoly> pieces_;
};

// b_j: periodic extension of B_j restricted to [0,1).
PiecewisePoly bernoulli_function(int j);

// (f*g)(t) = ∫_0^1 f(t − s) g(s) ds, exactly.
PiecewisePoly circle_convolve(const PiecewisePoly& f, const PiecewisePoly& g);

// x mod 1 in [0,1)
Rational frac(const Rational& x);

}  // namespace weylcyc
