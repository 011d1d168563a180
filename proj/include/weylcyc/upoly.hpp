#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylcyc/rational.hpp"

namespace weylcyc {

inline constexpr int kMaxIntegrationVars = 12;

// Polynomial over the rationals in integration variables u_1..u_k (1-based
// in the API, 0-based in the exponent array).
class UPoly {
 public:
  using Exps = std::array<std::uint8_t, kMaxIntegrationVars>;
  using Terms = std::map<Exps, Rational>;

  UPoly() = default;
  explicit UPoly(int k);

  static UPoly constant(int k, const Rational& c);
  static UPoly variable(int k, int i);  // u_i
  // Univariate polynomial Σ coeffs[e] u^e (k = 1).
  static UPoly univariate(const std::vector<Rational>& coeffs);

  int k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int degree_in(int i) const;

  void add_term(const Exps& e, const Rational& c);

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.terms_ == b.terms_; }

  UPoly pow(unsigned e) const;
  UPoly derivative(int i) const;
  UPoly antiderivative(int i) const;  // zero constant of integration
  Rational evaluate(const std::vector<Rational>& point) const;
  // Replace u_i by images[i-1] (all images share a common variable count).
  UPoly compose(const std::vector<UPoly>& images) const;
  // Replace u_i by the constant c, keeping the variable count.
  UPoly evaluate_at(int i, const Rational& c) const;

  std::string to_string() const;

 private:
  int k_ = 0;
  Terms terms_;
};

}  // namespace weylcyc
