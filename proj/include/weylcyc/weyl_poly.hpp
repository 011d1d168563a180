#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "weylcyc/qmatrix.hpp"
#include "weylcyc/rational.hpp"

namespace weylcyc {

inline constexpr int kMaxRank = 4;  // n ≤ 4, i.e. at most 8 variables
inline constexpr int kMaxVars = 2 * kMaxRank;

// Exponent vector over y_1..y_2n, stored 0-based (exps[0] is y_1 = p_1).
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exps{};

  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  // Graded lexicographic: lower total degree first, then lexicographic.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps <=> b.exps;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  friend Monomial operator+(Monomial a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) a.exps[i] = static_cast<std::uint8_t>(a.exps[i] + b.exps[i]);
    return a;
  }
};

// Variable index helpers (1-based, as in y_1..y_2n).
inline constexpr int p_index(int j) { return 2 * j - 1; }
inline constexpr int q_index(int j) { return 2 * j; }

// Element of the Weyl algebra A_2n, stored as a commutative polynomial in
// y_1..y_2n (y_{2j-1} = p_j, y_{2j} = q_j). Multiplication via operator* is the
// commutative one; the noncommutative product is moyal_product().
class WeylPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  WeylPoly() = default;  // n = 0 placeholder; adopts the rank of the first operand it meets
  explicit WeylPoly(int n);

  static WeylPoly constant(int n, const Rational& c);
  static WeylPoly variable(int n, int var_index);  // 1-based y index
  static WeylPoly p(int n, int j) { return variable(n, p_index(j)); }
  static WeylPoly q(int n, int j) { return variable(n, q_index(j)); }
  static WeylPoly monomial(int n, const Monomial& m, const Rational& c = 1);

  int n() const { return n_; }
  int num_vars() const { return 2 * n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int d) const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  WeylPoly reduced() const;  // constant term removed
  WeylPoly homogeneous_part(int d) const;

  void add_term(const Monomial& m, const Rational& c);

  WeylPoly& operator+=(const WeylPoly& o);
  WeylPoly& operator-=(const WeylPoly& o);
  WeylPoly& operator*=(const Rational& c);

  friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
  friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }
  friend WeylPoly operator*(WeylPoly a, const Rational& c) { return a *= c; }
  friend WeylPoly operator*(const Rational& c, WeylPoly a) { return a *= c; }
  friend WeylPoly operator-(WeylPoly a) { return a *= Rational(-1); }
  friend WeylPoly operator*(const WeylPoly& a, const WeylPoly& b);  // commutative product

  friend bool operator==(const WeylPoly& a, const WeylPoly& b) {
    return a.terms_ == b.terms_ && (a.n_ == b.n_ || a.is_zero());
  }
  friend bool operator<(const WeylPoly& a, const WeylPoly& b);

  // Pretty form in the parse grammar, highest degree first: "p1^2*q1 - 3/2*q2".
  std::string to_string() const;

 private:
  void check_rank(const WeylPoly& o, const char* what);
  int n_ = 0;
  Terms terms_;
};

WeylPoly partial_derivative(const WeylPoly& a, int var_index);
Rational eval_at_zero(const WeylPoly& a);

// a ⋆ b = mult ∘ exp(α/2), α = Σ ω^{μν} ∂_μ ⊗ ∂_ν with ω^{μν} the inverse of
// ω = Σ dp_j ∧ dq_j. Hence p ⋆ q = pq − 1/2 and [p, q] = −1.
WeylPoly moyal_product(const WeylPoly& a, const WeylPoly& b);
WeylPoly moyal_bracket(const WeylPoly& a, const WeylPoly& b);

// y ↦ g y: every variable y_k is replaced by Σ_l g(k,l) y_l.
WeylPoly substitute_linear(const WeylPoly& a, const QMatrix& g);

// Throws CapExceeded when deg > configured cap.
void check_degree(int degree, const char* where);

}  // namespace weylcyc
