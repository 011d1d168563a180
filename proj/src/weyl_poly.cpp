#include "weylcyc/weyl_poly.hpp"

#include <functional>

#include "weylcyc/errors.hpp"
#include "weylcyc/limits.hpp"

namespace weylcyc {

void check_degree(int degree, const char* where) {
  if (degree > limits().degree_cap) {
    throw CapExceeded(std::string(where) + ": degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(limits().degree_cap));
  }
}

WeylPoly::WeylPoly(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw InvalidArgument("rank n must be in 1.." + std::to_string(kMaxRank));
}

WeylPoly WeylPoly::constant(int n, const Rational& c) {
  WeylPoly r(n);
  r.add_term(Monomial{}, c);
  return r;
}

WeylPoly WeylPoly::variable(int n, int var_index) {
  if (var_index < 1 || var_index > 2 * n) throw InvalidArgument("variable index out of range");
  Monomial m;
  m.exps[var_index - 1] = 1;
  return monomial(n, m);
}

WeylPoly WeylPoly::monomial(int n, const Monomial& m, const Rational& c) {
  WeylPoly r(n);
  for (int i = 2 * n; i < kMaxVars; ++i)
    if (m.exps[i] != 0) throw DimensionMismatch("monomial uses variables beyond 2n");
  check_degree(m.degree(), "monomial");
  r.add_term(m, c);
  return r;
}

bool WeylPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int WeylPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool WeylPoly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return !terms_.empty();
}

Rational WeylPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational WeylPoly::constant_term() const { return coefficient(Monomial{}); }

WeylPoly WeylPoly::reduced() const {
  WeylPoly r = *this;
  r.terms_.erase(Monomial{});
  return r;
}

WeylPoly WeylPoly::homogeneous_part(int d) const {
  WeylPoly r(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

void WeylPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void WeylPoly::check_rank(const WeylPoly& o, const char* what) {
  if (n_ == 0) {
    n_ = o.n_;
  } else if (o.n_ != 0 && o.n_ != n_) {
    throw DimensionMismatch(std::string(what) + ": rank mismatch " + std::to_string(n_) + " vs " +
                            std::to_string(o.n_));
  }
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& o) {
  check_rank(o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& o) {
  check_rank(o, "sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylPoly& WeylPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WeylPoly operator*(const WeylPoly& a, const WeylPoly& b) {
  WeylPoly r = a.n_ != 0 ? WeylPoly(a.n_) : WeylPoly();
  r.check_rank(b, "mul");
  if (a.is_zero() || b.is_zero()) return r;
  check_degree(a.degree() + b.degree(), "mul");
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

bool operator<(const WeylPoly& a, const WeylPoly& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return a.terms_ < b.terms_;
}

std::string WeylPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (int i = 0; i < 2 * n_; ++i) {
      if (m.exps[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += (i % 2 == 0 ? "p" : "q") + std::to_string(i / 2 + 1);
      if (m.exps[i] > 1) vars += "^" + std::to_string(m.exps[i]);
    }
    if (vars.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += vars;
    } else {
      s += mag.get_str() + "*" + vars;
    }
  }
  return s;
}

WeylPoly partial_derivative(const WeylPoly& a, int var_index) {
  if (var_index < 1 || var_index > a.num_vars()) throw InvalidArgument("partial_derivative: index out of range");
  WeylPoly r(a.n());
  const int i = var_index - 1;
  for (const auto& [m, c] : a.terms()) {
    if (m.exps[i] == 0) continue;
    Monomial d = m;
    --d.exps[i];
    r.add_term(d, c * m.exps[i]);
  }
  return r;
}

Rational eval_at_zero(const WeylPoly& a) { return a.constant_term(); }

namespace {

// falling factorial e (e-1) ... (e-k+1)
Rational falling(int e, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= e - i;
  return r;
}

}  // namespace

WeylPoly moyal_product(const WeylPoly& a, const WeylPoly& b) {
  if (a.n() != b.n()) throw DimensionMismatch("moyal_product: rank mismatch");
  const int n = a.n();
  WeylPoly r(n);
  if (a.is_zero() || b.is_zero()) return r;
  check_degree(a.degree() + b.degree(), "moyal_product");

  // α = Σ ω^{μν} ∂_μ ⊗ ∂_ν = Σ_l (∂_{q_l} ⊗ ∂_{p_l} − ∂_{p_l} ⊗ ∂_{q_l}); exp(α/2) factorizes over l.
  // For each l pick s = #(∂q⊗∂p) and t = #(∂p⊗∂q).
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::function<void(int, Monomial, Monomial, Rational)> rec = [&](int l, Monomial ra, Monomial rb,
                                                                       Rational coef) {
        if (l == n) {
          r.add_term(ra + rb, coef);
          return;
        }
        const int ap = ma.exps[2 * l], aq = ma.exps[2 * l + 1];
        const int bp = mb.exps[2 * l], bq = mb.exps[2 * l + 1];
        for (int s = 0; s <= std::min(aq, bp); ++s) {
          for (int t = 0; t <= std::min(ap, bq); ++t) {
            Rational c = coef * falling(aq, s) * falling(bp, s) * falling(ap, t) * falling(bq, t);
            c /= factorial(s) * factorial(t);
            mpq_div_2exp(c.get_mpq_t(), c.get_mpq_t(), static_cast<unsigned long>(s + t));
            if (t % 2 == 1) c = -c;
            Monomial na = ra, nb = rb;
            na.exps[2 * l + 1] = static_cast<std::uint8_t>(aq - s);
            nb.exps[2 * l] = static_cast<std::uint8_t>(bp - s);
            na.exps[2 * l] = static_cast<std::uint8_t>(ap - t);
            nb.exps[2 * l + 1] = static_cast<std::uint8_t>(bq - t);
            rec(l + 1, na, nb, c);
          }
        }
      };
      rec(0, ma, mb, ca * cb);
    }
  }
  return r;
}

WeylPoly moyal_bracket(const WeylPoly& a, const WeylPoly& b) { return moyal_product(a, b) - moyal_product(b, a); }

WeylPoly substitute_linear(const WeylPoly& a, const QMatrix& g) {
  const int v = a.num_vars();
  if (g.rows() != static_cast<std::size_t>(v) || g.cols() != static_cast<std::size_t>(v))
    throw DimensionMismatch("substitute_linear: matrix size must be 2n");
  std::vector<WeylPoly> images;
  for (int k = 0; k < v; ++k) {
    WeylPoly img(a.n());
    for (int l = 0; l < v; ++l)
      if (g(k, l) != 0) img += g(k, l) * WeylPoly::variable(a.n(), l + 1);
    images.push_back(std::move(img));
  }
  WeylPoly r(a.n());
  for (const auto& [m, c] : a.terms()) {
    WeylPoly term = WeylPoly::constant(a.n(), c);
    for (int k = 0; k < v; ++k)
      for (int e = 0; e < m.exps[k]; ++e) term = term * images[k];
    r += term;
  }
  return r;
}

}  // namespace weylcyc
