#include "weylcyc/upoly.hpp"

#include "weylcyc/errors.hpp"

namespace weylcyc {

UPoly::UPoly(int k) : k_(k) {
  if (k < 0 || k > kMaxIntegrationVars) throw CapExceeded("too many integration variables: " + std::to_string(k));
}

UPoly UPoly::constant(int k, const Rational& c) {
  UPoly p(k);
  p.add_term(Exps{}, c);
  return p;
}

UPoly UPoly::variable(int k, int i) {
  if (i < 1 || i > k) throw InvalidArgument("UPoly variable index out of range");
  UPoly p(k);
  Exps e{};
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

UPoly UPoly::univariate(const std::vector<Rational>& coeffs) {
  UPoly p(1);
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Exps e{};
    e[0] = static_cast<std::uint8_t>(d);
    p.add_term(e, coeffs[d]);
  }
  return p;
}

int UPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int UPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i - 1]));
  return d;
}

void UPoly::add_term(const Exps& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UPoly& UPoly::operator+=(const UPoly& o) {
  k_ = std::max(k_, o.k_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  k_ = std::max(k_, o.k_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.k_, b.k_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      UPoly::Exps e;
      for (int i = 0; i < kMaxIntegrationVars; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = constant(k_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

UPoly UPoly::derivative(int i) const {
  UPoly r(k_);
  for (const auto& [e, c] : terms_) {
    if (e[i - 1] == 0) continue;
    Exps d = e;
    --d[i - 1];
    r.add_term(d, c * e[i - 1]);
  }
  return r;
}

UPoly UPoly::antiderivative(int i) const {
  UPoly r(k_);
  for (const auto& [e, c] : terms_) {
    Exps d = e;
    ++d[i - 1];
    r.add_term(d, c / (e[i - 1] + 1));
  }
  return r;
}

Rational UPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) < k_) throw DimensionMismatch("UPoly::evaluate: too few coordinates");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    total += t;
  }
  return total;
}

UPoly UPoly::compose(const std::vector<UPoly>& images) const {
  if (static_cast<int>(images.size()) < k_) throw DimensionMismatch("UPoly::compose: too few images");
  int out_k = 0;
  for (const auto& im : images) out_k = std::max(out_k, im.k());
  UPoly r(out_k);
  for (const auto& [e, c] : terms_) {
    UPoly t = constant(out_k, c);
    for (int i = 0; i < k_; ++i)
      if (e[i] != 0) t = t * images[i].pow(e[i]);
    r += t;
  }
  return r;
}

UPoly UPoly::evaluate_at(int i, const Rational& c) const {
  UPoly r(k_);
  for (const auto& [e, v] : terms_) {
    Exps d = e;
    d[i - 1] = 0;
    Rational t = v;
    for (int j = 0; j < e[i - 1]; ++j) t *= c;
    r.add_term(d, t);
  }
  return r;
}

std::string UPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (int i = 0; i < k_; ++i) {
      if (e[i] == 0) continue;
      s += "*u" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

}  // namespace weylcyc
