#include "weylcyc/piecewise.hpp"

#include <algorithm>

#include "weylcyc/bernoulli.hpp"
#include "weylcyc/errors.hpp"

namespace weylcyc {

Rational frac(const Rational& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

namespace {

std::vector<Rational> merged_breaks(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Piece of f on each interval of `breaks` (a refinement of f's breaks).
std::vector<UPoly> refine(const PiecewisePoly& f, const std::vector<Rational>& breaks) {
  std::vector<UPoly> out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Rational mid = (breaks[i] + breaks[i + 1]) / 2;
    out.push_back(f.pieces()[f.locate(mid)]);
  }
  return out;
}

}  // namespace

PiecewisePoly::PiecewisePoly(std::vector<Rational> breaks, std::vector<UPoly> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (breaks_.size() < 2 || breaks_.front() != 0 || breaks_.back() != 1 || pieces_.size() + 1 != breaks_.size())
    throw InvalidArgument("piecewise polynomial needs breaks 0 = t_0 < ... < t_m = 1 and m pieces");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1])) throw InvalidArgument("breakpoints must increase strictly");
}

PiecewisePoly PiecewisePoly::constant(const Rational& c) { return periodic(UPoly::constant(1, c)); }

PiecewisePoly PiecewisePoly::periodic(const UPoly& p) { return PiecewisePoly({Rational(0), Rational(1)}, {p}); }

std::size_t PiecewisePoly::locate(const Rational& x) const {
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  const auto idx = static_cast<std::size_t>(it - breaks_.begin());
  return std::min(idx == 0 ? 0 : idx - 1, pieces_.size() - 1);
}

Rational PiecewisePoly::evaluate(const Rational& t) const {
  const Rational x = frac(t);
  return pieces_[locate(x)].evaluate({x});
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<UPoly> d;
  for (const auto& p : pieces_) d.push_back(p.derivative(1));
  return PiecewisePoly(breaks_, std::move(d));
}

PiecewisePoly PiecewisePoly::simplified() const {
  std::vector<Rational> b{breaks_.front()};
  std::vector<UPoly> p;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!p.empty() && p.back() == pieces_[i]) {
      b.back() = breaks_[i + 1];
    } else {
      p.push_back(pieces_[i]);
      b.push_back(breaks_[i + 1]);
    }
  }
  return PiecewisePoly(std::move(b), std::move(p));
}

PiecewisePoly& PiecewisePoly::operator*=(const Rational& c) {
  for (auto& p : pieces_) p *= c;
  return *this;
}

PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g) {
  auto b = merged_breaks(f.breaks_, g.breaks_);
  auto pf = refine(f, b), pg = refine(g, b);
  for (std::size_t i = 0; i < pf.size(); ++i) pf[i] += pg[i];
  return PiecewisePoly(std::move(b), std::move(pf)).simplified();
}

PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g) { return f + g * Rational(-1); }

bool operator==(const PiecewisePoly& f, const PiecewisePoly& g) {
  auto b = merged_breaks(f.breaks_, g.breaks_);
  return refine(f, b) == refine(g, b);
}

std::string PiecewisePoly::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) s += "; ";
    s += "[" + breaks_[i].get_str() + "," + breaks_[i + 1].get_str() + "): " + pieces_[i].to_string();
  }
  return s;
}

PiecewisePoly bernoulli_function(int j) { return PiecewisePoly::periodic(bernoulli_poly(j)); }

PiecewisePoly circle_convolve(const PiecewisePoly& f, const PiecewisePoly& g) {
  // Output breakpoints: a_i + b_j mod 1.
  std::vector<Rational> tb{Rational(0), Rational(1)};
  for (const auto& a : f.breaks())
    for (const auto& b : g.breaks()) tb.push_back(frac(a + b));
  std::sort(tb.begin(), tb.end());
  tb.erase(std::unique(tb.begin(), tb.end()), tb.end());

  const UPoly t = UPoly::variable(2, 1);
  const UPoly s = UPoly::variable(2, 2);

  std::vector<UPoly> out;
  for (std::size_t ti = 0; ti + 1 < tb.size(); ++ti) {
    const Rational tm = (tb[ti] + tb[ti + 1]) / 2;
    // s-breakpoints as affine functions c + e·t, e ∈ {0, 1}, ordered at t = tm.
    struct Point {
      Rational at_mid;
      Rational c;
      int e;
    };
    std::vector<Point> pts{{0, 0, 0}, {1, 1, 0}};
    for (const auto& b : g.breaks())
      if (b > 0 && b < 1) pts.push_back({b, b, 0});
    for (const auto& a : f.breaks()) {
      if (a == 1) continue;
      // s = t − a + m with s ∈ (0,1)
      const Rational sm = frac(tm - a);
      pts.push_back({sm, sm - tm, 1});
    }
    std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) { return x.at_mid < y.at_mid; });

    UPoly acc(1);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (pts[k].at_mid == pts[k + 1].at_mid) continue;
      const Rational sm = (pts[k].at_mid + pts[k + 1].at_mid) / 2;
      const Rational x = tm - sm;  // argument of f, before reduction
      const Rational xr = frac(x);
      const Rational shift = x - xr;  // integer m with f(t − s) = piece(t − s − m)
      const UPoly& fp = f.pieces()[f.locate(xr)];
      const UPoly& gp = g.pieces()[g.locate(sm)];
      UPoly integrand = fp.compose({t - s - UPoly::constant(2, shift)}) * gp.compose({s});
      UPoly anti = integrand.antiderivative(2);
      auto bound = [&](const Point& p) {
        UPoly b = UPoly::constant(1, p.c);
        if (p.e) b += UPoly::variable(1, 1);
        return b;
      };
      const UPoly tt = UPoly::variable(1, 1);
      acc += anti.compose({tt, bound(pts[k + 1])}) - anti.compose({tt, bound(pts[k])});
    }
    out.push_back(std::move(acc));
  }
  return PiecewisePoly(std::move(tb), std::move(out)).simplified();
}

}  // namespace weylcyc
