#include "weylcyc/lie.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "weylcyc/bernoulli.hpp"
#include "weylcyc/errors.hpp"
#include "weylcyc/tau.hpp"
#include "weylcyc/integrate.hpp"
#include "weylcyc/limits.hpp"

namespace weylcyc {

MatrixElement HElement::embed() const {
  return MatrixElement::scalar(sp.poly(), r()) + MatrixElement::tensor(WeylPoly::constant(n(), 1), gl);
}

HElement operator-(const HElement& a, const HElement& b) {
  return HElement(SpElement(a.sp.poly() - b.sp.poly()), a.gl - b.gl);
}

std::string HElement::to_string() const { return "(" + sp.poly().to_string() + ", " + gl.to_string() + ")"; }

HElement pr_projection(const MatrixElement& v) {
  WeylPoly t = mat_trace(v) * Rational(1, v.r());
  return HElement(SpElement(t.homogeneous_part(2)), v.constant_part());
}

HElement curvature(const MatrixElement& u, const MatrixElement& v) {
  const MatrixElement pu = pr_projection(u).embed();
  const MatrixElement pv = pr_projection(v).embed();
  return pr_projection(mat_bracket(pu, pv)) - pr_projection(mat_bracket(u, v));
}

namespace {

// ---- univariate truncated series ----

using Series = std::vector<Rational>;  // coefficients of s^0..s^N

Series series_mul(const Series& a, const Series& b, int N) {
  Series c(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return c;
}

// exp of a series with zero constant term
Series series_exp(const Series& a, int N) {
  Series result(static_cast<std::size_t>(N + 1)), power(static_cast<std::size_t>(N + 1));
  result[0] = 1;
  power[0] = 1;
  for (int j = 1; j <= N; ++j) {
    power = series_mul(power, a, N);
    for (int i = 0; i <= N; ++i) result[static_cast<std::size_t>(i)] += power[static_cast<std::size_t>(i)] / factorial(j);
  }
  return result;
}

// Σ_l −(−1)^l B_l / (2l·l!) tr(x^l) s^l
Series ahat_log(const QMatrix& x, int N) {
  const auto B = bernoulli_numbers(std::max(N, 2));
  Series a(static_cast<std::size_t>(N + 1));
  QMatrix pw = x;
  for (int l = 2; l <= N; ++l) {
    pw = pw * x;
    Rational c = B[static_cast<std::size_t>(l)] / (2 * l * factorial(l));
    if (l % 2 == 0) c = -c;
    a[static_cast<std::size_t>(l)] = c * pw.trace();
  }
  return a;
}

Series ch_series(const QMatrix& m, int N) {
  Series c(static_cast<std::size_t>(N + 1));
  QMatrix pw = QMatrix::identity(m.rows());
  for (int j = 0; j <= N; ++j) {
    c[static_cast<std::size_t>(j)] = pw.trace() / factorial(j);
    pw = pw * m;
  }
  return c;
}

// ---- ℚ[t_1..t_k]/(t_i²): coefficient per subset mask ----

struct TAlg {
  std::vector<Rational> c;
  explicit TAlg(int k = 0) : c(std::size_t{1} << k) {}
};

TAlg talg_mul(const TAlg& a, const TAlg& b) {
  TAlg r;
  r.c.assign(a.c.size(), 0);
  for (std::size_t x = 0; x < a.c.size(); ++x) {
    if (a.c[x] == 0) continue;
    for (std::size_t y = 0; y < b.c.size(); ++y)
      if ((x & y) == 0 && b.c[y] != 0) r.c[x | y] += a.c[x] * b.c[y];
  }
  return r;
}

using TMat = std::vector<std::vector<TAlg>>;

TMat tmat_mul(const TMat& a, const TMat& b, int k) {
  const std::size_t d = a.size();
  TMat r(d, std::vector<TAlg>(d, TAlg(k)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l)
      for (std::size_t j = 0; j < d; ++j) {
        TAlg p = talg_mul(a[i][l], b[l][j]);
        for (std::size_t m = 0; m < p.c.size(); ++m) r[i][j].c[m] += p.c[m];
      }
  return r;
}

TAlg tmat_trace(const TMat& a, int k) {
  TAlg t(k);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t m = 0; m < t.c.size(); ++m) t.c[m] += a[i][i].c[m];
  return t;
}

// Σ_i t_i X_i
TMat tmat_combine(const std::vector<QMatrix>& xs, int k) {
  const std::size_t d = xs.front().rows();
  TMat r(d, std::vector<TAlg>(d, TAlg(k)));
  for (int i = 0; i < k; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) r[a][b].c[std::size_t{1} << i] += xs[static_cast<std::size_t>(i)](a, b);
  return r;
}

// exp of a nilpotent (zero constant term) element
TAlg talg_exp(const TAlg& a, int k) {
  TAlg result(k), power(k);
  result.c[0] = 1;
  power.c[0] = 1;
  for (int j = 1; j <= k; ++j) {
    power = talg_mul(power, a);
    for (std::size_t m = 0; m < result.c.size(); ++m) result.c[m] += power.c[m] / factorial(j);
  }
  return result;
}

}  // namespace

InvariantPolySeries::InvariantPolySeries(SeriesKind kind, int N) : kind_(kind), N_(N) {
  if (N < 0) throw InvalidArgument("series truncation must be nonnegative");
  if (N > limits().series_cap) throw CapExceeded("series truncation " + std::to_string(N) + " exceeds cap");
}

std::string InvariantPolySeries::name() const {
  switch (kind_) {
    case SeriesKind::Ahat: return "Ahat";
    case SeriesKind::Ch: return "Ch";
    case SeriesKind::AhatCh: return "AhatCh";
  }
  return "?";
}

std::vector<Rational> InvariantPolySeries::components(const HElement& h) const {
  Series a(static_cast<std::size_t>(N_ + 1)), c(static_cast<std::size_t>(N_ + 1));
  a[0] = 1;
  c[0] = 1;
  if (kind_ != SeriesKind::Ch) a = series_exp(ahat_log(quad_to_sp_matrix(h.sp), N_), N_);
  if (kind_ != SeriesKind::Ahat) c = ch_series(h.gl, N_);
  return series_mul(a, c, N_);
}

Rational InvariantPolySeries::component(int k, const HElement& h) const {
  if (k < 0) throw InvalidArgument("negative component degree");
  if (k > N_) return InvariantPolySeries(kind_, k).component(k, h);
  return components(h)[static_cast<std::size_t>(k)];
}

Rational InvariantPolySeries::polarized(std::span<const HElement> args) const {
  const int k = static_cast<int>(args.size());
  if (k > limits().series_cap) throw CapExceeded("polarization arity exceeds series cap");
  if (k == 0) {
    throw InvalidArgument("polarized value with no arguments; use the degree-0 component");
  }
  const std::size_t full = (std::size_t{1} << k) - 1;
  TAlg ahat(k), ch(k);
  ahat.c[0] = 1;
  ch.c[0] = 1;
  if (kind_ != SeriesKind::Ch) {
    std::vector<QMatrix> xs;
    for (const auto& h : args) xs.push_back(quad_to_sp_matrix(h.sp));
    const TMat x = tmat_combine(xs, k);
    const auto B = bernoulli_numbers(std::max(k, 2));
    TAlg log(k);
    TMat pw = x;
    for (int l = 2; l <= k; ++l) {
      pw = tmat_mul(pw, x, k);
      Rational c = B[static_cast<std::size_t>(l)] / (2 * l * factorial(l));
      if (l % 2 == 0) c = -c;
      const TAlg tr = tmat_trace(pw, k);
      for (std::size_t m = 0; m <= full; ++m) log.c[m] += c * tr.c[m];
    }
    ahat = talg_exp(log, k);
  }
  if (kind_ != SeriesKind::Ahat) {
    std::vector<QMatrix> ms;
    for (const auto& h : args) ms.push_back(h.gl);
    const TMat m = tmat_combine(ms, k);
    const int r = static_cast<int>(ms.front().rows());
    ch = TAlg(k);
    ch.c[0] = r;
    TMat pw = m;
    for (int j = 1; j <= k; ++j) {
      if (j > 1) pw = tmat_mul(pw, m, k);
      const TAlg tr = tmat_trace(pw, k);
      for (std::size_t s = 0; s <= full; ++s) ch.c[s] += tr.c[s] / factorial(j);
    }
  }
  return talg_mul(ahat, ch).c[full];
}

InvariantPolySeries ahat_series(int N) { return InvariantPolySeries(SeriesKind::Ahat, N); }
InvariantPolySeries chern_character(int N) { return InvariantPolySeries(SeriesKind::Ch, N); }
InvariantPolySeries ahatch(int N) { return InvariantPolySeries(SeriesKind::AhatCh, N); }

Rational polarize_eval(const InvariantPolySeries& P, int k, std::span<const HElement> args) {
  if (static_cast<int>(args.size()) != k) throw DegreeMismatch("polarize_eval: expected " + std::to_string(k) + " arguments");
  return P.polarized(args);
}

std::vector<Rational> ahat_trace_components(const QMatrix& x, int N) { return series_exp(ahat_log(x, N), N); }

Rational chern_weil_chi(const InvariantPolySeries& P, int k, std::span<const MatrixElement> vs, int r) {
  if (static_cast<int>(vs.size()) != 2 * k) throw DegreeMismatch("chern_weil_chi: expected 2k arguments");
  if (k == 0) {
    // P_0 = Â_0 · Ch_0 = tr 𝟙 on the gl side
    if (r == 0) {
      if (vs.empty()) throw InvalidArgument("chern_weil_chi: k = 0 needs the matrix size");
      r = vs.front().r();
    }
    return P.kind() == SeriesKind::Ahat ? Rational(1) : Rational(r);
  }
  std::vector<int> perm(static_cast<std::size_t>(2 * k));
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  std::map<std::pair<int, int>, HElement> curv;
  auto C = [&](int a, int b) -> const HElement& {
    auto key = std::make_pair(a, b);
    auto it = curv.find(key);
    if (it == curv.end()) it = curv.emplace(key, curvature(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)])).first;
    return it->second;
  };
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    std::vector<HElement> args;
    for (int i = 0; i < k; ++i) args.push_back(C(perm[static_cast<std::size_t>(2 * i)], perm[static_cast<std::size_t>(2 * i + 1)]));
    const Rational v = P.polarized(args);
    total += inv % 2 == 0 ? v : Rational(-v);
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rational norm = factorial(k);
  mpq_mul_2exp(norm.get_mpq_t(), norm.get_mpq_t(), static_cast<unsigned long>(k));
  return total / norm;
}

Rational hm_oracle(std::span<const SpElement> args) {
  const int m = static_cast<int>(args.size());
  if (m == 0) return 1;
  const int n = args.front().n();
  if (m > limits().chamber_cap) throw CapExceeded("h_m: cube dimension exceeds chamber cap");
  std::vector<Monomial> word(static_cast<std::size_t>(m + 1));
  std::map<Multiplicity, Rational> weights;
  std::size_t budget = limits().expansion_cap;
  std::function<void(int, Rational)> rec = [&](int i, Rational coef) {
    if (i > m) {
      for (const auto& [mult, w] : contraction_weights(word, n, budget)) weights[mult] += coef * w;
      return;
    }
    for (const auto& [mono, c] : args[static_cast<std::size_t>(i - 1)].poly().terms()) {
      word[static_cast<std::size_t>(i)] = mono;
      rec(i + 1, coef * c);
    }
  };
  rec(1, Rational(1));
  Rational total = 0;
  const int slots = m + 1;
  for (const auto& [mult, w] : weights) {
    if (w == 0) continue;
    DerivPlan p{{}, mult, 1};
    auto f = p.factors(slots);
    total += w * cube_integrate(f, m);
  }
  return total;
}

WnrElement WnrElement::linear(int n, int r, int a) {
  return WnrElement(Kind::Linear, MatrixElement::scalar(WeylPoly::p(n, a), r));
}

WnrElement WnrElement::cubic(int n, int r, int a, int b, int c) {
  return WnrElement(Kind::Cubic, MatrixElement::scalar(WeylPoly::p(n, a) * WeylPoly::q(n, b) * WeylPoly::q(n, c), r));
}

WnrElement WnrElement::q_matrix(int n, int a, const QMatrix& m) {
  return WnrElement(Kind::QTimesMatrix, MatrixElement::tensor(WeylPoly::q(n, a), m));
}

std::string to_string(ChernWeilReport::Relation rel) {
  switch (rel) {
    case ChernWeilReport::Relation::Equal: return "equal";
    case ChernWeilReport::Relation::Opposite: return "opposite";
    case ChernWeilReport::Relation::BothZero: return "both-zero";
    case ChernWeilReport::Relation::Unrelated: return "unrelated";
  }
  return "?";
}

const TauFamily<MatrixElement>& matrix_tau_family(int n, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<TauFamily<MatrixElement>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, r}];
  if (!slot) slot = std::make_unique<TauFamily<MatrixElement>>(n, r);
  return *slot;
}

ChernWeilReport verify_thm13(int n, int r, int k, std::span<const WnrElement> tuple) {
  if (k < 0 || k > n) throw InvalidArgument("verify_thm13: k must lie in 0..n");
  if (static_cast<int>(tuple.size()) != 2 * k) throw DegreeMismatch("verify_thm13: tuple must have 2k elements");
  int linear = 0;
  for (const auto& w : tuple)
    if (w.kind() == WnrElement::Kind::Linear) ++linear;
  // k linear entries p_a ⊗ 𝟙, the other k cubic or q_a ⊗ M
  if (linear != k) throw InvalidArgument("verify_thm13: tuple needs exactly k entries of the form p_a ⊗ 1");
  std::vector<MatrixElement> vs;
  for (const auto& w : tuple) {
    if (w.element().n() != n || w.element().r() != r) throw DimensionMismatch("verify_thm13: element shape mismatch");
    vs.push_back(w.element());
  }
  ChernWeilReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;
  rep.lhs = ev1(matrix_tau_family(n, r).component(k), vs);
  rep.rhs = chern_weil_chi(ahatch(std::max(k, 1)), k, vs, r);
  if (rep.lhs == 0 && rep.rhs == 0) {
    rep.relation = ChernWeilReport::Relation::BothZero;
  } else if (rep.lhs == rep.rhs) {
    rep.relation = ChernWeilReport::Relation::Equal;
  } else if (rep.lhs == -rep.rhs) {
    rep.relation = ChernWeilReport::Relation::Opposite;
  }
  return rep;
}

}  // namespace weylcyc
