#include "weylcyc/tau.hpp"

#include <functional>
#include <mutex>
#include <numeric>

#include "weylcyc/errors.hpp"
#include "weylcyc/limits.hpp"

namespace weylcyc {

std::vector<B1Factor> DerivPlan::factors(int slots) const {
  std::vector<B1Factor> out;
  for (int i = 0; i < slots; ++i)
    for (int j = i + 1; j < slots; ++j)
      if (auto m = multiplicity[pair_index(i, j, slots)]; m > 0) out.push_back({i, j, m});
  return out;
}

namespace {

// One symplectic index l: all transports N_st (s ≠ t) with Σ_t N_st = rows[s]
// (p_l-derivatives at s) and Σ_s N_st = cols[t] (q_l-derivatives at t).
// A unit of N_st is the term ₛ∂_{p_l} ₜ∂_{q_l}; inside α_ji (j > i) it carries
// sign −1 when s = j and +1 when s = i. Emitted weight is Π sign^N / N!.
void enumerate_transports(const std::vector<int>& rows, std::vector<int> cols, int slots,
                          const std::function<void(const Multiplicity&, const Rational&)>& emit,
                          std::size_t& budget) {
  Multiplicity mult(pair_count(slots), 0);
  std::function<void(int, int, int, Rational)> rec = [&](int s, int t, int left, Rational w) {
    if (s == slots) {
      for (int c : cols)
        if (c != 0) return;
      if (budget == 0) throw CapExceeded("derivative-plan expansion exceeds the configured cap");
      --budget;
      emit(mult, w);
      return;
    }
    if (t == slots) {
      if (left != 0) return;
      const int ns = s + 1;
      rec(ns, 0, ns < slots ? rows[static_cast<std::size_t>(ns)] : 0, w);
      return;
    }
    if (t == s || cols[static_cast<std::size_t>(t)] == 0) {
      rec(s, t + 1, left, w);
      return;
    }
    // capacity of remaining columns must absorb what is left
    const int maxn = std::min(left, cols[static_cast<std::size_t>(t)]);
    const std::size_t pi = s < t ? pair_index(s, t, slots) : pair_index(t, s, slots);
    Rational wn = w;
    for (int k = 0; k <= maxn; ++k) {
      if (k > 0) {
        wn /= k;
        if (s > t) wn = -wn;
      }
      cols[static_cast<std::size_t>(t)] -= k;
      mult[pi] = static_cast<std::uint8_t>(mult[pi] + k);
      rec(s, t + 1, left - k, wn);
      mult[pi] = static_cast<std::uint8_t>(mult[pi] - k);
      cols[static_cast<std::size_t>(t)] += k;
    }
  };
  rec(0, 0, slots > 0 ? rows[0] : 0, Rational(1));
}

}  // namespace

std::map<Multiplicity, Rational> contraction_weights(std::span<const Monomial> word, int n, std::size_t& budget) {
  const int slots = static_cast<int>(word.size());
  std::map<Multiplicity, Rational> acc{{Multiplicity(pair_count(slots), 0), Rational(1)}};
  for (int l = 0; l < n; ++l) {
    std::vector<int> rows(static_cast<std::size_t>(slots)), cols(static_cast<std::size_t>(slots));
    int rs = 0, cs = 0;
    for (int s = 0; s < slots; ++s) {
      rows[static_cast<std::size_t>(s)] = word[static_cast<std::size_t>(s)].exps[2 * l];
      cols[static_cast<std::size_t>(s)] = word[static_cast<std::size_t>(s)].exps[2 * l + 1];
      rs += rows[static_cast<std::size_t>(s)];
      cs += cols[static_cast<std::size_t>(s)];
    }
    if (rs != cs) return {};
    if (rs == 0) continue;
    std::map<Multiplicity, Rational> local;
    enumerate_transports(rows, cols, slots, [&](const Multiplicity& m, const Rational& w) { local[m] += w; }, budget);
    std::map<Multiplicity, Rational> next;
    for (const auto& [ma, wa] : acc)
      for (const auto& [mb, wb] : local) {
        if (wb == 0) continue;
        Multiplicity m = ma;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(m[i] + mb[i]);
        next[m] += wa * wb;
      }
    acc = std::move(next);
    if (acc.empty()) return {};
  }
  // μ: ∂^h y^h at 0 = h!
  Rational mu = 1;
  for (const auto& m : word)
    for (int v = 0; v < 2 * n; ++v) mu *= factorial(m.exps[v]);
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == 0) {
      it = acc.erase(it);
    } else {
      it->second *= mu;
      ++it;
    }
  }
  return acc;
}

std::vector<std::pair<Rational, ChainWord<WeylPoly>>> pi_apply(const ChainWord<WeylPoly>& w) {
  if (w.empty() || w.size() % 2 == 0) throw DegreeMismatch("pi_apply needs a word of length 2n+1");
  const int k = static_cast<int>(w.size()) - 1;
  const int n = w[0].n();
  if (k != 2 * n) throw DegreeMismatch("pi_apply: word length must be 2n+1");
  std::vector<std::pair<Rational, ChainWord<WeylPoly>>> out;
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    ChainWord<WeylPoly> v{w[0]};
    bool dead = false;
    for (int i = 1; i <= k && !dead; ++i) {
      v.push_back(partial_derivative(w[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i - 1)]));
      dead = v.back().is_zero();
    }
    if (dead) continue;
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) ++inv;
    out.emplace_back(inv % 2 == 0 ? 1 : -1, std::move(v));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<DerivPlan> s_expand(std::span<const Monomial> word, int n) {
  std::size_t budget = limits().expansion_cap;
  std::vector<DerivPlan> plans;
  for (auto& [m, w] : contraction_weights(word, n, budget)) plans.push_back({{}, m, w});
  return plans;
}

struct TauCocycle::State {
  int n;
  std::vector<int> chamber;
  Region region;
  mutable std::mutex mu;
  std::map<Multiplicity, Rational> integrals;
  std::map<std::vector<Monomial>, Rational> words;
  std::size_t plans = 0;

  State(int n_, std::vector<int> ch) : n(n_), chamber(std::move(ch)), region(Region::from_permutation(chamber)) {}

  Rational integral(const Multiplicity& m) {
    {
      std::lock_guard lock(mu);
      if (auto it = integrals.find(m); it != integrals.end()) return it->second;
    }
    DerivPlan p{{}, m, 1};
    const auto f = p.factors(2 * n + 1);
    Rational v = region_integrate(f, region);
    std::lock_guard lock(mu);
    integrals.emplace(m, v);
    return v;
  }

  // Σ_σ sgn σ Π f_{i,σ(i)} · contraction weights of (f − e_σ); grouped by multiplicity.
  std::map<Multiplicity, Rational> expand(const std::vector<Monomial>& word, std::vector<DerivPlan>* plans_out) {
    const int k = 2 * n;
    std::map<Multiplicity, Rational> total;
    if (static_cast<int>(word.size()) != k + 1) throw DegreeMismatch("τ needs words of length 2n+1");
    // Quick filters: degree count and per-index balance.
    int deg = 0;
    for (const auto& m : word) deg += m.degree();
    if (deg < k || (deg - k) % 2 != 0) return total;
    for (int l = 0; l < n; ++l) {
      int ps = 0, qs = 0;
      for (const auto& m : word) {
        ps += m.exps[2 * l];
        qs += m.exps[2 * l + 1];
      }
      if (ps != qs) return total;
    }
    for (int i = 1; i <= k; ++i)
      if (word[static_cast<std::size_t>(i)].is_one()) return total;

    std::size_t budget = limits().expansion_cap;
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    std::vector<Monomial> h = word;
    std::function<void(int, int, Rational)> rec = [&](int i, int sign, Rational coef) {
      if (i > k) {
        auto weights = contraction_weights(h, n, budget);
        for (auto& [m, w] : weights) {
          Rational c = coef * w;
          if (sign < 0) c = -c;
          if (plans_out) plans_out->push_back({sigma, m, c});
          total[m] += c;
        }
        return;
      }
      for (int col = 1; col <= k; ++col) {
        if (used[static_cast<std::size_t>(col)]) continue;
        auto& e = h[static_cast<std::size_t>(i)].exps[static_cast<std::size_t>(col - 1)];
        if (e == 0) continue;
        // parity of σ: count earlier columns larger than col
        int larger = 0;
        for (int c = col + 1; c <= k; ++c)
          if (used[static_cast<std::size_t>(c)]) ++larger;
        used[static_cast<std::size_t>(col)] = true;
        sigma[static_cast<std::size_t>(i - 1)] = col;
        const int f = e;
        --e;
        rec(i + 1, larger % 2 == 0 ? sign : -sign, coef * f);
        ++e;
        used[static_cast<std::size_t>(col)] = false;
      }
    };
    rec(1, 1, Rational(1));
    {
      std::lock_guard lock(mu);
      plans += limits().expansion_cap - budget;
    }
    return total;
  }

  Rational evaluate_monomials(const std::vector<Monomial>& word) {
    {
      std::lock_guard lock(mu);
      if (auto it = words.find(word); it != words.end()) return it->second;
    }
    Rational v = 0;
    for (const auto& [m, w] : expand(word, nullptr)) v += w * integral(m);
    std::lock_guard lock(mu);
    words.emplace(word, v);
    return v;
  }
};

TauCocycle::TauCocycle(int n) : TauCocycle(n, [n] {
                                    std::vector<int> id(static_cast<std::size_t>(2 * n));
                                    std::iota(id.begin(), id.end(), 1);
                                    return id;
                                  }()) {}

TauCocycle::TauCocycle(int n, std::vector<int> chamber) {
  if (n < 1 || n > kMaxRank) throw InvalidArgument("τ: rank n out of range");
  if (static_cast<int>(chamber.size()) != 2 * n) throw InvalidArgument("chamber permutation must have 2n entries");
  state_ = std::make_shared<State>(n, std::move(chamber));
}

int TauCocycle::n() const { return state_->n; }
const std::vector<int>& TauCocycle::chamber() const { return state_->chamber; }

Rational TauCocycle::evaluate_monomials(const std::vector<Monomial>& word) const {
  return state_->evaluate_monomials(word);
}

std::vector<DerivPlan> TauCocycle::plans(const std::vector<Monomial>& word) const {
  std::vector<DerivPlan> out;
  state_->expand(word, &out);
  return out;
}

Rational TauCocycle::evaluate_word(const ChainWord<WeylPoly>& w) const {
  const int n = state_->n;
  if (static_cast<int>(w.size()) != 2 * n + 1)
    throw DegreeMismatch("τ_" + std::to_string(2 * n) + " applied to a word of length " + std::to_string(w.size()));
  for (const auto& a : w)
    if (a.n() != n && !a.is_zero()) throw DimensionMismatch("τ: entry rank differs from n");
  Rational total = 0;
  std::vector<Monomial> mono(w.size());
  std::vector<Rational> coef(w.size() + 1);
  coef[0] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      total += coef[i] * evaluate_monomials(mono);
      return;
    }
    for (const auto& [m, c] : w[i].terms()) {
      mono[i] = m;
      coef[i + 1] = coef[i] * c;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

Rational TauCocycle::evaluate(const Chain<WeylPoly>& c) const { return cochain()(c); }

Cochain<WeylPoly> TauCocycle::cochain() const {
  TauCocycle self = *this;
  return Cochain<WeylPoly>(2 * n(), {n(), 1}, [self](const ChainWord<WeylPoly>& w) { return self.evaluate_word(w); });
}

std::size_t TauCocycle::plans_enumerated() const {
  std::lock_guard lock(state_->mu);
  return state_->plans;
}

std::size_t TauCocycle::integrals_cached() const {
  std::lock_guard lock(state_->mu);
  return state_->integrals.size();
}

const TauCocycle& tau_cocycle(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TauCocycle>> instances;
  std::lock_guard lock(mu);
  auto& slot = instances[n];
  if (!slot) slot = std::make_unique<TauCocycle>(n);
  return *slot;
}

Rational tau_eval(int n, const Chain<WeylPoly>& c) { return tau_cocycle(n).evaluate(c); }

Rational tau_sigma_eval(int n, std::span<const int> sigma, const Chain<WeylPoly>& c) {
  return TauCocycle(n, std::vector<int>(sigma.begin(), sigma.end())).evaluate(c);
}

Rational tau_matrix_word(const TauCocycle& tau, const ChainWord<MatrixElement>& w) {
  const int r = w.front().r();
  const std::size_t len = w.size();
  for (const auto& a : w)
    if (a.r() != r) throw DimensionMismatch("τ^r: matrix sizes differ");
  Rational total = 0;
  std::vector<int> idx(len + 1, 0);
  ChainWord<WeylPoly> entries(len);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == len) {
      total += tau.evaluate_word(entries);
      return;
    }
    for (int next = 0; next < r; ++next) {
      if (pos + 1 == len && next != idx[0]) continue;
      const WeylPoly& e = w[pos].at(idx[pos], next);
      if (e.is_zero()) continue;
      entries[pos] = e;
      idx[pos + 1] = next;
      rec(pos + 1);
    }
  };
  for (int i0 = 0; i0 < r; ++i0) {
    idx[0] = i0;
    rec(0);
  }
  return total;
}

Cochain<MatrixElement> matrix_cocycle(int n, int r) {
  const TauCocycle& tau = tau_cocycle(n);
  TauCocycle self = tau;
  return Cochain<MatrixElement>(2 * n, {n, r}, [self](const ChainWord<MatrixElement>& w) {
    return tau_matrix_word(self, w);
  });
}

Rational tau_matrix_eval(int n, int r, const Chain<MatrixElement>& c) { return matrix_cocycle(n, r)(c); }

}  // namespace weylcyc
