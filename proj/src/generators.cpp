#include "weylcyc/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>

#include "weylcyc/errors.hpp"
#include "weylcyc/symplectic.hpp"

namespace weylcyc {

Rational Rng::coefficient() {
  int a = uniform(1, 3);
  if (coin()) a = -a;
  Rational c(a, uniform(1, 3));
  c.canonicalize();
  return c;
}

std::vector<Monomial> monomials(int n, int min_deg, int max_deg) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == 2 * n - 1) {
      m.exps[var] = static_cast<std::uint8_t>(left);
      out.push_back(m);
      m.exps[var] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exps[var] = static_cast<std::uint8_t>(e);
      rec(var + 1, left - e);
    }
    m.exps[var] = 0;
  };
  for (int d = min_deg; d <= max_deg; ++d) rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

WeylPoly random_poly(Rng& rng, int n, int min_deg, int max_deg, int terms) {
  WeylPoly p(n);
  while (p.is_zero()) {
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      const int d = rng.uniform(min_deg, max_deg);
      for (int i = 0; i < d; ++i) ++m.exps[static_cast<std::size_t>(rng.uniform(0, 2 * n - 1))];
      p.add_term(m, rng.coefficient());
    }
  }
  return p;
}

ChainWord<WeylPoly> random_word(Rng& rng, int n, int length, int max_deg, int terms) {
  ChainWord<WeylPoly> w;
  for (int i = 0; i < length; ++i) w.push_back(random_poly(rng, n, i == 0 ? 0 : 1, max_deg, terms));
  return w;
}

QMatrix random_matrix(Rng& rng, int rows, int cols, int range) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform(-range, range);
  return m;
}

MatrixElement random_matrix_element(Rng& rng, int n, int r, int min_deg, int max_deg, int terms) {
  MatrixElement m(n, r);
  while (m.is_zero()) {
    for (int t = 0; t < terms; ++t) {
      QMatrix c = random_matrix(rng, r, r, 2);
      m += MatrixElement::tensor(random_poly(rng, n, min_deg, max_deg, 1), c);
    }
  }
  return m;
}

ChainWord<MatrixElement> random_matrix_word(Rng& rng, int n, int r, int length, int max_deg, int terms) {
  ChainWord<MatrixElement> w;
  for (int i = 0; i < length; ++i) w.push_back(random_matrix_element(rng, n, r, i == 0 ? 0 : 1, max_deg, terms));
  return w;
}

QMatrix random_symplectic(Rng& rng, int n) {
  // Work in block order (p_1..p_n, q_1..q_n), then move to the interleaved basis.
  const int v = 2 * n;
  QMatrix perm(v, v);  // interleaved index -> block index
  for (int j = 0; j < n; ++j) {
    perm(2 * j, j) = 1;
    perm(2 * j + 1, n + j) = 1;
  }
  QMatrix g = QMatrix::identity(v);
  for (int round = 0; round < 3; ++round) {
    QMatrix s = random_matrix(rng, n, n, 1);
    s = s + s.transpose();
    QMatrix shear = QMatrix::identity(v);
    const bool upper = rng.coin();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (upper) {
          shear(i, n + j) = s(i, j);
        } else {
          shear(n + i, j) = s(i, j);
        }
      }
    // unimodular A: identity plus one off-diagonal entry
    QMatrix a = QMatrix::identity(n);
    if (n > 1) {
      const int i = rng.uniform(0, n - 1);
      int j = rng.uniform(0, n - 2);
      if (j >= i) ++j;
      a(i, j) = rng.uniform(-1, 1);
    }
    QMatrix a_inv_t = QMatrix::identity(n);
    if (n > 1) a_inv_t = (QMatrix::identity(n) * 2 - a).transpose();  // (I + N)^{-1} = I − N for N² = 0
    QMatrix block(v, v);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        block(i, j) = a(i, j);
        block(n + i, n + j) = a_inv_t(i, j);
      }
    g = g * shear * block;
  }
  QMatrix out = perm * g * perm.transpose();
  if (!is_symplectic(out)) throw Error("random_symplectic produced a non-symplectic matrix");
  return out;
}

std::vector<int> random_permutation(Rng& rng, int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  rng.shuffle(p);
  return p;
}

int permutation_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Cochain<WeylPoly> random_cochain(Rng& rng, int n, int degree, int max_deg, int products) {
  using Functional = std::map<Monomial, Rational>;
  auto table = std::make_shared<std::vector<std::vector<Functional>>>();
  const auto all = monomials(n, 0, max_deg);
  for (int t = 0; t < products; ++t) {
    std::vector<Functional> slots;
    for (int i = 0; i <= degree; ++i) {
      Functional f;
      for (const auto& m : all) {
        if (i > 0 && m.is_one()) continue;
        if (rng.uniform(0, 2) == 0) continue;  // keep the functionals sparse-ish
        f.emplace(m, Rational(rng.uniform(-3, 3)));
      }
      slots.push_back(std::move(f));
    }
    table->push_back(std::move(slots));
  }
  return Cochain<WeylPoly>(degree, {n, 1}, [table](const ChainWord<WeylPoly>& w) {
    Rational total = 0;
    for (const auto& slots : *table) {
      Rational prod = 1;
      for (std::size_t i = 0; i < w.size() && prod != 0; ++i) {
        Rational v = 0;
        for (const auto& [m, c] : w[i].terms())
          if (auto it = slots[i].find(m); it != slots[i].end()) v += c * it->second;
        prod *= v;
      }
      total += prod;
    }
    return total;
  });
}

}  // namespace weylcyc
