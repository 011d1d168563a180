#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "weylcyc/errors.hpp"
#include "weylcyc/matrix_element.hpp"
#include "weylcyc/weyl_poly.hpp"

namespace weylcyc {

// Shape of the algebra a chain lives over: rank n and matrix size r
// (r is ignored for plain Weyl polynomials).
struct AlgebraShape {
  int n = 1;
  int r = 1;
  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
};

template <class E>
struct AlgebraTraits;

template <>
struct AlgebraTraits<WeylPoly> {
  static WeylPoly mul(const WeylPoly& a, const WeylPoly& b) { return moyal_product(a, b); }
  static WeylPoly reduce(const WeylPoly& a) { return a.reduced(); }
  static bool is_zero(const WeylPoly& a) { return a.is_zero(); }
  static WeylPoly unit(const AlgebraShape& s) { return WeylPoly::constant(s.n, 1); }
  static WeylPoly lift(const WeylPoly& f, const AlgebraShape&) { return f; }
  static AlgebraShape shape(const WeylPoly& a) { return {a.n(), 1}; }
  static std::string str(const WeylPoly& a) { return a.to_string(); }
};

template <>
struct AlgebraTraits<MatrixElement> {
  static MatrixElement mul(const MatrixElement& a, const MatrixElement& b) { return mat_moyal_mul(a, b); }
  static MatrixElement reduce(const MatrixElement& a) { return a.reduced(); }
  static bool is_zero(const MatrixElement& a) { return a.is_zero(); }
  static MatrixElement unit(const AlgebraShape& s) { return MatrixElement::identity(s.n, s.r); }
  static MatrixElement lift(const WeylPoly& f, const AlgebraShape& s) { return MatrixElement::scalar(f, s.r); }
  static AlgebraShape shape(const MatrixElement& a) { return {a.n(), a.r()}; }
  static std::string str(const MatrixElement& a) { return a.to_string(); }
};

template <class E>
using ChainWord = std::vector<E>;

// Formal rational combination of normalized words a0 ⊗ ā1 ⊗ ... ⊗ āk, all of the same
// length. Slots ≥ 1 are stored reduced modulo the unit; a word with a unit
// (or zero) in such a slot is dropped. Slots are not expanded multilinearly,
// so chains equal as tensors may compare unequal; compare them through a
// multilinear cochain.
template <class E>
class Chain {
 public:
  using Word = ChainWord<E>;
  using Traits = AlgebraTraits<E>;

  Chain() = default;
  explicit Chain(std::size_t length) : length_(length) {}

  // Normalized image of a raw word (possibly the zero chain).
  static Chain word(Word w, const Rational& c = 1) {
    Chain ch(w.size());
    ch.add(std::move(w), c);
    return ch;
  }

  std::size_t length() const { return length_; }
  int degree() const { return static_cast<int>(length_) - 1; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(Word w, const Rational& c) {
    if (w.empty()) throw DegreeMismatch("chain words must have at least one slot");
    set_length(w.size());
    if (c == 0 || Traits::is_zero(w[0])) return;
    for (std::size_t i = 1; i < w.size(); ++i) {
      w[i] = Traits::reduce(w[i]);
      if (Traits::is_zero(w[i])) return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Chain& operator+=(const Chain& o) {
    if (o.length_ != 0) set_length(o.length_);
    for (const auto& [w, c] : o.terms_) add_normalized(w, c);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    if (o.length_ != 0) set_length(o.length_);
    for (const auto& [w, c] : o.terms_) add_normalized(w, -c);
    return *this;
  }
  Chain& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Chain a, const Rational& c) { return a *= c; }
  friend Chain operator*(const Rational& c, Chain a) { return a *= c; }
  friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

 private:
  void set_length(std::size_t len) {
    if (length_ == 0) length_ = len;
    if (len != length_)
      throw DegreeMismatch("chain word length " + std::to_string(len) + " in a chain of length " +
                           std::to_string(length_));
  }
  // Word already normalized (coming from another chain).
  void add_normalized(const Word& w, const Rational& c) {
    set_length(w.size());
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t length_ = 0;
  std::map<Word, Rational> terms_;
};

// Linear extension of a word-level map.
template <class E, class F>
Chain<E> map_words(const Chain<E>& c, std::size_t out_length, F&& f) {
  Chain<E> out(out_length);
  for (const auto& [w, coef] : c.terms()) out += f(w) * coef;
  return out;
}

// Hochschild boundary b on a word of length k+2 (result has length k+1):
// Σ_{i=0}^{k} (−1)^i (.., a_i ⋆ a_{i+1}, ..) + (−1)^{k+1} (a_{k+1} ⋆ a_0, a_1, .., a_k).
template <class E>
Chain<E> cyclic_boundary_dual(const ChainWord<E>& w) {
  using T = AlgebraTraits<E>;
  if (w.size() < 2) throw DegreeMismatch("boundary needs a word of length ≥ 2");
  const std::size_t last = w.size() - 1;
  Chain<E> out(last);
  for (std::size_t i = 0; i < last; ++i) {
    ChainWord<E> v;
    v.reserve(last);
    for (std::size_t j = 0; j < i; ++j) v.push_back(w[j]);
    v.push_back(T::mul(w[i], w[i + 1]));
    for (std::size_t j = i + 2; j <= last; ++j) v.push_back(w[j]);
    out.add(std::move(v), i % 2 == 0 ? 1 : -1);
  }
  ChainWord<E> v;
  v.reserve(last);
  v.push_back(T::mul(w[last], w[0]));
  for (std::size_t j = 1; j < last; ++j) v.push_back(w[j]);
  out.add(std::move(v), last % 2 == 0 ? 1 : -1);
  return out;
}

template <class E>
Chain<E> cyclic_boundary_dual(const Chain<E>& c) {
  if (c.length() < 2) throw DegreeMismatch("boundary needs chains of length ≥ 2");
  return map_words(c, c.length() - 1, [](const ChainWord<E>& w) { return cyclic_boundary_dual(w); });
}

// B'(a_0, .., a_m) = Σ_j (−1)^{mj} (1, a_j, .., a_m, a_0, .., a_{j−1}).
template <class E>
Chain<E> connes_Bprime(const ChainWord<E>& w, const AlgebraShape& shape) {
  using T = AlgebraTraits<E>;
  const std::size_t len = w.size();
  const std::size_t m = len - 1;
  Chain<E> out(len + 1);
  for (std::size_t j = 0; j < len; ++j) {
    ChainWord<E> v;
    v.reserve(len + 1);
    v.push_back(T::unit(shape));
    for (std::size_t i = 0; i < len; ++i) v.push_back(w[(j + i) % len]);
    out.add(std::move(v), (m * j) % 2 == 0 ? 1 : -1);
  }
  return out;
}

template <class E>
Chain<E> connes_Bprime(const Chain<E>& c, const AlgebraShape& shape) {
  return map_words(c, c.length() + 1, [&](const ChainWord<E>& w) { return connes_Bprime(w, shape); });
}

// Σ_{j=0}^{k} (−1)^j (a_0, .., a_j, a, a_{j+1}, .., a_k).
template <class E>
Chain<E> insert_dual(const ChainWord<E>& w, const E& a) {
  const std::size_t len = w.size();
  Chain<E> out(len + 1);
  for (std::size_t j = 0; j < len; ++j) {
    ChainWord<E> v;
    v.reserve(len + 1);
    for (std::size_t i = 0; i <= j; ++i) v.push_back(w[i]);
    v.push_back(a);
    for (std::size_t i = j + 1; i < len; ++i) v.push_back(w[i]);
    out.add(std::move(v), j % 2 == 0 ? 1 : -1);
  }
  return out;
}

template <class E>
Chain<E> insert_dual(const Chain<E>& c, const E& a) {
  return map_words(c, c.length() + 1, [&](const ChainWord<E>& w) { return insert_dual(w, a); });
}

// head ⊗ (v_1 ∧ .. ∧ v_k) = Σ_σ sgn(σ) head ⊗ v_σ(1) ⊗ .. ⊗ v_σ(k).
template <class E>
Chain<E> wedge_embed(const E& head, const std::vector<E>& vs) {
  const std::size_t k = vs.size();
  Chain<E> out(k + 1);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ChainWord<E> w{head};
    for (auto i : perm) w.push_back(vs[i]);
    out.add(std::move(w), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <class E>
std::string to_string(const Chain<E>& c) {
  if (c.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, coef] : c.terms()) {
    if (!first) s += " + ";
    first = false;
    s += coef.get_str() + " * [";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += "; ";
      s += AlgebraTraits<E>::str(w[i]);
    }
    s += "]";
  }
  return s;
}

}  // namespace weylcyc
