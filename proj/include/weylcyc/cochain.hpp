#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "weylcyc/chain.hpp"

namespace weylcyc {

// Linear functional on normalized chains of a fixed length (degree + 1),
// given by its values on normalized words.
template <class E>
class Cochain {
 public:
  using Word = ChainWord<E>;
  using WordEvaluator = std::function<Rational(const Word&)>;

  Cochain(int degree, AlgebraShape shape, WordEvaluator eval)
      : degree_(degree), shape_(shape), eval_(std::make_shared<const WordEvaluator>(std::move(eval))) {
    if (degree < 0) throw DegreeMismatch("cochain degree must be nonnegative");
  }

  int degree() const { return degree_; }
  const AlgebraShape& shape() const { return shape_; }

  Rational operator()(const Chain<E>& c) const {
    if (c.length() != 0 && c.length() != static_cast<std::size_t>(degree_ + 1))
      throw DegreeMismatch("degree-" + std::to_string(degree_) + " cochain applied to a chain of degree " +
                           std::to_string(c.degree()));
    Rational total = 0;
    for (const auto& [w, coef] : c.terms()) {
      Rational v = (*eval_)(w);
      if (v != 0) total += coef * v;
    }
    return total;
  }

  // Value on a raw word; the word is normalized first.
  Rational operator()(const Word& w) const { return (*this)(Chain<E>::word(w)); }

  // Same functional, remembering values per normalized word.
  Cochain memoized() const {
    struct Memo {
      std::mutex mu;
      std::map<Word, Rational> values;
    };
    auto memo = std::make_shared<Memo>();
    auto inner = eval_;
    return Cochain(degree_, shape_, [memo, inner](const Word& w) {
      {
        std::lock_guard lock(memo->mu);
        if (auto it = memo->values.find(w); it != memo->values.end()) return it->second;
      }
      Rational v = (*inner)(w);
      std::lock_guard lock(memo->mu);
      memo->values.emplace(w, v);
      return v;
    });
  }

  friend Cochain operator+(const Cochain& a, const Cochain& b) {
    check_compatible(a, b);
    auto ea = a.eval_, eb = b.eval_;
    return Cochain(a.degree_, a.shape_, [ea, eb](const Word& w) { return Rational((*ea)(w) + (*eb)(w)); });
  }
  friend Cochain operator-(const Cochain& a, const Cochain& b) {
    check_compatible(a, b);
    auto ea = a.eval_, eb = b.eval_;
    return Cochain(a.degree_, a.shape_, [ea, eb](const Word& w) { return Rational((*ea)(w) - (*eb)(w)); });
  }
  friend Cochain operator*(const Rational& c, const Cochain& a) {
    auto ea = a.eval_;
    return Cochain(a.degree_, a.shape_, [ea, c](const Word& w) { return Rational(c * (*ea)(w)); });
  }

  static Cochain zero(int degree, AlgebraShape shape) {
    return Cochain(degree, shape, [](const Word&) { return Rational(0); });
  }

 private:
  static void check_compatible(const Cochain& a, const Cochain& b) {
    if (a.degree_ != b.degree_) throw DegreeMismatch("adding cochains of different degree");
    if (!(a.shape_ == b.shape_)) throw DimensionMismatch("adding cochains over different algebras");
  }

  int degree_;
  AlgebraShape shape_;
  std::shared_ptr<const WordEvaluator> eval_;
};

template <class E>
Cochain<E> cochain_d(const Cochain<E>& phi) {
  return Cochain<E>(phi.degree() + 1, phi.shape(),
                    [phi](const ChainWord<E>& w) { return phi(cyclic_boundary_dual(w)); });
}

template <class E>
Cochain<E> cochain_B(const Cochain<E>& phi) {
  if (phi.degree() < 1) throw DegreeMismatch("B of a degree-0 cochain");
  return Cochain<E>(phi.degree() - 1, phi.shape(),
                    [phi](const ChainWord<E>& w) { return phi(connes_Bprime(w, phi.shape())); });
}

template <class E>
Cochain<E> cochain_iota(const Cochain<E>& phi, const E& a) {
  if (phi.degree() < 1) throw DegreeMismatch("interior product of a degree-0 cochain");
  return Cochain<E>(phi.degree() - 1, phi.shape(), [phi, a](const ChainWord<E>& w) { return phi(insert_dual(w, a)); });
}

template <class E>
Cochain<E> cochain_iota(const Cochain<E>& phi, const WeylPoly& a) requires(!std::is_same_v<E, WeylPoly>) {
  return cochain_iota(phi, AlgebraTraits<E>::lift(a, phi.shape()));
}

template <class E, class A>
Cochain<E> cochain_L(const Cochain<E>& phi, const A& a) {
  if (phi.degree() == 0) return cochain_iota(cochain_d(phi), a);
  return cochain_d(cochain_iota(phi, a)) + cochain_iota(cochain_d(phi), a);
}

// ι_ω = Σ_j ι_{p_j} ∘ ι_{q_j}: (ι_ω φ)(w) = Σ_j φ(insert(insert(w, p_j), q_j)).
template <class E>
Cochain<E> iota_omega(const Cochain<E>& phi) {
  if (phi.degree() < 2) throw DegreeMismatch("ι_ω needs a cochain of degree ≥ 2");
  const AlgebraShape s = phi.shape();
  std::vector<std::pair<E, E>> pairs;
  for (int j = 1; j <= s.n; ++j)
    pairs.emplace_back(AlgebraTraits<E>::lift(WeylPoly::p(s.n, j), s), AlgebraTraits<E>::lift(WeylPoly::q(s.n, j), s));
  return Cochain<E>(phi.degree() - 2, s, [phi, pairs](const ChainWord<E>& w) {
    Rational total = 0;
    for (const auto& [pj, qj] : pairs) total += phi(insert_dual(insert_dual(w, pj), qj));
    return total;
  });
}

// L_ω = d ι_ω − ι_ω d
template <class E>
Cochain<E> L_omega(const Cochain<E>& phi) {
  if (phi.degree() < 1) throw DegreeMismatch("L_ω needs a cochain of degree ≥ 1");
  // ι_ω φ has degree −1 here, so only the second term survives.
  if (phi.degree() == 1) return Rational(-1) * iota_omega(cochain_d(phi));
  return cochain_d(iota_omega(phi)) - iota_omega(cochain_d(phi));
}

}  // namespace weylcyc
