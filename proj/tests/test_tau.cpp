#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "oracles.hpp"
#include "weylcyc/errors.hpp"
#include "weylcyc/tau.hpp"
#include "weylcyc/generators.hpp"
#include "weylcyc/limits.hpp"
#include "weylcyc/parse.hpp"
#include "weylcyc/suites.hpp"

using namespace weylcyc;

namespace {
WeylPoly P(const char* s, int n = 1) { return parse_poly(s, n); }

Chain<WeylPoly> wedge_of_generators(int n) {
  std::vector<WeylPoly> gens;
  for (int j = 1; j <= n; ++j) {
    gens.push_back(WeylPoly::p(n, j));
    gens.push_back(WeylPoly::q(n, j));
  }
  return wedge_embed(WeylPoly::constant(n, 1), gens);
}
}  // namespace

TEST_CASE("top cocycle against the brute force expansion, n = 1") {
  Rng rng(41);
  const auto& tau = tau_cocycle(1);
  for (int t = 0; t < 40; ++t) {
    const auto w = random_word(rng, 1, 3, 3, 2);
    CHECK_MESSAGE(tau.evaluate_word(w) == oracle::tau(1, w), w[0].to_string() << " | " << w[1].to_string() << " | " << w[2].to_string());
  }
  // every monomial word up to degree 2 per slot
  const auto mons = monomials(1, 0, 2);
  for (const auto& a : mons)
    for (const auto& b : mons)
      for (const auto& c : mons) {
        const ChainWord<WeylPoly> w{WeylPoly::monomial(1, a), WeylPoly::monomial(1, b), WeylPoly::monomial(1, c)};
        CHECK(tau.evaluate_word(w) == oracle::tau(1, w));
      }
}

TEST_CASE("top cocycle against the brute force expansion, n = 2") {
  Rng rng(42);
  const auto& tau = tau_cocycle(2);
  for (int t = 0; t < 6; ++t) {
    const auto w = random_word(rng, 2, 5, 2, 1);
    CHECK(tau.evaluate_word(w) == oracle::tau(2, w));
  }
  const ChainWord<WeylPoly> w{P("p1*q2", 2), P("p1", 2), P("q1^2", 2), P("p2*q1", 2), P("q2", 2)};
  CHECK(tau.evaluate_word(w) == oracle::tau(2, w));
}

TEST_CASE("normalization constants") {
  CHECK(tau_eval(1, wedge_of_generators(1)) == 1);
  CHECK(tau_eval(2, wedge_of_generators(2)) == 1);
  const TauFamily<WeylPoly> fam(1, 1);
  CHECK(fam.component(0)(ChainWord<WeylPoly>{P("1")}) == 1);
  const TauFamily<WeylPoly> fam2(2, 1);
  CHECK(fam2.component(0)(ChainWord<WeylPoly>{P("1", 2)}) == 1);
  CHECK_THROWS_AS(fam.component(2), DegreeMismatch);
}

TEST_CASE("values on short words") {
  // τ_2(1, p, q) = 1 and constants elsewhere kill the word
  CHECK(tau_eval(1, Chain<WeylPoly>::word({P("1"), P("p1"), P("q1")})) == oracle::tau(1, {P("1"), P("p1"), P("q1")}));
  CHECK(tau_eval(1, Chain<WeylPoly>::word({P("1"), P("p1"), P("3")})) == 0);
  CHECK(tau_cocycle(1).evaluate_word({P("p1"), P("p1"), P("3")}) == 0);
  CHECK_THROWS_AS(tau_eval(1, Chain<WeylPoly>::word({P("1"), P("p1")})), DegreeMismatch);
}

TEST_CASE("chamber integrals follow the permutation law") {
  SuiteConfig cfg;
  cfg.n = 1;
  const auto rep = run_suite("lemma-2-2", cfg);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed(), c.name << " " << c.first_failure);
  cfg.n = 2;
  cfg.samples = 4;
  const auto rep2 = run_suite("lemma-2-2", cfg);
  for (const auto& c : rep2.checks) CHECK_MESSAGE(c.passed(), c.name << " " << c.first_failure);
}

TEST_CASE("cocycle, cyclic and invariance properties") {
  SuiteConfig cfg;
  cfg.n = 1;
  for (const char* s : {"cocycle", "basic", "cyclic"}) {
    const auto rep = run_suite(s, cfg);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed(), s << ": " << c.name << " " << c.first_failure);
  }
}

TEST_CASE("matrix cocycle reduces to the scalar one on scalar words") {
  Rng rng(43);
  const TauCocycle tau(1);
  for (int t = 0; t < 10; ++t) {
    const auto w = random_word(rng, 1, 3, 2);
    ChainWord<MatrixElement> mw;
    for (const auto& a : w) mw.push_back(MatrixElement::scalar(a, 2));
    // trace over two diagonal copies
    CHECK(tau_matrix_word(tau, mw) == Rational(2) * tau.evaluate_word(w));
  }
}

TEST_CASE("plans and caches") {
  const TauCocycle tau(1);
  const std::vector<Monomial> word{P("p1*q1").terms().begin()->first, P("p1^2").terms().begin()->first,
                                   P("q1^2").terms().begin()->first};
  const Rational first = tau.evaluate_monomials(word);
  const std::size_t cached = tau.integrals_cached();
  CHECK(cached > 0);
  CHECK(tau.evaluate_monomials(word) == first);
  CHECK(tau.integrals_cached() == cached);
  CHECK(!tau.plans(word).empty());
  // copies share state; concurrent evaluation agrees
  const TauCocycle copy = tau;
  Rng rng(44);
  std::vector<ChainWord<WeylPoly>> words;
  for (int t = 0; t < 8; ++t) words.push_back(random_word(rng, 1, 3, 3));
  std::vector<Rational> serial, parallel(words.size());
  for (const auto& w : words) serial.push_back(tau.evaluate_word(w));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < words.size(); ++i)
    pool.emplace_back([&, i] { parallel[i] = copy.evaluate_word(words[i]); });
  for (auto& th : pool) th.join();
  CHECK(serial == parallel);
}

TEST_CASE("expansion cap") {
  const Limits saved = limits();
  Limits tight = saved;
  tight.expansion_cap = 1;
  set_limits(tight);
  const TauCocycle fresh(1);
  CHECK_THROWS_AS(fresh.evaluate_word({P("p1^2*q1^3"), P("p1^3*q1"), P("q1^2*p1")}), CapExceeded);
  set_limits(saved);
}
