#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylcyc/errors.hpp"
#include "weylcyc/tau.hpp"
#include "weylcyc/generators.hpp"
#include "weylcyc/lie.hpp"
#include "weylcyc/parse.hpp"
#include "weylcyc/suites.hpp"
#include "weylcyc/symplectic.hpp"

using namespace weylcyc;

namespace {
WeylPoly P(const char* s, int n = 1) { return parse_poly(s, n); }
MatrixElement S(const char* s, int r = 1, int n = 1) { return MatrixElement::scalar(P(s, n), r); }

Rational trace_power(const QMatrix& x, int j) {
  QMatrix m = QMatrix::identity(x.rows());
  for (int i = 0; i < j; ++i) m = m * x;
  return m.trace();
}
}  // namespace

TEST_CASE("projection onto h") {
  const auto v = MatrixElement::scalar(P("p1*q1 + 3*p1^3 + q1"), 2);
  const auto h = pr_projection(v);
  CHECK(h.sp.poly() == P("p1*q1"));
  CHECK(h.gl.is_zero());
  QMatrix m(2, 2);
  m(0, 1) = 5;
  const auto w = MatrixElement::tensor(P("1"), m) + MatrixElement::tensor(P("q1^2"), QMatrix::identity(2));
  const auto hw = pr_projection(w);
  CHECK(hw.sp.poly() == P("q1^2"));
  CHECK(hw.gl == m);
}

TEST_CASE("curvature") {
  // [p q², p] = 2pq is quadratic, both projections of the arguments vanish
  const auto c = curvature(S("p1*q1^2"), S("p1"));
  CHECK(c.sp.poly() == P("-2*p1*q1"));
  CHECK(c.gl.is_zero());
  Rng rng(51);
  for (int t = 0; t < 10; ++t) {
    const auto u = random_matrix_element(rng, 1, 2, 0, 3, 2);
    const auto v = random_matrix_element(rng, 1, 2, 0, 3, 2);
    const auto uv = curvature(u, v), vu = curvature(v, u);
    CHECK(uv.sp.poly() == -vu.sp.poly());
    CHECK(uv.gl == vu.gl * Rational(-1));
    // equivariance: h-arguments have zero curvature
    const HElement h(sp_basis(1)[static_cast<std::size_t>(t % 3)], random_matrix(rng, 2, 2, 2));
    CHECK(curvature(h.embed(), v).is_zero());
  }
}

TEST_CASE("invariant series") {
  const auto ch = chern_character(4);
  const auto ahat = ahat_series(4);
  QMatrix m(2, 2);
  m(0, 0) = 2;
  m(1, 0) = 1;
  m(1, 1) = -1;
  const HElement gl_only(SpElement::zero(1), m);
  const auto chc = ch.components(gl_only);
  CHECK(chc[0] == 2);
  CHECK(chc[1] == 1);
  CHECK(chc[2] == trace_power(m, 2) / 2);
  CHECK(chc[3] == trace_power(m, 3) / 6);

  const SpElement x(P("p1^2 + 3*p1*q1 - q1^2", 1));
  const HElement sp_only(x, QMatrix(1, 1));
  const QMatrix xm = quad_to_sp_matrix(x);
  const auto ac = ahat.components(sp_only);
  CHECK(ac[0] == 1);
  CHECK(ac[1] == 0);
  CHECK(ac[2] == -trace_power(xm, 2) / 48);
  CHECK(ac[3] == 0);
  // Â_4 = (tr x²)²/4608 + tr x⁴/5760
  const Rational t2 = trace_power(xm, 2), t4 = trace_power(xm, 4);
  CHECK(ac[4] == t2 * t2 / 4608 + t4 / 5760);
  CHECK(ahatch(4).component(0, HElement(x, QMatrix::identity(3))) == 3);
}

TEST_CASE("polarization recovers the diagonal") {
  Rng rng(52);
  const auto ahat = ahat_series(4);
  const auto ch = chern_character(4);
  for (int t = 0; t < 4; ++t) {
    const HElement h(SpElement(random_poly(rng, 1, 2, 2, 3)), random_matrix(rng, 2, 2, 2));
    for (int k = 1; k <= 4; ++k) {
      const std::vector<HElement> args(static_cast<std::size_t>(k), h);
      CHECK(ahat.polarized(args) == factorial(k) * ahat.component(k, h));
      CHECK(ch.polarized(args) == factorial(k) * ch.component(k, h));
    }
    // symmetric in its arguments
    const HElement g(SpElement(random_poly(rng, 1, 2, 2, 2)), random_matrix(rng, 2, 2, 1));
    const std::vector<HElement> hg{h, g, g}, gh{g, h, g};
    CHECK(ch.polarized(hg) == ch.polarized(gh));
  }
}

TEST_CASE("trace identities on matrices") {
  SuiteConfig cfg;
  const auto rep = run_suite("trace-id", cfg);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed(), c.name << " " << c.first_failure);
}

TEST_CASE("chern weil cocycle") {
  const auto ch = chern_character(3);
  // an h-valued argument kills the form
  const std::vector<MatrixElement> vs{S("p1*q1", 1), S("q1^3", 1)};
  CHECK(chern_weil_chi(ch, 1, vs) == 0);
  CHECK(chern_weil_chi(ch, 0, std::vector<MatrixElement>{}, 3) == 3);
  // χ(P_1)(p, q³) = ½ (C(p,q³) − C(q³,p)) traced; C(p,q³) = −pr[p,q³] = 3q² in sp
  const std::vector<MatrixElement> pq{S("p1"), S("q1^3")};
  const Rational direct = chern_weil_chi(ch, 1, pq);
  const auto c = curvature(S("p1"), S("q1^3"));
  CHECK(direct == ch.component(1, c));
}

TEST_CASE("evaluation at the unit") {
  const TauFamily<WeylPoly> fam(1, 1);
  CHECK(ev1(fam.component(1), std::vector<WeylPoly>{P("p1"), P("q1")}) == 1);
  CHECK(ev1(fam.component(0), std::vector<WeylPoly>{}) == 1);
  CHECK_THROWS_AS(ev1(fam.component(1), std::vector<WeylPoly>{P("p1")}), DegreeMismatch);
}

TEST_CASE("chevalley eilenberg differential") {
  // d of a 1-cochain is minus its value on the bracket
  const LieCochain<WeylPoly> phi = [](const std::vector<WeylPoly>& a) { return a[0].constant_term(); };
  const auto br = [](const WeylPoly& a, const WeylPoly& b) { return moyal_bracket(a, b); };
  CHECK(ce_differential(phi, std::vector<WeylPoly>{P("p1"), P("q1")}, br) == 1);
  // d² = 0
  const LieCochain<WeylPoly> dphi = [&](const std::vector<WeylPoly>& a) { return ce_differential(phi, a, br); };
  CHECK(ce_differential(dphi, std::vector<WeylPoly>{P("p1^2"), P("q1"), P("p1*q1^2")}, br) == 0);
}

TEST_CASE("integrals of quadratic words") {
  const auto basis = sp_basis(1);
  CHECK(hm_oracle(std::span<const SpElement>{}) == 1);
  CHECK(hm_oracle(std::span<const SpElement>(basis.data(), 1)) == 0);
  SuiteConfig cfg;
  cfg.m = 2;
  const auto rep = run_suite("hm", cfg);
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed(), c.name << " " << c.first_failure);
}

TEST_CASE("cochain comparison with chern weil forms") {
  CHECK(verify_thm13(1, 1, 0, {}).relation == ChernWeilReport::Relation::Equal);
  const std::vector<WnrElement> t1{WnrElement::linear(1, 1, 1), WnrElement::cubic(1, 1, 1, 1, 1)};
  const auto rep = verify_thm13(1, 1, 1, t1);
  CHECK(rep.lhs == rep.rhs);
  // degree one only sees the trace of the gl part
  QMatrix m(2, 2);
  m(0, 0) = 1;
  const std::vector<WnrElement> t2{WnrElement::linear(1, 2, 1), WnrElement::q_matrix(1, 1, m)};
  const auto rep2 = verify_thm13(1, 2, 1, t2);
  CHECK(rep2.lhs == rep2.rhs);
  CHECK(rep2.lhs != 0);
  const std::vector<WnrElement> bad{WnrElement::linear(1, 1, 1), WnrElement::linear(1, 1, 1)};
  CHECK_THROWS_AS(verify_thm13(1, 1, 1, bad), InvalidArgument);
  CHECK(to_string(ChernWeilReport::Relation::Opposite) == "opposite");
}
