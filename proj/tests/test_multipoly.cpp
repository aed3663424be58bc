#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weilcert/multipoly.hpp"
#include "weilcert/parser.hpp"
#include "weilcert/resultant.hpp"

namespace weilcert {
namespace {

const RegistryPtr kStxy = make_registry({"s", "t", "x", "y"});

Polynomial var(const RegistryPtr& reg, const char* name) { return Polynomial::variable(reg, name); }
Polynomial P(const char* text, const RegistryPtr& reg = kStxy) { return parse_poly(text, reg); }

TEST(Registry, RejectsDuplicates) {
  EXPECT_THROW(make_registry({"s", "s"}), Error);
  EXPECT_THROW(Polynomial::variable(kStxy, "z"), UnknownVariable);
}

TEST(PolyArith, Examples) {
  const auto s = var(kStxy, "s");
  const auto t = var(kStxy, "t");
  EXPECT_EQ((s + t) * (s - t), s * s - t * t);
  EXPECT_EQ(s + Polynomial(kStxy), s);
  const auto a1 = P("s + t + x + y");
  EXPECT_EQ((a1 * a1).term_count(), 10U);
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ((s - s).term_count(), 0U);
}

TEST(PolyArith, RegistryMismatch) {
  const auto other = make_registry({"u"});
  EXPECT_THROW(var(kStxy, "s") + var(other, "u"), RegistryMismatch);
  EXPECT_THROW(var(kStxy, "s") * var(other, "u"), RegistryMismatch);
}

TEST(PolyArith, RingAxiomsOnRandomPolynomials) {
  testing::Gen g(3);
  for (int n = 0; n < 60; ++n) {
    const auto p = g.polynomial(kStxy);
    const auto q = g.polynomial(kStxy);
    const auto r = g.polynomial(kStxy);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(PolyArith, NoZeroCoefficientsStored) {
  testing::Gen g(4);
  for (int n = 0; n < 50; ++n) {
    const auto p = g.polynomial(kStxy) * g.polynomial(kStxy) - g.polynomial(kStxy);
    for (const auto& [m, c] : p.terms()) EXPECT_FALSE(c.is_zero());
  }
}

TEST(PolyArith, TermOrderIsGradedLex) {
  const auto p = P("1 + y + s*t + s^2 + x^3 - t");
  EXPECT_EQ(p.to_string(), "x^3 + s^2 + s*t - t + y + 1");
}

TEST(PolyArith, ExactDivision) {
  testing::Gen g(5);
  for (int n = 0; n < 40; ++n) {
    const auto p = g.polynomial(kStxy);
    auto q = g.polynomial(kStxy);
    if (q.is_zero()) continue;
    const auto quot = exact_divide(p * q, q);
    ASSERT_TRUE(quot.has_value());
    EXPECT_EQ(*quot, p);
  }
  EXPECT_FALSE(exact_divide(P("s^2 + 1"), P("s + 1")).has_value());
  EXPECT_FALSE(exact_divide(P("s"), Polynomial(kStxy)).has_value());
}

TEST(Substitute, Examples) {
  const auto reg = make_registry({"a1", "a2", "a3", "a4", "b1", "A1", "A2", "A3"});
  const auto b1 = var(reg, "b1");
  EXPECT_EQ(substitute(b1 * b1, {}), b1 * b1);

  const auto image = P("A1*a1 + A2*a2 + A3*a3", reg);
  EXPECT_EQ(substitute(var(reg, "a4"), {{"a4", image}}), image);

  const auto s = var(kStxy, "s");
  const auto t = var(kStxy, "t");
  EXPECT_EQ(substitute(P("s*x + t*y"), {{"x", s}, {"y", t}}), s * s + t * t);
}

TEST(Substitute, UnknownVariable) {
  EXPECT_THROW(substitute(P("s"), {{"z", P("t")}}), UnknownVariable);
  // Unbound variables must exist in the target registry.
  const auto target = make_registry({"u"});
  EXPECT_THROW(substitute(P("s + t"), {{"s", var(target, "u")}}), UnknownVariable);
}

TEST(Substitute, IsRingHomomorphism) {
  testing::Gen g(6);
  const auto dst = make_registry({"u", "v"});
  for (int n = 0; n < 200; ++n) {
    const auto p = g.polynomial(kStxy, 3, 3);
    const auto q = g.polynomial(kStxy, 3, 3);
    std::map<std::string, Polynomial> b;
    for (const char* name : {"s", "t", "x", "y"}) b.emplace(name, g.polynomial(dst, 2, 2));
    EXPECT_EQ(substitute(p * q, b), substitute(p, b) * substitute(q, b));
    EXPECT_EQ(substitute(p + q, b), substitute(p, b) + substitute(q, b));
  }
}

TEST(Evaluate, Examples) {
  const Point ones = {{"s", 1}, {"t", 1}, {"x", 1}, {"y", 1}};
  EXPECT_EQ(evaluate(P("s + t + x + y"), ones), GaussianRational(4));
  EXPECT_THROW(evaluate(P("s + t"), {{"s", 1}}), UnboundVariable);
  // Variables that do not occur need no value.
  EXPECT_EQ(evaluate(P("2*s"), {{"s", 3}}), GaussianRational(6));
}

TEST(Evaluate, IsRingHomomorphism) {
  testing::Gen g(7);
  for (int n = 0; n < 200; ++n) {
    const auto p = g.polynomial(kStxy);
    const auto q = g.polynomial(kStxy);
    const auto pt = g.point(kStxy);
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
  }
}

TEST(Evaluate, CommutesWithSubstitution) {
  // Two routes: substitute then evaluate, or evaluate the images first.
  testing::Gen g(8);
  const auto dst = make_registry({"u", "v"});
  for (int n = 0; n < 50; ++n) {
    const auto p = g.polynomial(kStxy, 3, 3);
    std::map<std::string, Polynomial> b;
    for (const char* name : {"s", "t", "x", "y"}) b.emplace(name, g.polynomial(dst, 2, 2));
    const auto pt = g.point(dst);
    Point composed;
    for (const auto& [name, img] : b) composed.emplace(name, evaluate(img, pt));
    EXPECT_EQ(evaluate(substitute(p, b), pt), evaluate(p, composed));
  }
}

TEST(CoefficientVector, AlphaBasisAfterElimination) {
  const auto reg = make_registry({"a1", "a2", "a3", "a6", "b1", "b2", "C1", "C2", "C3"});
  auto mono = [&](std::initializer_list<const char*> vs) {
    Monomial m(reg->size());
    for (const char* v : vs) ++m[*reg->index_of(v)];
    return m;
  };
  const std::vector<Monomial> alpha = {mono({"a1", "a1"}), mono({"a2", "a2"}), mono({"a3", "a3"}),
                                       mono({"a1", "a2"}), mono({"a1", "a3"}), mono({"a2", "a3"})};
  const std::vector<std::size_t> avars = {0, 1, 2, 3, 4, 5};

  const auto p = substitute(P("a1^2 - 4*a2*a6", reg), {{"a6", P("C1*a1 + C2*a2 + C3*a3", reg)}});
  const auto cv = coefficient_vector(p, alpha, avars);
  EXPECT_TRUE(cv.remainder.is_zero());
  const std::vector<Polynomial> expected = {P("1", reg), P("-4*C2", reg), P("0", reg),
                                            P("-4*C1", reg), P("0", reg), P("-4*C3", reg)};
  EXPECT_EQ(cv.coefficients, expected);
  const Point zero_c = {{"C1", 0}, {"C2", 0}, {"C3", 0}};
  std::vector<GaussianRational> at_zero;
  for (const auto& c : cv.coefficients) {
    EXPECT_LE(c.total_degree(), 1U);
    at_zero.push_back(evaluate(c, zero_c));
  }
  EXPECT_EQ(at_zero, (std::vector<GaussianRational>{1, 0, 0, 0, 0, 0}));

  const auto zero = coefficient_vector(Polynomial(reg), alpha, avars);
  for (const auto& c : zero.coefficients) EXPECT_TRUE(c.is_zero());
  EXPECT_TRUE(zero.remainder.is_zero());

  const auto bb = P("b1*b2", reg);
  const auto disjoint = coefficient_vector(bb, alpha, avars);
  for (const auto& c : disjoint.coefficients) EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(disjoint.remainder, bb);
}

TEST(CoefficientVector, ReconstructsInput) {
  testing::Gen g(9);
  std::vector<Monomial> basis;
  for (const char* text : {"s^2", "s*t", "x", "1"}) basis.push_back(P(text).terms().begin()->first);
  for (int n = 0; n < 50; ++n) {
    const auto p = g.polynomial(kStxy, 6, 3);
    const auto cv = coefficient_vector(p, basis);
    Polynomial back = cv.remainder;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      EXPECT_TRUE(cv.coefficients[k].is_constant());
      back += cv.coefficients[k] * Polynomial::monomial(kStxy, basis[k]);
    }
    EXPECT_EQ(back, p);
    for (const auto& [m, c] : cv.remainder.terms()) {
      EXPECT_EQ(std::find(basis.begin(), basis.end(), m), basis.end());
    }
  }
}

TEST(Resultant, Examples) {
  const auto st = make_registry({"s", "t"});
  EXPECT_EQ(sylvester_resultant(P("s - t", st), P("s + t", st), "t"), P("-2*s", st));
  // Res_t(f, t - 1) = f(1) for monic linear g: 1 - s.
  EXPECT_EQ(sylvester_resultant(P("t^2 - s", st), P("t - 1", st), "t"), P("1 - s", st));
  const auto f = P("t^3 + s*t - 2", st);
  EXPECT_TRUE(sylvester_resultant(f, f, "t").is_zero());
  EXPECT_THROW(sylvester_resultant(P("s", st), P("t", st), "t"), DegreeZero);
}

TEST(Resultant, VanishesExactlyAtCommonRoots) {
  // f = (t - s)(t + 1), g = (t - 2)(t + s): common root iff s is 0, 1 or 2.
  const auto st = make_registry({"s", "t"});
  const auto f = P("(t - s)*(t + 1)", st);
  const auto g = P("(t - 2)*(t + s)", st);
  const auto r = sylvester_resultant(f, g, "t");
  for (long s = -4; s <= 4; ++s) {
    const bool common = s == 2 || s == 1 || s == 0;
    EXPECT_EQ(evaluate(r, {{"s", s}}).is_zero(), common) << "s = " << s;
  }
}

TEST(BinaryForms, CommonZeroAnalysis) {
  const auto st = make_registry({"s", "t"});
  // (s - 1)(s - 2) and (s - 3): no common root.
  std::vector<BinaryForm> forms = {{P("(s - 1)*(s - 2)", st), 0, 2}, {P("s - 3", st), 0, 2}};
  EXPECT_TRUE(common_zero_analysis(forms).certified_empty);
  // Both of formal degree 2 but affine degree 1: common root at infinity.
  forms = {{P("s - 1", st), 0, 2}, {P("s - 3", st), 0, 2}};
  const auto inf = common_zero_analysis(forms);
  EXPECT_FALSE(inf.certified_empty);
  EXPECT_TRUE(inf.common_root_at_infinity);
  forms = {{P("(s - 1)*(s + 1)", st), 0, 2}, {P("(s - 1)*s", st), 0, 2}};
  EXPECT_FALSE(common_zero_analysis(forms).certified_empty);
  forms = {{Polynomial(st), 0, 2}};
  EXPECT_FALSE(common_zero_analysis(forms).certified_empty);
}

TEST(BinaryForms, UnivariateGcd) {
  const auto st = make_registry({"s", "t"});
  const auto g = univariate_gcd(dense_coefficients(P("(s - 1)*(s + 2)*(s - 3)", st), 0),
                                dense_coefficients(P("2*(s - 3)*(s + 2)*(s + 5)", st), 0));
  EXPECT_EQ(g, dense_coefficients(P("(s + 2)*(s - 3)", st), 0));
}

}  // namespace
}  // namespace weilcert
