#include <gtest/gtest.h>

#include "test_support.hpp"
#include "weilcert/parser.hpp"
#include "weilcert/weil_model.hpp"

namespace weilcert::model {
namespace {

Polynomial V(const char* text) { return parse_poly(text, affine_registry()); }
Polynomial E(const char* text) { return parse_poly(text, eigen_registry()); }

CoefficientTriple triple(std::initializer_list<long> values) {
  std::vector<Rational> v(values.begin(), values.end());
  return CoefficientTriple::from_flat(v);
}

// --- group action -------------------------------------------------------------------

TEST(GroupAction, EigenvaluesOfNamedGenerators) {
  const auto sigma = GroupElement::sigma();
  const auto i = GaussianRational::i();
  EXPECT_EQ(apply_group(sigma, V("s + t + x + y")), V("s + t + x + y"));
  EXPECT_EQ(apply_group(sigma, V("s - t + x - y")), -V("s - t + x - y"));
  EXPECT_EQ(apply_group(sigma, V("s - i*t - x + i*y")), i * V("s - i*t - x + i*y"));
  EXPECT_EQ(apply_group(sigma, V("s*x + t*y")), V("s*x + t*y"));
  EXPECT_EQ(apply_group(sigma, V("s*x - t*y")), -V("s*x - t*y"));
}

TEST(GroupAction, SubstitutionConvention) {
  const auto sigma = GroupElement::sigma();
  EXPECT_EQ(sigma.apply(V("s")), V("t"));
  EXPECT_EQ(sigma.apply(V("y")), V("s"));
  EXPECT_EQ(GroupElement::tau().apply(V("s*t")), V("x*t"));
}

TEST(GroupAction, Relations) {
  const auto r = check_group_relations();
  EXPECT_TRUE(r.sigma_order_four);
  EXPECT_TRUE(r.tau_involution);
  EXPECT_TRUE(r.dihedral);
  const auto sigma = GroupElement::sigma();
  EXPECT_FALSE(sigma.power(2).acts_like(GroupElement::identity()));
  EXPECT_TRUE(sigma.power(4).acts_like(GroupElement::identity()));
}

TEST(GroupAction, IsRingHomomorphism) {
  testing::Gen g(31);
  const auto sigma = GroupElement::sigma();
  for (int n = 0; n < 50; ++n) {
    const auto p = g.polynomial(affine_registry(), 4, 2);
    const auto q = g.polynomial(affine_registry(), 4, 2);
    EXPECT_EQ(sigma.apply(p * q), sigma.apply(p) * sigma.apply(q));
  }
}

// --- eigenspaces --------------------------------------------------------------------

TEST(Eigenspaces, Dimensions) {
  const auto e = eigen_decomposition();
  EXPECT_EQ(e.dimensions(), (std::array<std::size_t, 4>{6, 4, 3, 3}));
  EXPECT_EQ(e.total_rank, 16U);
  EXPECT_TRUE(e.invariant_part_tau_fixed);
}

TEST(Eigenspaces, GeneratorsAreEigenvectors) {
  const auto e = eigen_decomposition();
  const auto sigma = GroupElement::sigma();
  for (const auto& space : e.spaces) {
    for (const auto& gen : space.generators) EXPECT_EQ(sigma.apply(gen), space.eigenvalue * gen) << space.label;
  }
}

TEST(Eigenspaces, NamedGeneratorValues) {
  EXPECT_EQ(generator("a1"), V("s + t + x + y"));
  EXPECT_EQ(generator("c1"), V("s - i*t - x + i*y"));
  EXPECT_EQ(generator("a4"), V("s*x + t*y"));
  EXPECT_EQ(generator("b4"), V("s*x - t*y"));
  EXPECT_THROW(generator("e1"), Error);
}

// --- identities ---------------------------------------------------------------------

TEST(Identities, AllSeventeenVanish) {
  const auto checks = verify_identities();
  ASSERT_EQ(checks.size(), 17U);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed) << c.name << " residual " << c.residual;
    EXPECT_TRUE(c.residual.is_zero());
  }
  EXPECT_NO_THROW(require_passed(checks));
  EXPECT_EQ(verify_cubic_relation().size(), 1U);
  EXPECT_EQ(verify_segre_b().size(), 7U);
  EXPECT_EQ(verify_segre_cd().size(), 9U);
}

TEST(Identities, MutationsLeaveResidual) {
  const auto mutated = check_identity(
      {"cubic 4->5", E("a1^2*a5 - a1*a3*a4 + a2*a4^2 - 5*a2*a5*a6 + a3^2*a6"), E("0")});
  EXPECT_FALSE(mutated.passed);
  EXPECT_FALSE(mutated.residual.is_zero());
  // The residual of the mutation is exactly the extra -a2 a5 a6 term.
  EXPECT_EQ(mutated.residual, expand_generators(E("-a2*a5*a6")));

  const auto b = check_identity({"b1^2 mutated", E("b1^2"), E("a1^2 - 3*a2*a6")});
  EXPECT_FALSE(b.passed);
  EXPECT_THROW(require_passed(std::vector<IdentityCheck>{b}), IdentityFailed);

  const auto cd = check_identity({"c1*d1 mutated", E("c1*d1"), E("a1^2 - 2*a2*a6 - 3*a4*a6")});
  EXPECT_FALSE(cd.passed);
}

TEST(Identities, CubicWithA4LeadingTermIsNotARelation) {
  const auto alt = check_identity({"cubic a1^2 a4", E("a1^2*a4 - a1*a3*a4 + a2*a4^2 - 4*a2*a5*a6 + a3^2*a6"), E("0")});
  EXPECT_FALSE(alt.passed);
}

TEST(Identities, CubicRelationIsUnique) {
  const auto basis = cubic_relation_basis();
  ASSERT_EQ(basis.size(), 1U);
  const auto cubic = cubic_identities().front().lhs;
  // Proportional: basis[0] * lc(cubic) == cubic * lc(basis[0]).
  const auto lc_b = basis[0].terms().begin()->second;
  const auto lc_c = cubic.terms().begin()->second;
  EXPECT_EQ(basis[0] * lc_c, cubic * lc_b);
}

// --- diagonal -----------------------------------------------------------------------

TEST(Diagonal, RestrictionExamples) {
  const auto st = diagonal_registry();
  EXPECT_EQ(restrict_to_diagonal(generator("a4")), parse_poly("s^2 + t^2", st));
  EXPECT_EQ(restrict_to_diagonal(generator("a1")), parse_poly("2*s + 2*t", st));
  EXPECT_EQ(restrict_to_diagonal(generator("a2")), parse_poly("4*s*t", st));
}

TEST(Diagonal, FactorsAndBasePoints) {
  const auto r = verify_diagonal();
  const std::array<long, 6> expected = {2, 4, 2, 1, 1, 1};
  for (std::size_t k = 0; k < 6; ++k) {
    ASSERT_TRUE(r.factors[k].has_value()) << k;
    EXPECT_EQ(*r.factors[k], GaussianRational(expected[k])) << k;
  }
  EXPECT_TRUE(r.base_point_free());
  EXPECT_TRUE(r.passed());
  EXPECT_NO_THROW(require_diagonal());
}

TEST(Diagonal, ProportionalityFactor) {
  const auto st = diagonal_registry();
  EXPECT_EQ(proportionality_factor(parse_poly("3*s + 3*t", st), parse_poly("s + t", st)), GaussianRational(3));
  EXPECT_FALSE(proportionality_factor(parse_poly("s + 2*t", st), parse_poly("s + t", st)).has_value());
  EXPECT_FALSE(proportionality_factor(parse_poly("0", st), parse_poly("s + t", st)).has_value());
}

// --- elimination --------------------------------------------------------------------

class Elimination : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    symbolic_ = new EliminationResult(eliminate());
    det_ = new Polynomial(det_M(*symbolic_));
  }
  static void TearDownTestSuite() {
    delete symbolic_;
    delete det_;
  }
  static EliminationResult* symbolic_;
  static Polynomial* det_;
};

EliminationResult* Elimination::symbolic_ = nullptr;
Polynomial* Elimination::det_ = nullptr;

TEST_F(Elimination, MatrixAtOrigin) {
  const auto m = evaluate(symbolic_->M, CoefficientTriple::origin().point());
  const std::vector<std::vector<long>> expected = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, -2, 0}, {0, 0, 1, 0, 0, 0},
                                                   {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, -1}};
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(m(r, c), GaussianRational(expected[r][c])) << r << "," << c;
  }
  const auto numeric = eliminate(CoefficientTriple::origin());
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) EXPECT_TRUE(numeric.M(r, c).is_constant());
  }
}

TEST_F(Elimination, EntryDegreesAtMostTwo) {
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) EXPECT_LE(symbolic_->M(r, c).total_degree(), 2U);
  }
}

TEST_F(Elimination, ExtraRowsAreUnitVectors) {
  for (std::size_t r = 6; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) {
      const auto& e = symbolic_->full(r, c);
      if (c == r) {
        EXPECT_TRUE(e.is_constant() && e.constant_term().is_one()) << r << "," << c;
      } else {
        EXPECT_TRUE(e.is_zero()) << r << "," << c;
      }
    }
  }
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 6; c < 9; ++c) EXPECT_TRUE(symbolic_->full(r, c).is_zero());
  }
}

TEST_F(Elimination, DeterminantFacts) {
  EXPECT_FALSE(det_->is_zero());
  EXPECT_EQ(evaluate(*det_, CoefficientTriple::origin().point()), GaussianRational(1));
  const auto full = det_bareiss(symbolic_->full);
  EXPECT_TRUE(full == *det_ || full == -*det_);
}

TEST_F(Elimination, DeterminantKnownValue) {
  const auto t = triple({1, 2, 3, -1, 0, 2, 1, 1, -2});
  EXPECT_EQ(evaluate(*det_, t.point()), GaussianRational(21529));
}

TEST_F(Elimination, EvaluationCommutesWithDeterminant) {
  testing::Gen g(32);
  for (int n = 0; n < 20; ++n) {
    std::vector<Rational> v;
    for (int k = 0; k < 9; ++k) v.push_back(g.rational(10));
    const auto t = CoefficientTriple::from_flat(v);
    EXPECT_EQ(evaluate(*det_, t.point()), det_bareiss(evaluate(symbolic_->M, t.point())));
  }
}

TEST_F(Elimination, QuadricAtOriginIsDegenerate) {
  const auto origin = CoefficientTriple::origin();
  EXPECT_EQ(quadric_kernel_dimension(*symbolic_, origin), 3U);
  EXPECT_EQ(rank(quadric_relation_at(*symbolic_, origin)), 4U);
  try {
    quadric_Q(*symbolic_, origin);
    FAIL() << "expected KernelNotUnique";
  } catch (const KernelNotUnique& e) {
    EXPECT_EQ(e.dimension(), 3U);
  }
}

TEST_F(Elimination, QuadricIsUniqueAtRandomTriples) {
  testing::Gen g(33);
  for (int n = 0; n < 20; ++n) {
    std::vector<Rational> v;
    for (int k = 0; k < 9; ++k) v.push_back(Rational(g.integer(-10, 10)));
    const auto t = CoefficientTriple::from_flat(v);
    ASSERT_EQ(quadric_kernel_dimension(*symbolic_, t), 1U) << t.to_string();
    const auto q = quadric_Q(*symbolic_, t);
    ASSERT_EQ(q.size(), 7U);
    const auto rel = quadric_relation_at(*symbolic_, t);
    for (std::size_t c = 0; c < 6; ++c) {
      GaussianRational sum;
      for (std::size_t r = 0; r < 7; ++r) sum += q[r] * rel(r, c);
      EXPECT_TRUE(sum.is_zero());
    }
  }
}

TEST_F(Elimination, IndependenceCertificate) {
  const auto origin = independence_certificate(*det_, *symbolic_, CoefficientTriple::origin());
  EXPECT_EQ(origin.verdict, Verdict::Pass);
  EXPECT_EQ(origin.value, GaussianRational(1));
  EXPECT_EQ(origin.scalar_det, origin.value);

  // On the A1-C1 plane det M = (4 A1 C1 - 1)^2, so A1 = 1, C1 = 1/4 is a zero.
  std::vector<Rational> v(9, Rational(0));
  v[0] = 1;
  v[6] = Rational(1, 4);
  const auto on_locus = CoefficientTriple::from_flat(v);
  const auto degenerate = independence_certificate(*det_, *symbolic_, on_locus);
  EXPECT_EQ(degenerate.verdict, Verdict::Fail);
  EXPECT_TRUE(degenerate.value.is_zero());
  EXPECT_TRUE(degenerate.scalar_det.is_zero());
  EXPECT_TRUE(degenerate.full_det.is_zero());

  const auto w = triple({-7, 7, 0, -4, 9, -8, -6, 2, 10});
  const auto rep = independence_certificate(*det_, *symbolic_, w);
  EXPECT_EQ(rep.verdict, Verdict::Pass);
  EXPECT_EQ(rep.value, GaussianRational(93929761873));
  EXPECT_TRUE(rep.full_det == rep.value || rep.full_det == -rep.value);
}

// --- genus --------------------------------------------------------------------------

TEST(Genus, ChowRingCounts) {
  const auto r = genus_check();
  EXPECT_EQ(r.chow_coefficient, 24);
  EXPECT_EQ(r.genus, 13);
  for (auto d : r.factor_degrees) EXPECT_EQ(d, 6);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(ChowRing::degree(ChowRing::power(ChowRing::generator(0), 2)), 0);
}

// --- fixed points -------------------------------------------------------------------

TEST(FixedPoints, WitnessIsCertifiedEmpty) {
  const auto rep = fixed_point_free_check(triple({-7, 7, 0, -4, 9, -8, -6, 2, 10}));
  EXPECT_EQ(rep.verdict, FpfVerdict::CertifiedEmpty);
  EXPECT_EQ(rep.r12.degree, 8U);
  EXPECT_TRUE(rep.analysis.certified_empty);
}

TEST(FixedPoints, IdenticalFormsAreInconclusive) {
  const auto f = E("a4 - a1 - 2*a2");
  EXPECT_EQ(fixed_point_free_check(f, f, E("a6 - a3")).verdict, FpfVerdict::Inconclusive);
}

TEST(FixedPoints, ZeroRestrictionIsInconclusive) {
  const auto zero_form = E("0");
  EXPECT_EQ(fixed_point_free_check(zero_form, E("a5 - a1"), E("a6 - a2")).verdict, FpfVerdict::Inconclusive);
}

TEST(FixedPoints, RestrictionMatchesDiagonalForms) {
  const auto rep = fixed_point_free_check(triple({1, 0, 0, 0, 0, 0, 0, 0, 0}));
  const auto st = diagonal_registry();
  // a4 - a1 restricts to s^2 + t^2 - 2(s + t).
  EXPECT_EQ(rep.restricted[0], parse_poly("s^2 + t^2 - 2*s - 2*t", st));
  EXPECT_EQ(rep.restricted[2], parse_poly("1", st));
  // f3 = a6 vanishes on the diagonal only at s or t infinite, where f2 = a5 does not.
  EXPECT_EQ(rep.verdict, FpfVerdict::CertifiedEmpty);
}

}  // namespace
}  // namespace weilcert::model
