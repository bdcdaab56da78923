#include <gtest/gtest.h>

#include "homalg/homalg.hpp"

using namespace homalg;

namespace {

HomLieAlgebra twisted_2d() {
  HomLieAlgebra l = HomLieAlgebra::standard(2);
  l.set_bracket(0, 1, {0, 1});
  return twist_lie(l, {{1, 1}, {0, 2}});
}

HomLieAlgebra abelian_2d(std::uint64_t seed) {
  HomLieAlgebra l = HomLieAlgebra::standard(2);
  Rng rng(seed);
  auto entry = [&] { return make_rational(rng.uniform(-4, 4), rng.uniform(1, 3)); };
  l.set_alpha(0, {entry(), entry()});
  l.set_alpha(1, {entry(), entry()});
  return l;
}

// Oracle for the Hom-Jacobi sum over basis triples, written directly from
// the structure constants.
bool hom_jacobi_holds(const HomLieAlgebra& l) {
  const std::size_t n = l.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const LieVector ei = l.unit_vector(i), ej = l.unit_vector(j), ek = l.unit_vector(k);
        const LieVector s = l.bracket(l.alpha(ei), l.bracket(ej, ek)) + l.bracket(l.alpha(ej), l.bracket(ek, ei)) +
                            l.bracket(l.alpha(ek), l.bracket(ei, ej));
        if (!is_zero(s)) return false;
      }
    }
  }
  return true;
}

bool all_proven(const SuiteReport& s) { return s.passed() && !s.verdicts.empty(); }

}  // namespace

TEST(HomLie, TwistedBracketIsAlphaOfBracket) {
  const HomLieAlgebra l = twisted_2d();
  // [e1, e2]' = alpha([e1, e2]) = alpha(e2) = 2 e2.
  EXPECT_EQ(l.structure(0, 1), (LieVector{0, 2}));
  EXPECT_EQ(l.structure(1, 0), (LieVector{0, -2}));
  EXPECT_EQ(l.alpha(l.unit_vector(0)), (LieVector{1, 1}));
  EXPECT_TRUE(check_hom_lie(l).passed());
  EXPECT_TRUE(hom_jacobi_holds(l));
}

TEST(HomLie, ChecksAgreeWithJacobiOracle) {
  HomLieAlgebra bad = HomLieAlgebra::standard(3);
  bad.set_bracket(0, 1, {0, 0, 1});
  bad.set_bracket(0, 2, {1, 0, 0});
  EXPECT_FALSE(hom_jacobi_holds(bad));
  EXPECT_FALSE(check_hom_lie(bad).passed());
  EXPECT_THROW(EnvelopeModel(bad, Bound{2, 0}), PreconditionError);
  const HomLieAlgebra g = gl2();
  EXPECT_TRUE(hom_jacobi_holds(g));
  EXPECT_TRUE(check_hom_lie(g).passed());
}

TEST(HomLie, BracketIsSkew) {
  HomLieAlgebra l = HomLieAlgebra::standard(2);
  l.set_bracket(0, 1, {Rational(1, 2), 3});
  const LieVector x{1, 2}, y{-1, Rational(1, 3)};
  EXPECT_EQ(l.bracket(x, y) + l.bracket(y, x), (LieVector{0, 0}));
  EXPECT_TRUE(is_zero(l.bracket(x, x)));
}

TEST(HomLie, CommutatorOfTwistedMatricesIsHomLie) {
  const MatrixAlgebra<Twisted<PolyAlgebra>> m2(q_twisted_line(2));
  EXPECT_TRUE(hlie_of(m2, SamplePlan{5, 50, 3000}).passed());
}

TEST(HomLie, DirectSumTagsBasis) {
  const HomLieAlgebra l = twisted_2d();
  const HomLieAlgebra s = direct_sum(l, {"'", "''"});
  ASSERT_EQ(s.dimension(), 4u);
  EXPECT_EQ(s.basis()[0], Symbol("e1'"));
  EXPECT_EQ(s.basis()[3], Symbol("e2''"));
  // Distinct summands commute.
  EXPECT_TRUE(is_zero(s.structure(0, 3)));
  EXPECT_EQ(s.structure(2, 3), (LieVector{0, 0, 0, 2}));
  EXPECT_TRUE(check_hom_lie(s).passed());
}

TEST(Envelope, BracketRelationHolds) {
  const HomLieAlgebra l = twisted_2d();
  const EnvelopeModel u = envelope(l, Bound{3, 0});
  const LinComb e1 = u.leaf(0), e2 = u.leaf(1);
  EXPECT_TRUE(u.equal_mod(mul(e1, e2) - mul(e2, e1), u.element(l.structure(0, 1))).proven());
  EXPECT_TRUE(u.reduce(u.bracket_relation(0, 1)).is_zero());
  EXPECT_EQ(u.alpha(e1), e1 + e2);
}

TEST(Envelope, ThreeTermIdentityOnLeaves) {
  for (const HomLieAlgebra& l : {twisted_2d(), abelian_2d(3)}) {
    const EnvelopeCoproduct d = delta_env(l);
    for (std::size_t i = 0; i < l.dimension(); ++i) {
      auto [lhs, rhs] = d.coassociativity_sides(make_leaf(l.basis()[i]));
      EXPECT_EQ(lhs, d.three_term(i));
      EXPECT_EQ(rhs, d.three_term(i));
    }
  }
}

TEST(Envelope, DeltaOfLeafIsPrimitiveUpToAlpha) {
  const HomLieAlgebra l = twisted_2d();
  const EnvelopeCoproduct d = delta_env(l);
  EXPECT_EQ(d.delta_leaf(0), parse_lincomb("e1' + e2' + e1'' + e2''"));
  EXPECT_EQ(d.delta(LinComb::unit()), LinComb::unit());
}

TEST(Envelope, SuitePassesForTwistedAndAbelian) {
  EXPECT_TRUE(all_proven(check_envelope_bialgebra(twisted_2d(), Bound{3, 0})));
  EXPECT_TRUE(all_proven(check_envelope_bialgebra(abelian_2d(17), Bound{3, 0})));
  EXPECT_TRUE(all_proven(check_envelope_bialgebra(twisted_2d(), Bound{3, 0}, SaturationConfig::non_unital())));
}

TEST(Envelope, UnitInstancesCollapseGenericAbelian) {
  const EnvelopeModel unital = envelope(abelian_2d(17), Bound{3, 0});
  for (const auto& [arity, dim] : unital.residual_dimensions()) EXPECT_EQ(dim, 0u) << "arity " << arity;
  const EnvelopeModel plain = envelope(abelian_2d(17), Bound{3, 0}, SaturationConfig::non_unital());
  EXPECT_EQ(plain.residual_dimensions().at(1), 2u);
}

TEST(Envelope, ExponentIsForcedToZero) {
  const EnvelopeModel u = envelope(twisted_2d(), Bound{2, 1});
  EXPECT_EQ(u.relations().bound().max_exponent, 0u);
}
