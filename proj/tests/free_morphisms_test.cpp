#include <gtest/gtest.h>

#include "homalg/homalg.hpp"

using namespace homalg;

namespace {

const std::vector<Symbol> kABCD{Symbol("a"), Symbol("b"), Symbol("c"), Symbol("d")};

}  // namespace

TEST(Handle, GeneratorsAreUnique) {
  EXPECT_THROW(FreeAlgebraHandle::on({"x", "x"}), NamingError);
  const auto h = FreeAlgebraHandle::on({"x", "y"});
  EXPECT_EQ(to_string(h.j(Symbol("x"))), "x@0");
  EXPECT_THROW(h.j(Symbol("q")), AssignmentError);
}

TEST(Evaluator, IsAMorphismIntoTwistedCarrier) {
  const auto line = q_twisted_line(3);
  Rng rng(21);
  std::map<Symbol, Polynomial> images;
  for (Symbol g : kABCD) images.emplace(g, line.sample(rng));
  const MorphismAssignment<Twisted<PolyAlgebra>> m(line, images);
  Evaluator<Twisted<PolyAlgebra>> eval(m);
  for (int i = 0; i < 60; ++i) {
    const LinComb u = random_lincomb(kABCD, rng, 2, 1, 3);
    const LinComb v = random_lincomb(kABCD, rng, 2, 1, 3);
    EXPECT_EQ(eval(mul(u, v)), line.mul(eval(u), eval(v)));
    EXPECT_EQ(eval(alpha(u)), line.alpha(eval(u)));
    EXPECT_EQ(eval(u + v), eval(u) + eval(v));
  }
}

TEST(Evaluator, LeafPowersFollowAlpha) {
  const auto line = q_twisted_line(2);
  const MorphismAssignment<Twisted<PolyAlgebra>> m(line, {{Symbol("x"), parse_polynomial("t + 1")}});
  // alpha^3(t + 1) = 8t + 1.
  EXPECT_EQ(evaluate(parse_lincomb("x@3"), m), parse_polynomial("8*t + 1"));
}

TEST(Uniqueness, AgreeingAssignmentsEvaluateIdentically) {
  const auto line = q_twisted_line(2);
  Rng rng(8);
  std::map<Symbol, Polynomial> first, second;
  for (Symbol g : kABCD) first.emplace(g, line.sample(rng));
  // Same images built independently, plus an image for a generator never used.
  for (Symbol g : kABCD) second.emplace(g, substitute(first.at(g), {}));
  second.emplace(Symbol("unused"), parse_polynomial("t^5"));
  const MorphismAssignment<Twisted<PolyAlgebra>> f(line, first), g(line, second);
  Evaluator<Twisted<PolyAlgebra>> ef(f), eg(g);
  for (int i = 0; i < 100; ++i) {
    const LinComb v = random_lincomb(kABCD, rng, 3, 1, 4);
    EXPECT_EQ(ef(v), eg(v));
  }
}

TEST(Uniqueness, MatrixRoundTrip) {
  const PolyAlgebra base = PolyAlgebra::over({"t", "u"});
  const MatrixAlgebra<PolyAlgebra> m2(base);
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const Mat2<Polynomial> x = m2.sample(rng);
    const auto m = morphism_from_matrix(base, x);
    EXPECT_EQ(matrix_of_morphism(m), x);
    // The generator a evaluates to the (0,0) entry.
    EXPECT_EQ(evaluate(make_leaf("a"), m), x.at(0, 0));
  }
}

TEST(Evaluator, UnitComponentNeedsStrictUnit) {
  const auto line = q_twisted_line(2);
  const MorphismAssignment<Twisted<PolyAlgebra>> m(line, {{Symbol("x"), parse_polynomial("t")}});
  EXPECT_THROW(evaluate(parse_lincomb("1 + x"), m), UnitMismatchError);
  const MorphismAssignment<PolyAlgebra> strict(PolyAlgebra::over({"t"}), {{Symbol("x"), parse_polynomial("t")}});
  EXPECT_EQ(evaluate(parse_lincomb("2 + x"), strict), parse_polynomial("t + 2"));
}

TEST(Evaluator, MissingImageIsReported) {
  const MorphismAssignment<PolyAlgebra> m(PolyAlgebra::over({"t"}), {{Symbol("x"), parse_polynomial("t")}});
  EXPECT_THROW(evaluate(parse_lincomb("(x * y)"), m), AssignmentError);
}

TEST(FreeCarrier, MultiplicativeButNotHomAssociative) {
  const FreeCarrier f({Symbol("x"), Symbol("y")});
  EXPECT_TRUE(check_multiplicative(f).passed());
  // Hom-associativity only holds in the quotient.
  EXPECT_FALSE(check_hom_associative(f).passed());
}

TEST(FreeCarrier, FreeMorphismsComposeThroughEvaluator) {
  const FreeCarrier target({Symbol("p"), Symbol("q")});
  const MorphismAssignment<FreeCarrier> m(
      target, {{Symbol("x"), parse_lincomb("(p * q)")}, {Symbol("y"), parse_lincomb("p@1 + q")}});
  EXPECT_EQ(evaluate(parse_lincomb("(x * y@1)"), m), parse_lincomb("((p * q) * p@2) + ((p * q) * q@1)"));
}

TEST(Naming, TagsAndCollisions) {
  EXPECT_EQ(split_tag(Symbol("a''")), std::make_pair(Symbol("a"), std::size_t{2}));
  EXPECT_EQ(split_tag(Symbol("a")), std::make_pair(Symbol("a"), std::size_t{0}));
  EXPECT_EQ(tag_of_length(3), "'''");
  EXPECT_EQ(to_string(rename_embed(parse_lincomb("(x * y@1)"), "'")), "(x'@0 * y'@1)");
  EXPECT_THROW(rename_embed(parse_lincomb("x"), "'", {Symbol("x'")}), NamingError);
  EXPECT_THROW(rename_embed(parse_lincomb("x"), "*"), NamingError);
  EXPECT_THROW(tensor_element(parse_lincomb("x"), parse_lincomb("y"), "'", "'"), NamingError);
  EXPECT_EQ(to_string(tensor_element(parse_lincomb("x"), parse_lincomb("y"))), "(x'@0 * y''@0)");
}

TEST(RandomElements, ReproducibleFromSeed) {
  Rng a(77), b(77);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(random_lincomb(kABCD, a), random_lincomb(kABCD, b));
  Rng c(1);
  for (int i = 0; i < 50; ++i) {
    const LinComb v = random_lincomb(kABCD, c, 3, 1);
    EXPECT_LE(v.max_arity(), 3u);
    EXPECT_LE(v.max_exponent(), 1u);
  }
}
