#include <gtest/gtest.h>

#include <string>

#include "homalg/homalg.hpp"

using namespace homalg;

namespace {

std::string data(const char* name) { return std::string(HOMALG_DATA_DIR) + "/" + name; }

template <class F>
std::pair<std::size_t, std::size_t> error_position(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "expected a parse error";
  return {0, 0};
}

}  // namespace

TEST(Descriptor, BialgebraFixtureMatchesBuiltIn) {
  const CoalgebraDescriptor d = load_bialgebra_descriptor(data("m2.bialg"));
  EXPECT_EQ(d.generators.size(), 4u);
  EXPECT_TRUE(d.endo.empty());
  const FreeBialgebra built = m_bialgebra();
  const FreeBialgebra loaded = to_free_bialgebra(d, SaturationConfig::unital(), Bound{});
  for (Symbol g : built.algebra.gens) EXPECT_EQ(loaded.delta.at(g), built.delta.at(g)) << g.name();
  const PolyBialgebra poly = to_poly_bialgebra(d);
  for (const auto& q : poly.base().sweep()) EXPECT_EQ(poly.delta(q), classical_m2_bialgebra().delta(q));
}

TEST(Descriptor, LambdaFixtureMatchesScalingMap) {
  const CoalgebraDescriptor d = load_bialgebra_descriptor(data("m2_lambda3.bialg"));
  const auto phi = phi_lambda(3);
  for (const auto& [s, img] : d.endo) EXPECT_EQ(img, phi.at(s)) << s.name();
  const CoalgebraDescriptor c = load_comodule_descriptor(data("affine_lambda3.comod"));
  EXPECT_EQ(c.endo.at(Symbol("y")), phi_affine(3).at(Symbol("y")));
}

TEST(Descriptor, ComoduleFixtureMatchesBuiltIn) {
  const CoalgebraDescriptor d = load_comodule_descriptor(data("affine.comod"));
  const FreeComodule built = hom_affine_plane();
  for (const auto& [g, img] : built.coaction) EXPECT_EQ(d.free_images.at(g), img);
  const PolyComodule poly = to_poly_comodule(d, classical_m2_bialgebra());
  for (const auto& q : poly.base().sweep()) EXPECT_EQ(poly.rho(q), classical_affine_comodule().rho(q));
}

TEST(Descriptor, HomLieFixture) {
  const HomLieAlgebra l = load_hom_lie_descriptor(data("twisted_2d.hlie"));
  EXPECT_EQ(l.structure(0, 1), (LieVector{0, 2}));
  EXPECT_EQ(l.alpha_row(0), (LieVector{1, 1}));
  EXPECT_EQ(l.alpha_row(1), (LieVector{0, 2}));
  const HomLieAlgebra ab = load_hom_lie_descriptor(data("abelian_2d.hlie"));
  EXPECT_EQ(ab.alpha_row(0), (LieVector{Rational(1, 2), 3}));
  EXPECT_TRUE(is_zero(ab.structure(0, 1)));
}

TEST(Descriptor, AlgebraFixture) {
  const AlgebraDescriptor d = load_algebra_descriptor(data("qtwist_matrix.alg"));
  EXPECT_EQ(d.wrap, Wrap::matrix);
  EXPECT_EQ(d.endo.at(Symbol("t")), parse_polynomial("2*t"));
  EXPECT_EQ(d.endo_label(), "t -> 2*t");
}

TEST(Descriptor, ErrorsPointAtTheOffendingWord) {
  EXPECT_EQ(error_position([] { parse_algebra_descriptor("carrier poly t\n\nfrobnicate t\n"); }),
            std::make_pair(std::size_t{3}, std::size_t{1}));
  EXPECT_EQ(error_position([] { parse_algebra_descriptor("carrier poly t\nendo s = 2*s\n"); }),
            std::make_pair(std::size_t{2}, std::size_t{6}));
  EXPECT_EQ(error_position([] { parse_algebra_descriptor("carrier poly t\nwrap sideways\n"); }),
            std::make_pair(std::size_t{2}, std::size_t{6}));
  EXPECT_EQ(error_position([] { parse_hom_lie_descriptor("dimension 2\nalpha 1 1 x/2\n"); }),
            std::make_pair(std::size_t{2}, std::size_t{11}));
  EXPECT_EQ(error_position([] { parse_hom_lie_descriptor("dimension 2\nbracket 1 3 0 1\n"); }),
            std::make_pair(std::size_t{2}, std::size_t{11}));
  EXPECT_EQ(error_position([] { parse_hom_lie_descriptor("dimension 2\nalpha 1 1\n"); }).first, 2u);
}

TEST(Descriptor, ExpressionErrorsAreReanchored) {
  // "delta a = (a' * )": the stray ')' sits in column 17 of line 2.
  EXPECT_EQ(error_position([] { parse_bialgebra_descriptor("generators a\ndelta a = (a' * )\n"); }),
            std::make_pair(std::size_t{2}, std::size_t{17}));
  EXPECT_EQ(error_position([] { parse_bialgebra_descriptor("generators a\ndelta a = (a * a'')\n"); }).first, 2u);
}

TEST(Descriptor, MissingPiecesAreReported) {
  EXPECT_THROW(parse_algebra_descriptor("endo t = t\n"), ParseError);
  EXPECT_THROW(parse_bialgebra_descriptor("generators a b\ndelta a = (a' * a'')\n"), ParseError);
  EXPECT_THROW(parse_hom_lie_descriptor("basis e1 e2\n"), ParseError);
  EXPECT_THROW(parse_bialgebra_descriptor("generators a a\n"), ParseError);
  EXPECT_THROW(load_algebra_descriptor(data("no_such_file.alg")), Error);
}

TEST(Descriptor, CommentsAndBlankLinesIgnored) {
  const auto d = parse_algebra_descriptor("# header\n\ncarrier poly t u   # two variables\nendo u = 1/2*u\r\n");
  EXPECT_EQ(d.variables.size(), 2u);
  EXPECT_EQ(d.endo.at(Symbol("u")), parse_polynomial("1/2*u"));
}
