#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "homalg/homalg.hpp"

using namespace homalg;

namespace {

// Oracle: push alpha weights to the leaves by carrying the accumulated weight
// down the tree and printing directly, without going through NormalTerm.
std::string oracle_normal_form(const RawTerm& t, std::uint32_t shift = 0) {
  switch (t.kind()) {
    case RawTerm::Kind::leaf:
      return t.as_leaf().gen.name() + "@" + std::to_string(t.as_leaf().exp + shift);
    case RawTerm::Kind::product:
      return "(" + oracle_normal_form(*t.left(), shift) + " * " + oracle_normal_form(*t.right(), shift) + ")";
    case RawTerm::Kind::alpha:
      return oracle_normal_form(*t.child(), shift + t.weight());
  }
  return {};
}

RawTerm random_raw(std::mt19937_64& rng, int depth) {
  const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> pick(0, 5);
  const int k = depth == 0 ? 0 : pick(rng);
  if (k <= 1) return RawTerm::leaf(Symbol(names[rng() % 3]), static_cast<std::uint32_t>(rng() % 3));
  if (k <= 3) return RawTerm::product(random_raw(rng, depth - 1), random_raw(rng, depth - 1));
  return RawTerm::alpha(1 + static_cast<std::uint32_t>(rng() % 2), random_raw(rng, depth - 1));
}

// Rewrite alpha nodes without changing meaning: split a weight, push a node
// through a product, or pull matching weights out of both factors.
RawTerm scramble(const RawTerm& t, std::mt19937_64& rng) {
  switch (t.kind()) {
    case RawTerm::Kind::leaf: {
      const Leaf l = t.as_leaf();
      if (l.exp > 0 && rng() % 2) return RawTerm::alpha(l.exp, RawTerm::leaf(l.gen, 0));
      return RawTerm::leaf(l.gen, l.exp);
    }
    case RawTerm::Kind::product:
      return RawTerm::product(scramble(*t.left(), rng), scramble(*t.right(), rng));
    case RawTerm::Kind::alpha: {
      const std::uint32_t w = t.weight();
      const RawTerm& c = *t.child();
      if (w > 1 && rng() % 2) return RawTerm::alpha(1, RawTerm::alpha(w - 1, scramble(c, rng)));
      if (c.kind() == RawTerm::Kind::product && rng() % 2) {
        return RawTerm::product(scramble(RawTerm::alpha(w, RawTerm::embed(normalize_term(*c.left()))), rng),
                                scramble(RawTerm::alpha(w, RawTerm::embed(normalize_term(*c.right()))), rng));
      }
      return RawTerm::alpha(w, scramble(c, rng));
    }
  }
  return t;
}

LinComb random_element(std::mt19937_64& rng) {
  LinComb v;
  const int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) {
    v.add_term(normalize_term(random_raw(rng, 3)), make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
  }
  if (rng() % 3 == 0) v.add_unit(Rational(static_cast<long>(rng() % 5) - 2));
  return v;
}

}  // namespace

TEST(Normalize, MatchesWeightPushingOracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const RawTerm t = random_raw(rng, 4);
    EXPECT_EQ(to_string(normalize_term(t)), oracle_normal_form(t)) << to_string(t);
  }
}

TEST(Normalize, ConfluentUnderAlphaRewrites) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const RawTerm t = random_raw(rng, 4);
    const RawTerm u = scramble(t, rng);
    EXPECT_EQ(normalize_term(t), normalize_term(u)) << to_string(t) << " vs " << to_string(u);
  }
}

TEST(Normalize, GoldenExamples) {
  EXPECT_EQ(to_string(parse_term("(A 2 (x * (A 1 y)))")), "(x@2 * y@3)");
  EXPECT_EQ(to_string(parse_term("((x * y) * (A 1 z))")), "((x@0 * y@0) * z@1)");
  EXPECT_EQ(to_string(parse_raw_term("(A 2 (x@0 * (A 1 y)))")), "(A 2 (x@0 * (A 1 y@0)))");
  EXPECT_EQ(to_string(parse_lincomb("3/2*(x*y) + -1*y + 2")), "2 + -1*y@0 + 3/2*(x@0 * y@0)");
  EXPECT_EQ(to_string(parse_lincomb("x - x")), "0");
}

TEST(Normalize, EmbedIsRightInverse) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const NormalTerm n = normalize_term(random_raw(rng, 4));
    EXPECT_EQ(normalize_term(RawTerm::embed(n)), n);
  }
}

TEST(TermOrder, ArityMajorAndTotal) {
  std::mt19937_64 rng(5);
  std::vector<NormalTerm> ts;
  for (int i = 0; i < 150; ++i) ts.push_back(normalize_term(random_raw(rng, 3)));
  for (const auto& a : ts) {
    for (const auto& b : ts) {
      const auto ab = a <=> b;
      const auto ba = b <=> a;
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, ba > 0);
      if (a.arity() < b.arity()) {
        EXPECT_TRUE(ab < 0);
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 1; i < ts.size(); ++i) EXPECT_LE(ts[i - 1].arity(), ts[i].arity());
}

TEST(TermOrder, LeftDepthBeforeLeaves) {
  // Same arity: ((..)..) and (..(..)) differ in leaf depths, which decide before leaf names.
  const NormalTerm left = parse_term("((z * z) * z)");
  const NormalTerm right = parse_term("(x * (x * x))");
  EXPECT_TRUE((left <=> right) != 0);
  EXPECT_EQ((left <=> right) < 0, left.leaf_depths() < right.leaf_depths());
}

TEST(Text, PrintParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const LinComb v = random_element(rng);
    EXPECT_EQ(parse_lincomb(to_string(v)), v) << to_string(v);
  }
}

TEST(Text, ParseErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t column;
  };
  const Case cases[] = {{"(x * y", 7}, {"(A 0 x)", 4}, {"(x + y)", 4}, {"x@", 3}, {"1/0*x", 1}, {"((x * y) * )", 12}};
  for (const auto& c : cases) {
    try {
      parse_lincomb(c.text);
      ADD_FAILURE() << "no error for " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 1u) << c.text;
      EXPECT_EQ(e.column(), c.column) << c.text << ": " << e.what();
    }
  }
}

TEST(Text, LineNumberIsReported) {
  try {
    parse_lincomb("(x * )", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(std::string(e.what()).rfind("4:", 0), 0u);
  }
}

TEST(LinCombAlgebra, MultiplicationIsBilinear) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const LinComb u = random_element(rng), v = random_element(rng), w = random_element(rng);
    const Rational s = make_rational(static_cast<long>(rng() % 9) - 4, 3);
    EXPECT_EQ(mul(s * u + v, w), s * mul(u, w) + mul(v, w));
    EXPECT_EQ(mul(w, s * u + v), s * mul(w, u) + mul(w, v));
  }
}

TEST(LinCombAlgebra, AlphaIsMultiplicativeAndAdditive) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const LinComb u = random_element(rng), v = random_element(rng);
    EXPECT_EQ(alpha(mul(u, v)), mul(alpha(u), alpha(v)));
    EXPECT_EQ(alpha(u + v), alpha(u) + alpha(v));
    EXPECT_EQ(alpha(u, 2), alpha(alpha(u)));
  }
}

TEST(LinCombAlgebra, UnitActsStrictly) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const LinComb v = random_element(rng);
    EXPECT_EQ(mul(LinComb::unit(), v), v);
    EXPECT_EQ(mul(v, LinComb::unit()), v);
  }
  EXPECT_EQ(alpha(LinComb::unit(3)), LinComb::unit(3));
}

TEST(LinCombAlgebra, CancellationLeavesNoZeroCoefficients) {
  LinComb v = parse_lincomb("2*(x*y) + y");
  v -= parse_lincomb("2*(x*y)");
  EXPECT_EQ(v.terms().size(), 1u);
  EXPECT_EQ(to_string(v), "y@0");
  EXPECT_TRUE((v - v).is_zero());
}

TEST(LinCombAlgebra, ArityAndExponentBounds) {
  const LinComb v = parse_lincomb("((x * y@2) * z) + 5");
  EXPECT_EQ(v.max_arity(), 3u);
  EXPECT_EQ(v.max_exponent(), 2u);
  EXPECT_EQ(v.generators(), (std::set<Symbol>{Symbol("x"), Symbol("y"), Symbol("z")}));
}

TEST(Structure, AlphaNodeOfWeightZeroRejected) {
  EXPECT_THROW(RawTerm::alpha(0, RawTerm::leaf(Symbol("x"))), StructuralError);
}
