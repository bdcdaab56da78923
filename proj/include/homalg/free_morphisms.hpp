#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homalg/congruence.hpp"
#include "homalg/hom_algebra.hpp"

namespace homalg {

/// The free multiplicative Hom-associative algebra F(k<gens>) together with
/// the congruence settings used for equality queries in it.
struct FreeAlgebraHandle {
  std::set<Symbol> gens;
  SaturationConfig config = SaturationConfig::unital();
  Bound bound;

  static FreeAlgebraHandle on(std::initializer_list<const char*> names,
                              SaturationConfig config = SaturationConfig::unital(), Bound bound = {}) {
    FreeAlgebraHandle h{{}, std::move(config), bound};
    for (const char* n : names) {
      if (!h.gens.insert(Symbol(n)).second) throw NamingError(std::string("duplicate generator ") + n);
    }
    return h;
  }

  /// j(g): the generator as an element.
  LinComb j(Symbol g) const {
    if (!gens.contains(g)) throw AssignmentError("unknown generator " + g.name());
    return make_leaf(g, 0);
  }

  RelationBasis relations() const { return saturate(gens, bound, config); }
};

/// A random planar tree with `n` leaves drawn from `gens`, exponents <= max_exp.
inline NormalTerm random_term(const std::vector<Symbol>& gens, std::size_t n, std::uint32_t max_exp, Rng& rng) {
  if (n == 1) {
    return NormalTerm::leaf(gens[rng.index(gens.size())], static_cast<std::uint32_t>(rng.uniform(0, static_cast<int>(max_exp))));
  }
  const std::size_t left = 1 + rng.index(n - 1);
  NormalTerm l = random_term(gens, left, max_exp, rng);
  return NormalTerm::product(l, random_term(gens, n - left, max_exp, rng));
}

/// A random element with up to `max_terms` terms of arity <= max_arity.
inline LinComb random_lincomb(const std::vector<Symbol>& gens, Rng& rng, std::size_t max_arity = 3,
                              std::uint32_t max_exp = 1, std::size_t max_terms = 4, bool with_unit = false) {
  LinComb v;
  if (with_unit) v.add_unit(rng.uniform(-2, 2));
  const std::size_t k = 1 + rng.index(max_terms);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t n = 1 + rng.index(max_arity);
    v.add_term(random_term(gens, n, max_exp, rng), rng.uniform(-2, 2));
  }
  return v;
}

/// The free algebra itself as a concrete carrier, so that morphisms between
/// free algebras go through the same evaluator as concrete targets.
class FreeCarrier {
 public:
  using Element = LinComb;

  explicit FreeCarrier(std::set<Symbol> gens) : gens_(gens.begin(), gens.end()) {}

  Element mul(const Element& x, const Element& y) const { return homalg::mul(x, y); }
  Element alpha(const Element& x) const { return homalg::alpha(x); }
  Element zero() const { return {}; }
  std::optional<Element> unit() const { return LinComb::unit(); }
  UnitFlavor flavor() const { return UnitFlavor::strict_unital; }
  std::string name() const {
    std::string out = "F(";
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? "," : "") + gens_[i].name();
    return out + ")";
  }
  std::string describe(const Element& x) const { return to_string(x); }
  std::vector<Element> sweep() const {
    std::vector<Element> out;
    for (Symbol g : gens_) out.push_back(make_leaf(g, 0));
    return out;
  }
  Element sample(Rng& rng) const { return random_lincomb(gens_, rng, 2, 1, 3); }

 private:
  std::vector<Symbol> gens_;
};

/// Images of the generators in a concrete target; extends uniquely to a morphism.
template <HomAlgebra A>
class MorphismAssignment {
 public:
  using Element = typename A::Element;

  MorphismAssignment(A target, std::map<Symbol, Element> images)
      : target_(std::move(target)), images_(std::move(images)) {}

  const A& target() const { return target_; }
  const std::map<Symbol, Element>& images() const { return images_; }

  const Element& image(Symbol g) const {
    auto it = images_.find(g);
    if (it == images_.end()) throw AssignmentError("no image assigned to generator " + g.name());
    return it->second;
  }

 private:
  A target_;
  std::map<Symbol, Element> images_;
};

/// Evaluates free elements through a morphism assignment. Leaf powers and
/// subterm values are memoized, so reuse one evaluator for many elements.
template <HomAlgebra A>
class Evaluator {
 public:
  using Element = typename A::Element;

  explicit Evaluator(const MorphismAssignment<A>& m) : m_(m) {}

  Element operator()(const LinComb& v) {
    const A& alg = m_.target();
    Element out = alg.zero();
    if (!is_zero(v.unit_coeff())) {
      if (alg.flavor() != UnitFlavor::strict_unital) {
        throw UnitMismatchError("element " + to_string(v) + " has a unit component but " + alg.name() +
                                " has no strict unit");
      }
      out = out + v.unit_coeff() * *alg.unit();
    }
    for (const auto& [t, c] : v.terms()) out = out + c * term(t);
    return out;
  }

  Element term(const NormalTerm& t) {
    if (t.is_leaf()) return leaf(t.as_leaf());
    if (auto it = terms_.find(t); it != terms_.end()) return it->second;
    auto [l, r] = t.split();
    Element value = m_.target().mul(term(l), term(r));
    terms_.emplace(t, value);
    return value;
  }

  /// alpha^e(m(g)).
  Element leaf(const Leaf& l) {
    if (auto it = leaves_.find(l); it != leaves_.end()) return it->second;
    Element value = l.exp == 0 ? m_.image(l.gen) : m_.target().alpha(leaf(Leaf{l.gen, l.exp - 1}));
    leaves_.emplace(l, value);
    return value;
  }

 private:
  const MorphismAssignment<A>& m_;
  std::map<Leaf, Element> leaves_;
  std::unordered_map<NormalTerm, Element> terms_;
};

template <HomAlgebra A>
typename A::Element evaluate(const LinComb& v, const MorphismAssignment<A>& m) {
  return Evaluator<A>(m)(v);
}

inline const Symbol& matrix_generator(int i, int j) {
  static const Symbol names[4] = {Symbol("a"), Symbol("b"), Symbol("c"), Symbol("d")};
  return names[2 * i + j];
}

/// The morphism M -> A sending (a b; c d) to the entries of `m`.
template <HomAlgebra A>
MorphismAssignment<A> morphism_from_matrix(const A& target, const Mat2<typename A::Element>& m) {
  std::map<Symbol, typename A::Element> images;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) images.emplace(matrix_generator(i, j), m.at(i, j));
  }
  return MorphismAssignment<A>(target, std::move(images));
}

template <HomAlgebra A>
Mat2<typename A::Element> matrix_of_morphism(const MorphismAssignment<A>& m) {
  Mat2<typename A::Element> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.at(i, j) = m.image(matrix_generator(i, j));
  }
  return out;
}

/// Splits a tagged name into its base and the number of trailing apostrophes.
inline std::pair<Symbol, std::size_t> split_tag(Symbol s) {
  const std::string& n = s.name();
  std::size_t k = 0;
  while (k < n.size() && n[n.size() - 1 - k] == '\'') ++k;
  if (k == 0) return {s, 0};
  return {Symbol(std::string_view(n).substr(0, n.size() - k)), k};
}

inline std::string tag_of_length(std::size_t k) { return std::string(k, '\''); }

/// Relabel every leaf generator; `f` must be injective on the generators present.
template <class F>
LinComb relabel(const LinComb& v, F&& f) {
  LinComb out = LinComb::unit(v.unit_coeff());
  for (const auto& [t, c] : v.terms()) {
    out.add_term(t.map_leaves([&](const Leaf& l) { return Leaf{f(l.gen), l.exp}; }), c);
  }
  return out;
}

/// Append `tag` (a run of apostrophes) to every generator. Renamed names
/// listed in `reserved` are rejected.
inline LinComb rename_embed(const LinComb& v, std::string_view tag, const std::set<Symbol>& reserved = {}) {
  for (char ch : tag) {
    if (ch != '\'') throw NamingError("tag must consist of apostrophes, got \"" + std::string(tag) + "\"");
  }
  if (tag.empty()) return v;
  return relabel(v, [&](Symbol g) {
    Symbol t = g.tagged(tag);
    if (reserved.contains(t)) throw NamingError("renamed generator " + t.name() + " collides with an existing name");
    return t;
  });
}

/// u (x) w inside the free algebra on the tagged union of generators.
inline LinComb tensor_element(const LinComb& u, const LinComb& w, std::string_view left_tag = "'",
                              std::string_view right_tag = "''") {
  if (left_tag == right_tag) throw NamingError("tensor legs need distinct tags");
  const LinComb l = rename_embed(u, left_tag);
  const LinComb r = rename_embed(w, right_tag);
  for (Symbol g : l.generators()) {
    if (r.generators().contains(g)) throw NamingError("tensor legs share generator " + g.name());
  }
  return mul(l, r);
}

}  // namespace homalg
