#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homalg/alpha_action.hpp"
#include "homalg/congruence.hpp"
#include "homalg/free_morphisms.hpp"
#include "homalg/hom_algebra.hpp"
#include "homalg/report.hpp"

namespace homalg {

/// Coordinates with respect to the basis of a Hom-Lie algebra.
using LieVector = std::vector<Rational>;

/// A finite-dimensional Hom-Lie algebra given by structure constants and the
/// matrix of alpha (row i holds the coordinates of alpha(e_i)).
class HomLieAlgebra {
 public:
  HomLieAlgebra() = default;

  explicit HomLieAlgebra(std::vector<Symbol> basis, bool multiplicative = true)
      : basis_(std::move(basis)), multiplicative_(multiplicative) {
    const std::size_t n = basis_.size();
    if (std::set<Symbol>(basis_.begin(), basis_.end()).size() != n) throw NamingError("basis names must be distinct");
    brackets_.assign(n * n, LieVector(n));
    alpha_.assign(n, LieVector(n));
    for (std::size_t i = 0; i < n; ++i) alpha_[i][i] = 1;
  }

  /// Basis e1..en, zero bracket, alpha = identity.
  static HomLieAlgebra standard(std::size_t n, bool multiplicative = true) {
    std::vector<Symbol> names;
    for (std::size_t i = 1; i <= n; ++i) names.emplace_back("e" + std::to_string(i));
    return HomLieAlgebra(std::move(names), multiplicative);
  }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Symbol>& basis() const { return basis_; }
  bool multiplicative() const { return multiplicative_; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  HomLieAlgebra& set_bracket(std::size_t i, std::size_t j, LieVector v) {
    check_vector(v);
    LieVector neg(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
    at(j, i) = std::move(neg);
    at(i, j) = std::move(v);
    return *this;
  }

  /// Sets only [e_i, e_j]; lets tests build non-skew data.
  HomLieAlgebra& set_bracket_entry(std::size_t i, std::size_t j, LieVector v) {
    check_vector(v);
    at(i, j) = std::move(v);
    return *this;
  }

  HomLieAlgebra& set_alpha(std::size_t i, LieVector v) {
    check_vector(v);
    alpha_.at(i) = std::move(v);
    return *this;
  }

  const LieVector& structure(std::size_t i, std::size_t j) const { return brackets_.at(i * dimension() + j); }
  const LieVector& alpha_row(std::size_t i) const { return alpha_.at(i); }

  LieVector unit_vector(std::size_t i) const {
    LieVector v(dimension());
    v.at(i) = 1;
    return v;
  }

  LieVector bracket(const LieVector& x, const LieVector& y) const {
    LieVector out(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dimension(); ++j) {
        if (is_zero(y[j])) continue;
        const Rational s = x[i] * y[j];
        const LieVector& c = structure(i, j);
        for (std::size_t k = 0; k < dimension(); ++k) out[k] += s * c[k];
      }
    }
    return out;
  }

  LieVector alpha(const LieVector& x) const {
    LieVector out(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t k = 0; k < dimension(); ++k) out[k] += x[i] * alpha_[i][k];
    }
    return out;
  }

  std::string describe(const LieVector& v) const {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (is_zero(v[k])) continue;
      if (!out.empty()) out += " + ";
      if (v[k] != 1) out += to_string(v[k]) + "*";
      out += basis_[k].name();
    }
    return out.empty() ? "0" : out;
  }

 private:
  LieVector& at(std::size_t i, std::size_t j) { return brackets_.at(i * dimension() + j); }
  void check_vector(const LieVector& v) const {
    if (v.size() != dimension()) throw StructuralError("coordinate vector has the wrong length");
  }

  std::vector<Symbol> basis_;
  std::vector<LieVector> brackets_;
  std::vector<LieVector> alpha_;
  bool multiplicative_ = true;
};

inline LieVector operator+(LieVector a, const LieVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

inline bool is_zero(const LieVector& v) {
  for (const auto& c : v) {
    if (!is_zero(c)) return false;
  }
  return true;
}

/// Skew-symmetry, Hom-Jacobi and (when flagged) multiplicativity over all basis tuples.
inline CheckReport check_hom_lie(const HomLieAlgebra& l) {
  CheckReport r{"hom-lie", 0, {}, 0};
  const std::size_t n = l.dimension();
  const auto& e = l.basis();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.samples_run;
      const LieVector x = l.unit_vector(i), y = l.unit_vector(j);
      if (!is_zero(l.bracket(x, y) + l.bracket(y, x))) {
        r.fail("skew-symmetry at (" + e[i].name() + ", " + e[j].name() + ")");
      }
      if (l.multiplicative()) {
        const LieVector lhs = l.alpha(l.bracket(x, y));
        const LieVector rhs = l.bracket(l.alpha(x), l.alpha(y));
        if (lhs != rhs) {
          r.fail("multiplicativity at (" + e[i].name() + ", " + e[j].name() + "): " + l.describe(lhs) +
                 " != " + l.describe(rhs));
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++r.samples_run;
        const LieVector x = l.unit_vector(i), y = l.unit_vector(j), z = l.unit_vector(k);
        const LieVector sum = l.bracket(l.alpha(x), l.bracket(y, z)) + l.bracket(l.alpha(z), l.bracket(x, y)) +
                              l.bracket(l.alpha(y), l.bracket(z, x));
        if (!is_zero(sum)) {
          r.fail("Hom-Jacobi at (" + e[i].name() + ", " + e[j].name() + ", " + e[k].name() + "): " + l.describe(sum));
        }
      }
    }
  }
  return r;
}

/// The twist of a Lie algebra (alpha = identity) along a Lie endomorphism
/// with the given matrix: [x, y]' = alpha[x, y].
inline HomLieAlgebra twist_lie(const HomLieAlgebra& lie, const std::vector<LieVector>& alpha_rows) {
  HomLieAlgebra out(lie.basis(), true);
  for (std::size_t i = 0; i < lie.dimension(); ++i) out.set_alpha(i, alpha_rows.at(i));
  for (std::size_t i = 0; i < lie.dimension(); ++i) {
    if (lie.alpha_row(i) != lie.unit_vector(i)) throw PreconditionError("twist_lie needs alpha = identity");
  }
  for (std::size_t i = 0; i < lie.dimension(); ++i) {
    for (std::size_t j = 0; j < lie.dimension(); ++j) {
      const LieVector x = lie.unit_vector(i), y = lie.unit_vector(j);
      const LieVector lhs = out.alpha(lie.bracket(x, y));
      const LieVector rhs = lie.bracket(out.alpha(x), out.alpha(y));
      if (lhs != rhs) {
        throw PreconditionError("alpha is not a Lie endomorphism at (" + lie.basis()[i].name() + ", " +
                                lie.basis()[j].name() + ")");
      }
      out.set_bracket_entry(i, j, lhs);
    }
  }
  return out;
}

/// Commutator Hom-Lie structure on a Hom-associative algebra: checks
/// skew-symmetry, Hom-Jacobi and multiplicativity of [x, y] = xy - yx.
template <HomAlgebra A>
CheckReport hlie_of(const A& alg, const SamplePlan& plan = {}) {
  CheckReport r{"commutator-hom-lie", 0, {}, plan.seed};
  const auto br = [&](const auto& x, const auto& y) { return alg.mul(x, y) - alg.mul(y, x); };
  const auto zero = alg.zero();
  r.samples_run += detail::for_each_pair(alg, plan, [&](const auto& x, const auto& y) {
    if (!(br(x, y) + br(y, x) == zero)) r.fail("skew-symmetry at " + detail::tuple_string(alg, {&x, &y}));
    if (!(alg.alpha(br(x, y)) == br(alg.alpha(x), alg.alpha(y)))) {
      r.fail("multiplicativity at " + detail::tuple_string(alg, {&x, &y}));
    }
  });
  r.samples_run += detail::for_each_triple(alg, plan, [&](const auto& x, const auto& y, const auto& z) {
    const auto sum = br(alg.alpha(x), br(y, z)) + br(alg.alpha(z), br(x, y)) + br(alg.alpha(y), br(z, x));
    if (!(sum == zero)) r.fail("Hom-Jacobi at " + detail::tuple_string(alg, {&x, &y, &z}) + ": " + alg.describe(sum));
  });
  return r;
}

/// gl2 as the commutator algebra of M2(Q), basis e11, e12, e21, e22.
inline HomLieAlgebra gl2() {
  const MatrixAlgebra<RationalField> m2{RationalField{}};
  HomLieAlgebra out({Symbol("e11"), Symbol("e12"), Symbol("e21"), Symbol("e22")});
  auto unit = [&](std::size_t k) {
    auto m = m2.zero();
    m.e[k] = 1;
    return m;
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const auto c = m2.mul(unit(i), unit(j)) - m2.mul(unit(j), unit(i));
      out.set_bracket_entry(i, j, LieVector(c.e.begin(), c.e.end()));
    }
  }
  return out;
}

/// L (+) L (+) ... with one tagged copy of the basis per tag; brackets and
/// alpha act blockwise, copies commute.
inline HomLieAlgebra direct_sum(const HomLieAlgebra& l, const std::vector<std::string>& tags) {
  const std::size_t n = l.dimension();
  std::vector<Symbol> names;
  for (const auto& t : tags) {
    for (Symbol s : l.basis()) names.push_back(t.empty() ? s : s.tagged(t));
  }
  HomLieAlgebra out(std::move(names), l.multiplicative());
  const std::size_t total = n * tags.size();
  for (std::size_t b = 0; b < tags.size(); ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      LieVector a(total);
      for (std::size_t k = 0; k < n; ++k) a[b * n + k] = l.alpha_row(i)[k];
      out.set_alpha(b * n + i, std::move(a));
      for (std::size_t j = 0; j < n; ++j) {
        LieVector c(total);
        for (std::size_t k = 0; k < n; ++k) c[b * n + k] = l.structure(i, j)[k];
        out.set_bracket_entry(b * n + i, b * n + j, std::move(c));
      }
    }
  }
  return out;
}

/// Bounded model of the enveloping Hom-algebra: F1(L) modulo the hom-associators,
/// the bracket relations [x, y] - (xy - yx) and their closure, with alpha
/// acting on leaves through the alpha matrix.
class EnvelopeModel {
 public:
  EnvelopeModel(HomLieAlgebra lie, Bound bound, SaturationConfig config = SaturationConfig::unital())
      : lie_(std::move(lie)), action_(make_action(lie_)), relations_(build(lie_, bound, std::move(config), action_)) {}

  const HomLieAlgebra& lie() const { return lie_; }
  const RelationBasis& relations() const { return relations_; }
  const AlphaAction& alpha_action() const { return action_; }

  LinComb leaf(std::size_t i) const { return make_leaf(lie_.basis().at(i), 0); }
  LinComb element(const LieVector& v) const { return element_of(lie_, v); }
  LinComb alpha(const LinComb& v) const { return action_.apply(v); }

  /// [e_i, e_j] - (e_i e_j - e_j e_i).
  LinComb bracket_relation(std::size_t i, std::size_t j) const {
    return element(lie_.structure(i, j)) - (mul(leaf(i), leaf(j)) - mul(leaf(j), leaf(i)));
  }

  LinComb reduce(const LinComb& v) const { return relations_.reduce(v); }
  EqualityResult equal_mod(const LinComb& u, const LinComb& v) const { return relations_.equal_mod(u, v); }
  std::map<std::size_t, std::size_t> residual_dimensions() const { return relations_.residual_dimensions(); }

  static LinComb element_of(const HomLieAlgebra& l, const LieVector& v) {
    LinComb out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!is_zero(v[k])) out.add_term(NormalTerm::leaf(l.basis()[k], 0), v[k]);
    }
    return out;
  }

 private:
  static AlphaAction make_action(const HomLieAlgebra& l) {
    std::map<Symbol, LinComb> images;
    for (std::size_t i = 0; i < l.dimension(); ++i) images.emplace(l.basis()[i], element_of(l, l.alpha_row(i)));
    return AlphaAction::linear(std::move(images));
  }

  static RelationBasis build(const HomLieAlgebra& l, Bound bound, SaturationConfig config, const AlphaAction& act) {
    const CheckReport ok = check_hom_lie(l);
    if (!ok.passed()) throw PreconditionError("not a Hom-Lie algebra: " + ok.counterexamples.front());
    bound.max_exponent = 0;
    for (std::size_t i = 0; i < l.dimension(); ++i) {
      for (std::size_t j = i + 1; j < l.dimension(); ++j) {
        const LinComb ei = make_leaf(l.basis()[i]), ej = make_leaf(l.basis()[j]);
        LinComb rel = element_of(l, l.structure(i, j)) - (mul(ei, ej) - mul(ej, ei));
        if (bound.max_arity >= 2) config.extra_relations.push_back(std::move(rel));
      }
    }
    return saturate(std::set<Symbol>(l.basis().begin(), l.basis().end()), bound, config, act);
  }

  HomLieAlgebra lie_;
  AlphaAction action_;
  RelationBasis relations_;
};

inline EnvelopeModel envelope(const HomLieAlgebra& l, Bound bound,
                              SaturationConfig config = SaturationConfig::unital()) {
  return EnvelopeModel(l, bound, std::move(config));
}

/// Delta_L(x) = alpha(x) (x) 1 + 1 (x) alpha(x), realized in the envelope of
/// L (+) L with the legs tagged ' and ''.
class EnvelopeCoproduct {
 public:
  explicit EnvelopeCoproduct(HomLieAlgebra lie) : lie_(std::move(lie)) {}

  const HomLieAlgebra& lie() const { return lie_; }

  /// alpha(v) of an element of L placed on the leg `tag`.
  LinComb alpha_on_leg(const LieVector& v, std::string_view tag) const { return on_leg(lie_.alpha(v), tag); }

  LinComb on_leg(const LieVector& v, std::string_view tag) const {
    LinComb out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!is_zero(v[k])) out.add_term(NormalTerm::leaf(lie_.basis()[k].tagged(tag), 0), v[k]);
    }
    return out;
  }

  /// Delta_L on a generator, legs on `first` and `second`.
  LinComb delta_leaf(std::size_t i, std::string_view first = "'", std::string_view second = "''") const {
    const LieVector x = lie_.unit_vector(i);
    return alpha_on_leg(x, first) + alpha_on_leg(x, second);
  }

  /// Delta_L extended as a morphism; Delta_L(1) = 1 (x) 1.
  LinComb delta(const LinComb& v, std::string_view first = "'", std::string_view second = "''") const {
    return substitute(v, [&](const Leaf& l) { return delta_leaf(index_of(l.gen), first, second); });
  }

  /// (Delta_L (x) alpha) Delta_L(v) and (alpha (x) Delta_L) Delta_L(v) on legs ', '', '''.
  std::pair<LinComb, LinComb> coassociativity_sides(const LinComb& v) const {
    const LinComb d = delta(v);
    const LinComb lhs = substitute(d, [&](const Leaf& l) {
      auto [base, k] = split_tag(l.gen);
      const std::size_t i = index_of(base);
      return k == 1 ? delta_leaf(i, "'", "''") : alpha_on_leg(lie_.unit_vector(i), "'''");
    });
    const LinComb rhs = substitute(d, [&](const Leaf& l) {
      auto [base, k] = split_tag(l.gen);
      const std::size_t i = index_of(base);
      return k == 1 ? alpha_on_leg(lie_.unit_vector(i), "'") : delta_leaf(i, "''", "'''");
    });
    return {lhs, rhs};
  }

  /// alpha^2(x) (x) 1 (x) 1 + 1 (x) alpha^2(x) (x) 1 + 1 (x) 1 (x) alpha^2(x).
  LinComb three_term(std::size_t i) const {
    const LieVector a2 = lie_.alpha(lie_.alpha(lie_.unit_vector(i)));
    return on_leg(a2, "'") + on_leg(a2, "''") + on_leg(a2, "'''");
  }

  std::size_t index_of(Symbol g) const {
    for (std::size_t i = 0; i < lie_.dimension(); ++i) {
      if (lie_.basis()[i] == g) return i;
    }
    throw AssignmentError("generator " + g.name() + " is not a basis element");
  }

 private:
  HomLieAlgebra lie_;
};

inline EnvelopeCoproduct delta_env(const HomLieAlgebra& l) { return EnvelopeCoproduct(l); }

/// The Hom-bialgebra suite for the envelope: the three-term identity on
/// leaves, Hom-coassociativity on leaves and degree-2 products, compatibility
/// with the bracket relations and comultiplicativity.
inline SuiteReport check_envelope_bialgebra(const HomLieAlgebra& l, Bound bound,
                                            SaturationConfig config = SaturationConfig::unital()) {
  SuiteReport s;
  s.suite = "envelope";
  bound.max_exponent = 0;
  const EnvelopeCoproduct d(l);
  const EnvelopeModel single(l, bound, config);
  const EnvelopeModel twice(direct_sum(l, {"'", "''"}), bound, config);
  const EnvelopeModel thrice(direct_sum(l, {"'", "''", "'''"}), bound, config);
  const std::size_t n = l.dimension();

  for (std::size_t i = 0; i < n; ++i) {
    auto [lhs, rhs] = d.coassociativity_sides(single.leaf(i));
    s.verdicts.push_back(make_exact_verdict(lhs, d.three_term(i)));
    s.verdicts.push_back(make_exact_verdict(rhs, d.three_term(i)));
  }
  std::vector<LinComb> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products.push_back(mul(single.leaf(i), single.leaf(j)));
  }
  if (bound.max_arity >= 2) {
    for (const auto& v : products) {
      auto [lhs, rhs] = d.coassociativity_sides(v);
      s.verdicts.push_back(make_verdict(lhs, rhs, thrice.relations()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        s.verdicts.push_back(make_verdict(d.delta(single.bracket_relation(i, j)), LinComb(), twice.relations()));
      }
    }
  }
  std::vector<LinComb> comult = products;
  for (std::size_t i = 0; i < n; ++i) comult.push_back(single.leaf(i));
  for (const auto& v : comult) {
    if (v.max_arity() > bound.max_arity) continue;
    s.verdicts.push_back(make_verdict(d.delta(single.alpha(v)), twice.alpha(d.delta(v)), twice.relations()));
  }
  std::string dims;
  for (const auto& [arity, dim] : single.residual_dimensions()) {
    dims += (dims.empty() ? "" : ", ") + std::string("arity ") + std::to_string(arity) + ": " + std::to_string(dim);
  }
  s.notes.push_back("residual dimensions of the bounded envelope (" + dims + ")");
  return s;
}

}  // namespace homalg
