#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homalg/congruence.hpp"
#include "homalg/free_morphisms.hpp"
#include "homalg/hom_algebra.hpp"
#include "homalg/report.hpp"

namespace homalg {

// ---------------------------------------------------------------------------
// Free side: tensor legs are generator tags inside one free algebra.

namespace detail {

inline Symbol leg_symbol(Symbol base, std::string_view tag) { return tag.empty() ? base : base.tagged(tag); }

/// Apply one map per tensor leg. The leg of a leaf is its apostrophe count;
/// `legs[k]` receives (base generator, exponent) for leaves with k apostrophes.
inline LinComb apply_legwise(const LinComb& v,
                             const std::map<std::size_t, std::function<LinComb(Symbol, std::uint32_t)>>& legs) {
  return substitute(v, [&](const Leaf& l) {
    auto [base, k] = split_tag(l.gen);
    auto it = legs.find(k);
    if (it == legs.end()) throw NamingError("generator " + l.gen.name() + " lies on no tensor leg");
    return it->second(base, l.exp);
  });
}

/// Move leg 1 / leg 2 of a two-leg element onto the given tags.
inline LinComb retag(const LinComb& v, std::string_view first, std::string_view second) {
  return relabel(v, [&](Symbol g) {
    auto [base, k] = split_tag(g);
    if (k == 1) return leg_symbol(base, first);
    if (k == 2) return leg_symbol(base, second);
    throw NamingError("generator " + g.name() + " lies on no tensor leg");
  });
}

inline std::set<Symbol> tagged_set(const std::set<Symbol>& gens, std::initializer_list<std::string_view> tags) {
  std::set<Symbol> out;
  for (auto tag : tags) {
    for (Symbol g : gens) out.insert(leg_symbol(g, tag));
  }
  return out;
}

}  // namespace detail

/// A free Hom-bialgebra: Delta is given on generators by two-leg elements
/// (first leg tagged ', second leg tagged '') and extended as a morphism.
struct FreeBialgebra {
  FreeAlgebraHandle algebra;
  std::map<Symbol, LinComb> delta;

  /// Delta(v) with its legs placed on `first` and `second`. Delta(1) = 1 (x) 1.
  LinComb delta_of(const LinComb& v, std::string_view first = "'", std::string_view second = "''") const {
    return substitute(v, [&](const Leaf& l) {
      auto it = delta.find(l.gen);
      if (it == delta.end()) throw AssignmentError("no comultiplication given for " + l.gen.name());
      return alpha(detail::retag(it->second, first, second), l.exp);
    });
  }

  /// (Delta (x) alpha) Delta(v) and (alpha (x) Delta) Delta(v) on legs ', '', '''.
  std::pair<LinComb, LinComb> coassociativity_sides(const LinComb& v) const {
    const LinComb d = delta_of(v);
    const LinComb lhs = detail::apply_legwise(
        d, {{1, [&](Symbol g, std::uint32_t e) { return alpha(delta_of(make_leaf(g), "'", "''"), e); }},
            {2, [](Symbol g, std::uint32_t e) { return make_leaf(g.tagged("'''"), e + 1); }}});
    const LinComb rhs = detail::apply_legwise(
        d, {{1, [](Symbol g, std::uint32_t e) { return make_leaf(g.tagged("'"), e + 1); }},
            {2, [&](Symbol g, std::uint32_t e) { return alpha(delta_of(make_leaf(g), "''", "'''"), e); }}});
    return {lhs, rhs};
  }

  std::set<Symbol> two_leg_generators() const { return detail::tagged_set(algebra.gens, {"'", "''"}); }
  std::set<Symbol> three_leg_generators() const { return detail::tagged_set(algebra.gens, {"'", "''", "'''"}); }
};

/// The Hom-bialgebra M = F(k<a,b,c,d>) with the matrix comultiplication.
inline FreeBialgebra m_bialgebra(SaturationConfig config = SaturationConfig::unital(), Bound bound = {}) {
  FreeBialgebra m{FreeAlgebraHandle::on({"a", "b", "c", "d"}, std::move(config), bound), {}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      LinComb entry;
      for (int k = 0; k < 2; ++k) {
        entry += mul(make_leaf(matrix_generator(i, k).tagged("'")), make_leaf(matrix_generator(k, j).tagged("''")));
      }
      m.delta.emplace(matrix_generator(i, j), entry);
    }
  }
  return m;
}

/// A free comodule Hom-algebra: the coaction sends a generator of A to an
/// element with H on leg ' and A on leg ''.
struct FreeComodule {
  FreeBialgebra coalgebra;
  FreeAlgebraHandle algebra;
  std::map<Symbol, LinComb> coaction;

  LinComb coaction_of(const LinComb& v, std::string_view h_tag = "'", std::string_view a_tag = "''") const {
    return substitute(v, [&](const Leaf& l) {
      auto it = coaction.find(l.gen);
      if (it == coaction.end()) throw AssignmentError("no coaction given for " + l.gen.name());
      return alpha(detail::retag(it->second, h_tag, a_tag), l.exp);
    });
  }

  /// (Delta_H (x) alpha_A) rho(v) and (alpha_H (x) rho) rho(v), with H on
  /// legs ', '' and A untagged.
  std::pair<LinComb, LinComb> comodule_sides(const LinComb& v) const {
    const LinComb r = coaction_of(v);
    const LinComb lhs = detail::apply_legwise(
        r, {{1, [&](Symbol g, std::uint32_t e) { return alpha(coalgebra.delta_of(make_leaf(g), "'", "''"), e); }},
            {2, [](Symbol g, std::uint32_t e) { return make_leaf(g, e + 1); }}});
    const LinComb rhs = detail::apply_legwise(
        r, {{1, [](Symbol g, std::uint32_t e) { return make_leaf(g.tagged("'"), e + 1); }},
            {2, [&](Symbol g, std::uint32_t e) { return alpha(coaction_of(make_leaf(g), "''", ""), e); }}});
    return {lhs, rhs};
  }

  std::set<Symbol> two_leg_generators() const {
    auto out = detail::tagged_set(coalgebra.algebra.gens, {"'"});
    out.merge(detail::tagged_set(algebra.gens, {"''"}));
    return out;
  }
  std::set<Symbol> three_leg_generators() const {
    auto out = detail::tagged_set(coalgebra.algebra.gens, {"'", "''"});
    out.merge(detail::tagged_set(algebra.gens, {""}));
    return out;
  }
};

/// The Hom-affine plane A = F(k<x,y>) with Delta_A(x) = a (x) x + b (x) y,
/// Delta_A(y) = c (x) x + d (x) y.
inline FreeComodule hom_affine_plane(SaturationConfig config = SaturationConfig::unital(), Bound bound = {}) {
  FreeComodule a{m_bialgebra(config, bound), FreeAlgebraHandle::on({"x", "y"}, config, bound), {}};
  const Symbol xy[2] = {Symbol("x"), Symbol("y")};
  for (int i = 0; i < 2; ++i) {
    LinComb v;
    for (int k = 0; k < 2; ++k) v += mul(make_leaf(matrix_generator(i, k).tagged("'")), make_leaf(xy[k].tagged("''")));
    a.coaction.emplace(xy[i], v);
  }
  return a;
}

/// Hom-coassociativity of each element, decided in the three-leg free algebra.
inline std::vector<VerdictRecord> check_hom_coassoc(const FreeBialgebra& b, const std::vector<LinComb>& elements,
                                                    const RelationBasis& three_leg) {
  std::vector<VerdictRecord> out;
  for (const auto& v : elements) {
    auto [lhs, rhs] = b.coassociativity_sides(v);
    out.push_back(make_verdict(lhs, rhs, three_leg));
  }
  return out;
}

/// Delta o alpha == (alpha (x) alpha) o Delta, compared on the nose.
inline std::vector<VerdictRecord> check_comultiplicative(const FreeBialgebra& b, const std::vector<LinComb>& elements) {
  std::vector<VerdictRecord> out;
  for (const auto& v : elements) out.push_back(make_exact_verdict(b.delta_of(alpha(v)), alpha(b.delta_of(v))));
  return out;
}

inline std::vector<VerdictRecord> check_comodule(const FreeComodule& c, const std::vector<LinComb>& elements,
                                                 const RelationBasis& three_leg) {
  std::vector<VerdictRecord> out;
  for (const auto& v : elements) {
    auto [lhs, rhs] = c.comodule_sides(v);
    out.push_back(make_verdict(lhs, rhs, three_leg));
  }
  return out;
}

/// f(uv) == f(u)f(v) for all sample pairs and f(alpha u) == alpha f(u).
/// Both sides live in free algebras, where multiplicativity is built into the
/// normal form, so the comparison is exact.
inline std::vector<VerdictRecord> check_free_morphism(const std::function<LinComb(const LinComb&)>& f,
                                                      const std::vector<LinComb>& samples) {
  std::vector<VerdictRecord> out;
  for (const auto& u : samples) {
    for (const auto& v : samples) out.push_back(make_exact_verdict(f(mul(u, v)), mul(f(u), f(v))));
  }
  for (const auto& u : samples) out.push_back(make_exact_verdict(f(alpha(u)), alpha(f(u))));
  return out;
}

inline std::vector<VerdictRecord> check_comodule_homalgebra(const FreeComodule& c, const std::vector<LinComb>& samples) {
  return check_free_morphism([&](const LinComb& v) { return c.coaction_of(v); }, samples);
}

/// Pull the pair (X, Y) back along Delta and compare with the matrix product
/// of M2(A): Delta represents matrix multiplication.
template <HomAlgebra A>
CheckReport representability_check(const A& target,
                                   const std::vector<std::pair<Mat2<typename A::Element>, Mat2<typename A::Element>>>& pairs,
                                   std::uint64_t seed = 0) {
  const FreeBialgebra m = m_bialgebra();
  const MatrixAlgebra<A> m2(target);
  CheckReport r{"representability", 0, {}, seed};
  for (const auto& [x, y] : pairs) {
    std::map<Symbol, typename A::Element> images;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        images.emplace(matrix_generator(i, j).tagged("'"), x.at(i, j));
        images.emplace(matrix_generator(i, j).tagged("''"), y.at(i, j));
      }
    }
    const MorphismAssignment<A> assign(target, std::move(images));
    Evaluator<A> eval(assign);
    Mat2<typename A::Element> pulled;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) pulled.at(i, j) = eval(m.delta.at(matrix_generator(i, j)));
    }
    const auto product = m2.mul(x, y);
    ++r.samples_run;
    if (!(pulled == product)) {
      r.fail("X = " + m2.describe(x) + ", Y = " + m2.describe(y) + ": pullback " + m2.describe(pulled) +
             " != product " + m2.describe(product));
    }
  }
  return r;
}

template <HomAlgebra A>
std::vector<std::pair<Mat2<typename A::Element>, Mat2<typename A::Element>>> random_matrix_pairs(const A& target,
                                                                                               std::size_t n,
                                                                                               std::uint64_t seed) {
  const MatrixAlgebra<A> m2(target);
  Rng rng(seed);
  std::vector<std::pair<Mat2<typename A::Element>, Mat2<typename A::Element>>> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = m2.sample(rng);
    auto y = m2.sample(rng);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Concrete side: polynomial bialgebras and comodule algebras, classical or twisted.

using PolyTensor = TensorElement<Monomial, Monomial>;
using PolyTensor3 = TensorElement<Monomial, std::pair<Monomial, Monomial>>;

inline std::string key_string(const Monomial& m) { return m.degree() == 0 ? "1" : to_string(m); }

template <class K1, class K2>
std::string key_string(const std::pair<K1, K2>& k) {
  return key_string(k.first) + " (x) " + key_string(k.second);
}

template <class K1, class K2>
std::string to_string(const TensorElement<K1, K2>& t) {
  if (t.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += to_string(c) + "*";
    out += "(" + key_string(k) + ")";
  }
  return out;
}

/// Evaluate a commutative polynomial in an associative unital algebra.
template <HomAlgebra A>
typename A::Element evaluate_polynomial(const A& alg, const Polynomial& p,
                                        const std::map<Symbol, typename A::Element>& images) {
  typename A::Element out = alg.zero();
  const auto one = alg.unit();
  if (!one) throw UnitMismatchError("polynomial evaluation needs a unit in " + alg.name());
  for (const auto& [m, c] : p.terms()) {
    typename A::Element term = *one;
    for (const auto& [s, e] : m.powers()) {
      auto it = images.find(s);
      if (it == images.end()) throw AssignmentError("no image for variable " + s.name());
      for (std::uint32_t i = 0; i < e; ++i) term = alg.mul(term, it->second);
    }
    out = out + c * term;
  }
  return out;
}

inline bool is_identity_endomorphism(const std::vector<Symbol>& vars, const std::map<Symbol, Polynomial>& phi) {
  for (Symbol v : vars) {
    auto it = phi.find(v);
    if (it != phi.end() && !(it->second == poly_var(v))) return false;
  }
  return true;
}

inline Twisted<PolyAlgebra> twisted_poly(const PolyAlgebra& base, const std::map<Symbol, Polynomial>& phi,
                                         std::string label) {
  return Twisted<PolyAlgebra>(base, poly_endomorphism(phi), is_identity_endomorphism(base.variables(), phi),
                              std::move(label));
}

/// A polynomial bialgebra with comultiplication given on variables, twisted
/// along phi: mu_phi = phi o mu, Delta_phi = Delta o phi. With phi empty it
/// is the classical bialgebra.
class PolyBialgebra {
 public:
  PolyBialgebra(PolyAlgebra base, std::map<Symbol, PolyTensor> delta, std::map<Symbol, Polynomial> phi = {},
                std::string label = "id")
      : base_(std::move(base)),
        delta_(std::move(delta)),
        phi_(std::move(phi)),
        algebra_(twisted_poly(base_, phi_, label)),
        classical_square_(base_, base_) {
    for (Symbol v : base_.variables()) {
      if (!delta_.contains(v)) throw AssignmentError("no comultiplication given for " + v.name());
    }
  }

  const PolyAlgebra& base() const { return base_; }
  const std::map<Symbol, PolyTensor>& delta_images() const { return delta_; }
  const std::map<Symbol, Polynomial>& phi_images() const { return phi_; }
  const Twisted<PolyAlgebra>& algebra() const { return algebra_; }
  bool is_classical() const { return algebra_.phi_is_identity(); }

  Polynomial phi(const Polynomial& p) const { return algebra_.alpha(p); }
  PolyTensor delta_classical(const Polynomial& p) const { return evaluate_polynomial(classical_square_, p, delta_); }
  PolyTensor delta(const Polynomial& p) const { return delta_classical(phi(p)); }

  TensorAlgebra<Twisted<PolyAlgebra>, Twisted<PolyAlgebra>> tensor_square() const { return {algebra_, algebra_}; }

 private:
  PolyAlgebra base_;
  std::map<Symbol, PolyTensor> delta_;
  std::map<Symbol, Polynomial> phi_;
  Twisted<PolyAlgebra> algebra_;
  TensorAlgebra<PolyAlgebra, PolyAlgebra> classical_square_;
};

/// A polynomial comodule algebra over a PolyBialgebra with coaction given on
/// variables (H leg first), twisted along phi_A: rho_phi = rho o phi_A.
class PolyComodule {
 public:
  PolyComodule(PolyBialgebra coalgebra, PolyAlgebra base, std::map<Symbol, PolyTensor> coaction,
               std::map<Symbol, Polynomial> phi = {}, std::string label = "id")
      : coalgebra_(std::move(coalgebra)),
        base_(std::move(base)),
        coaction_(std::move(coaction)),
        phi_(std::move(phi)),
        algebra_(twisted_poly(base_, phi_, label)),
        classical_target_(coalgebra_.base(), base_) {
    for (Symbol v : base_.variables()) {
      if (!coaction_.contains(v)) throw AssignmentError("no coaction given for " + v.name());
    }
  }

  const PolyBialgebra& coalgebra() const { return coalgebra_; }
  const PolyAlgebra& base() const { return base_; }
  const std::map<Symbol, PolyTensor>& coaction_images() const { return coaction_; }
  const std::map<Symbol, Polynomial>& phi_images() const { return phi_; }
  const Twisted<PolyAlgebra>& algebra() const { return algebra_; }

  Polynomial phi(const Polynomial& p) const { return algebra_.alpha(p); }
  PolyTensor rho_classical(const Polynomial& p) const { return evaluate_polynomial(classical_target_, p, coaction_); }
  PolyTensor rho(const Polynomial& p) const { return rho_classical(phi(p)); }

  TensorAlgebra<Twisted<PolyAlgebra>, Twisted<PolyAlgebra>> target() const { return {coalgebra_.algebra(), algebra_}; }

 private:
  PolyBialgebra coalgebra_;
  PolyAlgebra base_;
  std::map<Symbol, PolyTensor> coaction_;
  std::map<Symbol, Polynomial> phi_;
  Twisted<PolyAlgebra> algebra_;
  TensorAlgebra<PolyAlgebra, PolyAlgebra> classical_target_;
};

namespace detail {

template <class F>
std::size_t for_each_poly(const PolyAlgebra& alg, const SamplePlan& plan, F&& f) {
  std::size_t n = 0;
  for (const auto& p : alg.sweep()) {
    f(p);
    ++n;
  }
  Rng rng(plan.seed);
  for (std::size_t i = 0; i < plan.random_tuples; ++i) {
    f(alg.sample(rng));
    ++n;
  }
  return n;
}

}  // namespace detail

/// k[a,b,c,d] with Delta(a) = a (x) a + b (x) c and so on (alpha = identity).
inline PolyBialgebra classical_m2_bialgebra() {
  PolyAlgebra base = PolyAlgebra::over({"a", "b", "c", "d"});
  std::map<Symbol, PolyTensor> delta;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      PolyTensor entry;
      for (int k = 0; k < 2; ++k) {
        entry += tensor(poly_var(matrix_generator(i, k)), poly_var(matrix_generator(k, j)));
      }
      delta.emplace(matrix_generator(i, j), entry);
    }
  }
  return PolyBialgebra(std::move(base), std::move(delta));
}

/// k[x,y] with rho(x) = a (x) x + b (x) y, rho(y) = c (x) x + d (x) y.
inline PolyComodule classical_affine_comodule() {
  PolyAlgebra base = PolyAlgebra::over({"x", "y"});
  const Symbol xy[2] = {Symbol("x"), Symbol("y")};
  std::map<Symbol, PolyTensor> rho;
  for (int i = 0; i < 2; ++i) {
    PolyTensor v;
    for (int k = 0; k < 2; ++k) v += tensor(poly_var(matrix_generator(i, k)), poly_var(xy[k]));
    rho.emplace(xy[i], v);
  }
  return PolyComodule(classical_m2_bialgebra(), std::move(base), std::move(rho));
}

/// phi_lambda on k[a,b,c,d]: a -> a, b -> lambda b, c -> lambda^-1 c, d -> d.
/// lambda = 0 has no inverse; c is then sent to 0 and the bialgebra check rejects the map.
inline std::map<Symbol, Polynomial> phi_lambda(const Rational& lambda) {
  const Rational inv = is_zero(lambda) ? Rational(0) : Rational(1 / lambda);
  return {{Symbol("a"), poly_var("a")},
          {Symbol("b"), lambda * poly_var("b")},
          {Symbol("c"), inv * poly_var("c")},
          {Symbol("d"), poly_var("d")}};
}

/// phi_A on k[x,y]: x -> x, y -> lambda^-1 y.
inline std::map<Symbol, Polynomial> phi_affine(const Rational& lambda) {
  const Rational inv = is_zero(lambda) ? Rational(0) : Rational(1 / lambda);
  return {{Symbol("x"), poly_var("x")}, {Symbol("y"), inv * poly_var("y")}};
}

inline PolyTensor tensor_apply(const PolyTensor& t, const std::function<Polynomial(const Polynomial&)>& f,
                               const std::function<Polynomial(const Polynomial&)>& g) {
  return map_tensor(t, f, g);
}

/// phi preserves Delta: Delta(phi p) == (phi (x) phi) Delta(p).
inline CheckReport check_bialgebra_endomorphism(const PolyBialgebra& b, const std::map<Symbol, Polynomial>& phi,
                                                const SamplePlan& plan = {}) {
  const auto f = poly_endomorphism(phi);
  CheckReport r = check_endomorphism(b.base(), f, plan);
  r.law = "bialgebra-endomorphism";
  auto check = [&](const Polynomial& p, const std::string& where) {
    const PolyTensor lhs = b.delta_classical(f(p));
    const PolyTensor rhs = tensor_apply(b.delta_classical(p), f, f);
    if (!(lhs == rhs)) r.fail(where + ": Delta(phi(p)) = " + to_string(lhs) + " != (phi (x) phi)Delta(p) = " + to_string(rhs));
  };
  for (Symbol v : b.base().variables()) check(poly_var(v), "generator " + v.name());
  r.samples_run += detail::for_each_poly(b.base(), plan, [&](const Polynomial& p) { check(p, "p = " + to_string(p)); });
  return r;
}

/// Twist a classical polynomial bialgebra along a bialgebra endomorphism.
inline PolyBialgebra yau_twist_bialgebra(const PolyBialgebra& b, const std::map<Symbol, Polynomial>& phi,
                                         std::string label, const SamplePlan& plan = {}) {
  if (!b.is_classical()) throw PreconditionError("yau twist needs a classical bialgebra");
  const CheckReport pre = check_bialgebra_endomorphism(b, phi, plan);
  if (!pre.passed()) throw PreconditionError("not a bialgebra endomorphism: " + pre.counterexamples.front());
  return PolyBialgebra(b.base(), b.delta_images(), phi, std::move(label));
}

/// rho o phi_A == (phi_H (x) phi_A) o rho on generators. Returns one witness per failing generator.
inline std::vector<std::string> comodule_compatibility_failures(const PolyComodule& c,
                                                                const std::map<Symbol, Polynomial>& phi_h,
                                                                const std::map<Symbol, Polynomial>& phi_a) {
  const auto fh = poly_endomorphism(phi_h);
  const auto fa = poly_endomorphism(phi_a);
  std::vector<std::string> out;
  for (Symbol v : c.base().variables()) {
    const PolyTensor lhs = c.rho_classical(fa(poly_var(v)));
    const PolyTensor rhs = tensor_apply(c.rho_classical(poly_var(v)), fh, fa);
    if (!(lhs == rhs)) {
      out.push_back(v.name() + ": rho(phi_A(" + v.name() + ")) = " + to_string(lhs) + " != (phi_H (x) phi_A)rho(" +
                    v.name() + ") = " + to_string(rhs));
    }
  }
  return out;
}

/// The twisted comodule algebra with coaction rho o phi_A over the twisted bialgebra.
inline PolyComodule twist_comodule(const PolyComodule& c, const std::map<Symbol, Polynomial>& phi_h,
                                   const std::map<Symbol, Polynomial>& phi_a, const SamplePlan& plan = {},
                                   std::string label_h = "phi_H", std::string label_a = "phi_A") {
  if (!c.coalgebra().is_classical() || !is_identity_endomorphism(c.base().variables(), c.phi_images())) {
    throw PreconditionError("comodule twist needs a classical comodule algebra");
  }
  PolyBialgebra h = yau_twist_bialgebra(c.coalgebra(), phi_h, std::move(label_h), plan);
  const CheckReport endo = check_endomorphism(c.base(), poly_endomorphism(phi_a), plan);
  if (!endo.passed()) throw PreconditionError("phi_A is not an algebra endomorphism: " + endo.counterexamples.front());
  const auto failures = comodule_compatibility_failures(c, phi_h, phi_a);
  if (!failures.empty()) {
    std::string msg = "coaction is not compatible with the twisting maps";
    for (const auto& f : failures) msg += "; " + f;
    throw CompatibilityError(msg);
  }
  return PolyComodule(std::move(h), c.base(), c.coaction_images(), phi_a, std::move(label_a));
}

inline CheckReport check_hom_coassoc(const PolyBialgebra& b, const SamplePlan& plan = {}) {
  CheckReport r{"hom-coassociativity", 0, {}, plan.seed};
  const auto delta = [&](const Polynomial& p) { return b.delta(p); };
  const auto alpha_h = [&](const Polynomial& p) { return b.phi(p); };
  r.samples_run = detail::for_each_poly(b.base(), plan, [&](const Polynomial& p) {
    const PolyTensor d = b.delta(p);
    const PolyTensor3 lhs = reassociate(map_tensor(d, delta, alpha_h));
    const PolyTensor3 rhs = map_tensor(d, alpha_h, delta);
    if (!(lhs == rhs)) r.fail("p = " + to_string(p) + ": " + to_string(lhs) + " != " + to_string(rhs));
  });
  return r;
}

inline CheckReport check_comultiplicative(const PolyBialgebra& b, const SamplePlan& plan = {}) {
  CheckReport r{"comultiplicativity", 0, {}, plan.seed};
  const auto alpha_h = [&](const Polynomial& p) { return b.phi(p); };
  r.samples_run = detail::for_each_poly(b.base(), plan, [&](const Polynomial& p) {
    const PolyTensor lhs = b.delta(b.phi(p));
    const PolyTensor rhs = map_tensor(b.delta(p), alpha_h, alpha_h);
    if (!(lhs == rhs)) r.fail("p = " + to_string(p) + ": " + to_string(lhs) + " != " + to_string(rhs));
  });
  return r;
}

/// Delta is a morphism of Hom-algebras into the tensor square.
inline CheckReport check_delta_morphism(const PolyBialgebra& b, const SamplePlan& plan = {}) {
  CheckReport r{"comultiplication-morphism", 0, {}, plan.seed};
  const auto sq = b.tensor_square();
  r.samples_run = detail::for_each_pair(b.algebra(), plan, [&](const Polynomial& p, const Polynomial& q) {
    const PolyTensor lhs = b.delta(b.algebra().mul(p, q));
    const PolyTensor rhs = sq.mul(b.delta(p), b.delta(q));
    if (!(lhs == rhs)) r.fail("(" + to_string(p) + ", " + to_string(q) + "): " + to_string(lhs) + " != " + to_string(rhs));
  });
  return r;
}

inline CheckReport check_comodule(const PolyComodule& c, const SamplePlan& plan = {}) {
  CheckReport r{"comodule-law", 0, {}, plan.seed};
  const auto delta = [&](const Polynomial& p) { return c.coalgebra().delta(p); };
  const auto alpha_h = [&](const Polynomial& p) { return c.coalgebra().phi(p); };
  const auto alpha_a = [&](const Polynomial& p) { return c.phi(p); };
  const auto rho = [&](const Polynomial& p) { return c.rho(p); };
  r.samples_run = detail::for_each_poly(c.base(), plan, [&](const Polynomial& p) {
    const PolyTensor t = c.rho(p);
    const PolyTensor3 lhs = reassociate(map_tensor(t, delta, alpha_a));
    const PolyTensor3 rhs = map_tensor(t, alpha_h, rho);
    if (!(lhs == rhs)) r.fail("p = " + to_string(p) + ": " + to_string(lhs) + " != " + to_string(rhs));
  });
  return r;
}

/// rho(uv) == rho(u)rho(v) in H (x) A and rho(alpha u) == (alpha_H (x) alpha_A) rho(u).
inline CheckReport check_comodule_homalgebra(const PolyComodule& c, const SamplePlan& plan = {}) {
  CheckReport r{"coaction-morphism", 0, {}, plan.seed};
  const auto target = c.target();
  const auto alpha_h = [&](const Polynomial& p) { return c.coalgebra().phi(p); };
  const auto alpha_a = [&](const Polynomial& p) { return c.phi(p); };
  r.samples_run = detail::for_each_pair(c.algebra(), plan, [&](const Polynomial& u, const Polynomial& v) {
    const PolyTensor lhs = c.rho(c.algebra().mul(u, v));
    const PolyTensor rhs = target.mul(c.rho(u), c.rho(v));
    if (!(lhs == rhs)) r.fail("(" + to_string(u) + ", " + to_string(v) + "): " + to_string(lhs) + " != " + to_string(rhs));
  });
  r.samples_run += detail::for_each_poly(c.base(), plan, [&](const Polynomial& u) {
    const PolyTensor lhs = c.rho(c.phi(u));
    const PolyTensor rhs = map_tensor(c.rho(u), alpha_h, alpha_a);
    if (!(lhs == rhs)) r.fail("alpha at " + to_string(u) + ": " + to_string(lhs) + " != " + to_string(rhs));
  });
  return r;
}

}  // namespace homalg
