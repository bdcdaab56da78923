#pragma once

// Verification suites shared by the command line tool and the acceptance run.
// Each builder returns a SuiteReport whose JSON depends only on its inputs.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "homalg/bialgebra.hpp"
#include "homalg/descriptor.hpp"
#include "homalg/hom_lie.hpp"
#include "homalg/report.hpp"

namespace homalg {

struct SuiteOptions {
  Bound bound;
  SaturationConfig config = SaturationConfig::unital();
  std::uint64_t seed = 1;
  /// Record wall-clock time per verdict. Off by default so reports stay reproducible.
  bool timings = false;
};

namespace detail {

inline nlohmann::ordered_json bound_json(const SuiteOptions& o) {
  return {{"max_arity", o.bound.max_arity},
          {"max_exponent", o.bound.max_exponent},
          {"config", o.config.name()},
          {"seed", o.seed}};
}

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}

  void stamp(std::vector<VerdictRecord>& out, std::size_t from) {
    if (!on_) return;
    const auto now = std::chrono::steady_clock::now();
    const double dt = std::chrono::duration<double>(now - start_).count();
    for (std::size_t i = from; i < out.size(); ++i) out[i].elapsed_seconds = dt / double(out.size() - from);
    start_ = now;
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

inline void append(std::vector<VerdictRecord>& out, std::vector<VerdictRecord> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

inline std::string dims_string(const std::map<std::size_t, std::size_t>& dims) {
  std::string s;
  for (const auto& [a, d] : dims) s += (s.empty() ? "" : ", ") + std::to_string(a) + ":" + std::to_string(d);
  return s;
}

}  // namespace detail

/// Hom-coassociativity of the matrix comultiplication on a, b, c, d.
inline SuiteReport suite_m_coassoc(const SuiteOptions& o) {
  SuiteReport s;
  s.suite = "m-coassoc";
  s.parameters = detail::bound_json(o);
  detail::Stopwatch clock(o.timings);
  const FreeBialgebra m = m_bialgebra(o.config, o.bound);
  const auto gens = m.three_leg_generators();
  const RelationBasis basis = saturate(gens, o.bound, o.config);
  clock.stamp(s.verdicts, 0);
  std::vector<LinComb> elements;
  for (Symbol g : m.algebra.gens) elements.push_back(make_leaf(g));
  detail::append(s.verdicts, check_hom_coassoc(m, elements, basis));
  clock.stamp(s.verdicts, 0);
  const std::size_t mark = s.verdicts.size();
  detail::append(s.verdicts, check_comultiplicative(m, elements));
  clock.stamp(s.verdicts, mark);
  s.notes.push_back("three-leg algebra on " + std::to_string(gens.size()) + " generators, window " +
                    std::to_string(basis.window_size()) + " terms, " + std::to_string(basis.rows_count()) + " rows");
  return s;
}

/// The monomial identities (p'q'')alpha(z) == alpha(p')(q''z) that the comodule law unfolds into.
inline std::vector<std::pair<LinComb, LinComb>> affine_monomial_identities() {
  const char* triples[8][3] = {{"a", "a", "x"}, {"b", "c", "x"}, {"a", "b", "y"}, {"b", "d", "y"},
                               {"c", "a", "x"}, {"d", "c", "x"}, {"c", "b", "y"}, {"d", "d", "y"}};
  std::vector<std::pair<LinComb, LinComb>> out;
  for (const auto& t : triples) {
    const LinComb p = make_leaf(Symbol(t[0]).tagged("'"));
    const LinComb q = make_leaf(Symbol(t[1]).tagged("''"));
    const LinComb z = make_leaf(Symbol(t[2]));
    out.emplace_back(mul(mul(p, q), alpha(z)), mul(alpha(p), mul(q, z)));
  }
  return out;
}

/// The comodule law for the affine plane over M, plus the coaction being a morphism.
inline SuiteReport suite_affine_comodule(const SuiteOptions& o, std::size_t samples = 5) {
  SuiteReport s;
  s.suite = "affine-comodule";
  s.parameters = detail::bound_json(o);
  detail::Stopwatch clock(o.timings);
  const FreeComodule a = hom_affine_plane(o.config, o.bound);
  const auto gens = a.three_leg_generators();
  const RelationBasis basis = saturate(gens, o.bound, o.config);
  detail::append(s.verdicts, check_comodule(a, {make_leaf("x"), make_leaf("y")}, basis));
  for (const auto& [lhs, rhs] : affine_monomial_identities()) s.verdicts.push_back(make_verdict(lhs, rhs, basis));
  clock.stamp(s.verdicts, 0);
  const std::size_t mark = s.verdicts.size();
  Rng rng(o.seed);
  const std::vector<Symbol> xy{Symbol("x"), Symbol("y")};
  std::vector<LinComb> pool;
  for (std::size_t i = 0; i < samples; ++i) pool.push_back(random_lincomb(xy, rng, 2, 1, 3));
  detail::append(s.verdicts, check_comodule_homalgebra(a, pool));
  clock.stamp(s.verdicts, mark);
  s.notes.push_back("three-leg algebra on " + std::to_string(gens.size()) + " generators, window " +
                    std::to_string(basis.window_size()) + " terms, " + std::to_string(basis.rows_count()) + " rows");
  return s;
}

/// The carriers accepted by the representability suite.
inline const std::vector<std::string>& representability_carriers() {
  static const std::vector<std::string> names{"classical", "qtwist"};
  return names;
}

inline Twisted<PolyAlgebra> q_twisted_line(const Rational& q) {
  return yau_twist_algebra(PolyAlgebra::over({"t"}), poly_endomorphism({{Symbol("t"), q * poly_var("t")}}),
                           "t -> " + to_string(q) + "t");
}

namespace detail {

template <HomAlgebra A>
void representability_checks(SuiteReport& s, const A& carrier, std::size_t pairs, std::uint64_t seed,
                             std::size_t triples) {
  CheckReport rep = representability_check(carrier, random_matrix_pairs(carrier, pairs, seed), seed);
  rep.law = "representability over " + carrier.name();
  s.checks.push_back(std::move(rep));
  const MatrixAlgebra<A> m2(carrier);
  const SamplePlan plan{seed, triples, 27000};
  CheckReport assoc = check_hom_associative(m2, plan);
  assoc.law += " of " + m2.name();
  CheckReport mult = check_multiplicative(m2, plan);
  mult.law += " of " + m2.name();
  s.checks.push_back(std::move(assoc));
  s.checks.push_back(std::move(mult));
}

}  // namespace detail

/// Delta on M pulls matrix pairs back to their product in M2(A); M2(A) is a
/// multiplicative Hom-associative algebra; Delta commutes with alpha.
inline SuiteReport suite_m2_representability(const SuiteOptions& o, const std::string& carrier,
                                             const Rational& q = 2, std::size_t pairs = 50,
                                             std::size_t triples = 100) {
  SuiteReport s;
  s.suite = "m2-representability";
  s.parameters = detail::bound_json(o);
  s.parameters["carrier"] = carrier;
  s.parameters["q"] = to_string(q);
  s.parameters["pairs"] = pairs;
  const bool all = carrier == "all";
  if (!all && std::find(representability_carriers().begin(), representability_carriers().end(), carrier) ==
                  representability_carriers().end()) {
    throw PreconditionError("unknown carrier '" + carrier + "' (expected classical, qtwist or all)");
  }
  if (all || carrier == "classical") {
    detail::representability_checks(s, PolyAlgebra::over({"a", "b", "c", "d"}), pairs, o.seed, triples);
  }
  if (all || carrier == "qtwist") detail::representability_checks(s, q_twisted_line(q), pairs, o.seed, triples);
  const FreeBialgebra m = m_bialgebra(o.config, o.bound);
  std::vector<LinComb> elements;
  for (Symbol g : m.algebra.gens) elements.push_back(make_leaf(g));
  detail::append(s.verdicts, check_comultiplicative(m, elements));
  return s;
}

/// Twisting data for the bialgebra/comodule pair: either the endomorphisms
/// written in the descriptors or the lambda-scaling maps.
struct TwistInput {
  CoalgebraDescriptor bialgebra;
  CoalgebraDescriptor comodule;
  std::optional<Rational> lambda;
};

namespace detail {

inline CheckReport identity_twist_check(const PolyBialgebra& tb, const PolyComodule& tc, const SamplePlan& plan) {
  CheckReport r{"identity twist is a no-op", 0, {}, plan.seed};
  const PolyAlgebra& h = tb.base();
  r.samples_run += for_each_pair(h, plan, [&](const Polynomial& p, const Polynomial& q) {
    if (!(tb.algebra().mul(p, q) == h.mul(p, q))) r.fail("product differs at (" + to_string(p) + ", " + to_string(q) + ")");
  });
  r.samples_run += for_each_poly(h, plan, [&](const Polynomial& p) {
    if (!(tb.delta(p) == tb.delta_classical(p))) r.fail("Delta differs at " + to_string(p));
  });
  r.samples_run += for_each_poly(tc.base(), plan, [&](const Polynomial& p) {
    if (!(tc.rho(p) == tc.rho_classical(p))) r.fail("coaction differs at " + to_string(p));
  });
  return r;
}

}  // namespace detail

/// Twist a classical bialgebra and comodule algebra and verify every law of the result.
inline SuiteReport suite_twist(const TwistInput& in, const SuiteOptions& o) {
  SuiteReport s;
  s.suite = "twist";
  s.parameters = detail::bound_json(o);
  s.parameters["lambda"] = in.lambda ? nlohmann::ordered_json(to_string(*in.lambda)) : nlohmann::ordered_json(nullptr);
  const SamplePlan plan{o.seed, 20, 27000};

  const PolyBialgebra h = to_poly_bialgebra(in.bialgebra);
  const PolyComodule c = to_poly_comodule(in.comodule, h);
  const auto phi_h = in.lambda ? phi_lambda(*in.lambda) : in.bialgebra.endo;
  const auto phi_a = in.lambda ? phi_affine(*in.lambda) : in.comodule.endo;
  const std::string label_h = in.lambda ? "phi_" + to_string(*in.lambda) : in.bialgebra.endo_label();
  const std::string label_a = in.lambda ? "phi_A," + to_string(*in.lambda) : in.comodule.endo_label();
  s.parameters["phi_H"] = label_h;
  s.parameters["phi_A"] = label_a;

  s.checks.push_back(check_bialgebra_endomorphism(h, phi_h, plan));
  CheckReport endo_a = check_endomorphism(c.base(), poly_endomorphism(phi_a), plan);
  endo_a.law = "comodule-algebra-endomorphism";
  s.checks.push_back(std::move(endo_a));
  CheckReport compat{"coaction-compatibility", c.base().variables().size(), {}, o.seed};
  for (auto& w : comodule_compatibility_failures(c, phi_h, phi_a)) compat.fail(std::move(w));
  s.checks.push_back(std::move(compat));
  if (!s.passed()) return s;

  const PolyComodule tc = twist_comodule(c, phi_h, phi_a, plan, label_h, label_a);
  const PolyBialgebra& tb = tc.coalgebra();
  s.checks.push_back(check_hom_associative(tb.algebra(), plan));
  s.checks.push_back(check_multiplicative(tb.algebra(), plan));
  s.checks.push_back(check_hom_coassoc(tb, plan));
  s.checks.push_back(check_comultiplicative(tb, plan));
  s.checks.push_back(check_delta_morphism(tb, plan));
  s.checks.push_back(check_hom_associative(tc.algebra(), plan));
  s.checks.push_back(check_comodule(tc, plan));
  s.checks.push_back(check_comodule_homalgebra(tc, plan));
  if (tb.is_classical() && tc.algebra().phi_is_identity()) s.checks.push_back(detail::identity_twist_check(tb, tc, plan));
  s.notes.push_back(std::string("twisted bialgebra is ") + to_string(tb.algebra().flavor()));
  return s;
}

/// The enveloping Hom-bialgebra suite for a Hom-Lie algebra.
inline SuiteReport suite_envelope(const HomLieAlgebra& l, const SuiteOptions& o) {
  CheckReport lie = check_hom_lie(l);
  if (!lie.passed()) {
    SuiteReport s;
    s.suite = "envelope";
    s.parameters = detail::bound_json(o);
    s.checks.push_back(std::move(lie));
    return s;
  }
  SuiteReport s = check_envelope_bialgebra(l, o.bound, o.config);
  s.parameters = detail::bound_json(o);
  s.parameters["max_exponent"] = 0;
  s.parameters["dimension"] = l.dimension();
  s.checks.insert(s.checks.begin(), std::move(lie));
  return s;
}

namespace detail {

template <HomAlgebra A>
void algebra_checks(SuiteReport& s, const A& alg, const SamplePlan& plan) {
  s.parameters["carrier"] = alg.name();
  s.parameters["unit"] = std::string(to_string(alg.flavor()));
  s.checks.push_back(check_hom_associative(alg, plan));
  s.checks.push_back(check_multiplicative(alg, plan));
  CheckReport lie = hlie_of(alg, plan);
  s.checks.push_back(std::move(lie));
  if (alg.flavor() == UnitFlavor::strict_unital) s.checks.push_back(check_unital(alg, plan));
}

}  // namespace detail

/// Axiom checks for the algebra a descriptor describes.
inline SuiteReport suite_check_algebra(const AlgebraDescriptor& d, const SuiteOptions& o) {
  SuiteReport s;
  s.suite = "check-algebra";
  s.parameters["seed"] = o.seed;
  const SamplePlan plan{o.seed, 100, 27000};
  const PolyAlgebra base = d.base();
  const CheckReport endo = check_endomorphism(base, poly_endomorphism(d.endo), plan);
  s.checks.push_back(endo);
  if (!endo.passed()) return s;
  const Twisted<PolyAlgebra> alg = yau_twist_algebra(base, poly_endomorphism(d.endo), d.endo_label(), plan);
  switch (d.wrap) {
    case Wrap::none:
      detail::algebra_checks(s, alg, plan);
      break;
    case Wrap::matrix:
      detail::algebra_checks(s, MatrixAlgebra<Twisted<PolyAlgebra>>(alg), plan);
      break;
    case Wrap::tensor:
      detail::algebra_checks(s, TensorAlgebra<Twisted<PolyAlgebra>, Twisted<PolyAlgebra>>(alg, alg), plan);
      break;
  }
  return s;
}

/// Normalize a term and reduce it against the saturated basis on its generators.
inline SuiteReport suite_reduce(const LinComb& input, const std::set<Symbol>& extra_gens, const SuiteOptions& o) {
  SuiteReport s;
  s.suite = "reduce";
  s.parameters = detail::bound_json(o);
  std::set<Symbol> gens = input.generators();
  gens.insert(extra_gens.begin(), extra_gens.end());
  if (gens.empty()) throw PreconditionError("nothing to reduce: the input mentions no generators");
  std::string names;
  for (Symbol g : gens) names += (names.empty() ? "" : " ") + g.name();
  s.parameters["generators"] = names;
  const RelationBasis basis = saturate(gens, o.bound, o.config);
  if (!basis.in_window(input)) {
    throw OutOfWindowError("input " + to_string(input) + " lies outside the window; raise --max-arity or --max-exp");
  }
  const LinComb residue = basis.reduce(input);
  s.parameters["input"] = to_string(input);
  s.parameters["residue"] = to_string(residue);
  s.verdicts.push_back(make_verdict(input, residue, basis));
  s.notes.push_back("residual dimensions by arity (" + detail::dims_string(basis.residual_dimensions()) + ")");
  return s;
}

}  // namespace homalg
