// homalg_cli: batch front end for the verification suites.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad input,
// 3 precondition failure, 4 bound or resource cap exceeded.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "homalg/homalg.hpp"

#ifndef HOMALG_DATA_DIR
#define HOMALG_DATA_DIR "data"
#endif

namespace {

using namespace homalg;

struct Globals {
  std::size_t max_arity = 3;
  std::uint32_t max_exp = 1;
  bool non_unital = false;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool timings = false;

  SuiteOptions options() const {
    SuiteOptions o;
    o.bound = Bound{max_arity, max_exp};
    o.config = non_unital ? SaturationConfig::non_unital() : SaturationConfig::unital();
    o.seed = seed;
    o.timings = timings;
    return o;
  }
};

std::string data_path(const std::string& name) { return std::string(HOMALG_DATA_DIR) + "/" + name; }

int emit(const SuiteReport& s, const Globals& g, const nlohmann::ordered_json& extra = {}) {
  if (g.format == "json") {
    auto j = to_json(s);
    for (const auto& [k, v] : extra.items()) j["parameters"][k] = v;
    std::cout << j.dump(2) << "\n";
  } else if (s.suite == "reduce") {
    std::cout << s.parameters["residue"].get<std::string>() << "\n";
  } else {
    std::cout << to_text(s);
  }
  if (s.passed()) return 0;
  std::cerr << "first failing law: " << s.first_failure() << "\n";
  return 1;
}

Rational rational_option(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(flag) + ": " + e.what(), 1, 1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-associative algebra toolkit: reductions and law verification"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-arity", g.max_arity, "largest tree arity in the saturation window")->check(CLI::PositiveNumber);
  app.add_option("--max-exp", g.max_exp, "largest alpha exponent in the saturation window");
  app.add_flag("--non-unital", g.non_unital, "leave the unit out of relation instances");
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", g.timings, "record elapsed time per verdict (json only)");

  std::string term;
  std::vector<std::string> extra_gens;
  auto* reduce = app.add_subcommand("reduce", "normalize a term and reduce it modulo the relations");
  reduce->add_option("term", term, "element in the term grammar")->required();
  reduce->add_option("--gens", extra_gens, "extra generators for the basis, comma separated")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto* coassoc = verify->add_subcommand("m-coassoc", "Hom-coassociativity of the matrix comultiplication");
  auto* comodule = verify->add_subcommand("affine-comodule", "comodule law of the Hom-affine plane");

  std::string carrier = "all", q_text = "2";
  std::size_t pairs = 50;
  auto* repr = verify->add_subcommand("m2-representability", "Delta represents matrix multiplication");
  repr->add_option("--carrier", carrier, "classical | qtwist | all")->check(CLI::IsMember({"classical", "qtwist", "all"}));
  repr->add_option("--q", q_text, "twisting scalar for t -> q t");
  repr->add_option("--pairs", pairs, "random matrix pairs");

  std::string bialg_file = data_path("m2.bialg"), comod_file = data_path("affine.comod");
  std::optional<std::string> lambda_text;
  auto* twist = verify->add_subcommand("twist", "twist a bialgebra and comodule algebra and check the result");
  twist->add_option("--bialgebra", bialg_file, "bialgebra descriptor");
  twist->add_option("--comodule", comod_file, "comodule descriptor");
  twist->add_option("--lambda", lambda_text, "use the lambda-scaling maps instead of the descriptor endomorphisms");

  std::string lie_file;
  auto* env = verify->add_subcommand("envelope", "enveloping Hom-bialgebra of a Hom-Lie algebra");
  env->add_option("file", lie_file, "Hom-Lie descriptor")->required()->check(CLI::ExistingFile);

  std::string alg_file;
  auto* check = app.add_subcommand("check", "axiom checks");
  check->require_subcommand(1);
  auto* check_alg = check->add_subcommand("algebra", "check a Hom-algebra descriptor");
  check_alg->add_option("file", alg_file, "algebra descriptor")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    const SuiteOptions o = g.options();
    if (*reduce) {
      std::set<Symbol> gens;
      for (const auto& n : extra_gens) gens.insert(Symbol(n));
      return emit(suite_reduce(parse_lincomb(term), gens, o), g);
    }
    if (*coassoc) return emit(suite_m_coassoc(o), g);
    if (*comodule) return emit(suite_affine_comodule(o), g);
    if (*repr) return emit(suite_m2_representability(o, carrier, rational_option(q_text, "--q"), pairs), g);
    if (*twist) {
      TwistInput in{load_bialgebra_descriptor(bialg_file), load_comodule_descriptor(comod_file), std::nullopt};
      if (lambda_text) in.lambda = rational_option(*lambda_text, "--lambda");
      return emit(suite_twist(in, o), g, {{"bialgebra", bialg_file}, {"comodule", comod_file}});
    }
    if (*env) return emit(suite_envelope(load_hom_lie_descriptor(lie_file), o), g, {{"file", lie_file}});
    if (*check_alg) return emit(suite_check_algebra(load_algebra_descriptor(alg_file), o), g, {{"file", alg_file}});
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 3;
  } catch (const OutOfWindowError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 4;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
