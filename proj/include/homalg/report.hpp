#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homalg/congruence.hpp"

namespace homalg {

/// Outcome of evaluating one law over a sample set. Empty counterexamples = pass.
struct CheckReport {
  std::string law;
  std::size_t samples_run = 0;
  std::vector<std::string> counterexamples;
  std::uint64_t seed = 0;

  bool passed() const { return counterexamples.empty(); }

  void fail(std::string witness) {
    // Keep reports readable when a law fails everywhere.
    if (counterexamples.size() < 20) counterexamples.push_back(std::move(witness));
  }

  CheckReport& absorb(const CheckReport& other) {
    samples_run += other.samples_run;
    for (const auto& c : other.counterexamples) fail(other.law + ": " + c);
    return *this;
  }
};

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["samples_run"] = r.samples_run;
  j["counterexamples"] = r.counterexamples;
  j["seed"] = r.seed;
  return j;
}

/// One equality query against a relation basis.
struct VerdictRecord {
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::not_proven_within_bound;
  std::string residue;
  Bound bound;
  std::string config;
  std::size_t rows_count = 0;
  std::optional<double> elapsed_seconds;

  bool passed() const { return verdict == Verdict::proven_equal; }
};

inline VerdictRecord make_verdict(const LinComb& lhs, const LinComb& rhs, const RelationBasis& basis) {
  const EqualityResult r = basis.equal_mod(lhs, rhs);
  VerdictRecord rec;
  rec.lhs = to_string(lhs);
  rec.rhs = to_string(rhs);
  rec.verdict = r.verdict;
  rec.residue = to_string(r.residue);
  rec.bound = basis.bound();
  rec.config = basis.config().name();
  rec.rows_count = basis.rows_count();
  return rec;
}

/// Verdict for an identity that must hold on the nose, with no quotient.
inline VerdictRecord make_exact_verdict(const LinComb& lhs, const LinComb& rhs) {
  VerdictRecord rec;
  rec.lhs = to_string(lhs);
  rec.rhs = to_string(rhs);
  const LinComb diff = lhs - rhs;
  rec.verdict = diff.is_zero() ? Verdict::proven_equal : Verdict::not_proven_within_bound;
  rec.residue = to_string(diff);
  rec.bound = Bound{std::max<std::size_t>(1, std::max(lhs.max_arity(), rhs.max_arity())),
                    std::max(lhs.max_exponent(), rhs.max_exponent())};
  rec.config = "exact";
  return rec;
}

inline nlohmann::ordered_json to_json(const VerdictRecord& r) {
  nlohmann::ordered_json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["verdict"] = to_string(r.verdict);
  j["residue"] = r.residue;
  j["bound"] = {{"max_arity", r.bound.max_arity}, {"max_exponent", r.bound.max_exponent}};
  j["config"] = r.config;
  j["rows_count"] = r.rows_count;
  if (r.elapsed_seconds) {
    j["elapsed"] = *r.elapsed_seconds;
  } else {
    j["elapsed"] = nullptr;
  }
  return j;
}

/// A named group of checks and verdicts, as emitted by the CLI.
struct SuiteReport {
  std::string suite;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<CheckReport> checks;
  std::vector<VerdictRecord> verdicts;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    for (const auto& v : verdicts) {
      if (!v.passed()) return false;
    }
    return true;
  }

  /// Name of the first failing law or equality, empty when everything passed.
  std::string first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed()) return c.law;
    }
    for (const auto& v : verdicts) {
      if (!v.passed()) return v.lhs + " == " + v.rhs;
    }
    return {};
  }
};

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::ordered_json to_json(const SuiteReport& s) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = s.suite;
  j["parameters"] = s.parameters;
  j["passed"] = s.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : s.checks) j["checks"].push_back(to_json(c));
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : s.verdicts) j["verdicts"].push_back(to_json(v));
  j["notes"] = s.notes;
  return j;
}

inline std::string to_text(const SuiteReport& s) {
  std::string out = "suite " + s.suite + ": " + (s.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : s.checks) {
    out += "  check " + c.law + " (" + std::to_string(c.samples_run) + " samples, seed " +
           std::to_string(c.seed) + "): " + (c.passed() ? "pass" : "FAIL") + "\n";
    for (const auto& w : c.counterexamples) out += "    witness: " + w + "\n";
  }
  for (const auto& v : s.verdicts) {
    out += "  " + v.lhs + " == " + v.rhs + " [" + v.config + ", arity<=" +
           std::to_string(v.bound.max_arity) + ", exp<=" + std::to_string(v.bound.max_exponent) +
           ", rows " + std::to_string(v.rows_count) + "]: " + to_string(v.verdict) + "\n";
    if (v.verdict != Verdict::proven_equal) out += "    residue: " + v.residue + "\n";
  }
  for (const auto& n : s.notes) out += "  note: " + n + "\n";
  return out;
}

}  // namespace homalg
