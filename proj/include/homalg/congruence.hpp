#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "homalg/alpha_action.hpp"
#include "homalg/errors.hpp"
#include "homalg/lincomb.hpp"
#include "homalg/text.hpp"

namespace homalg {

/// Truncation window for the ideal chain: arity and alpha-exponent caps.
struct Bound {
  std::size_t max_arity = 3;
  std::uint32_t max_exponent = 1;

  friend bool operator==(const Bound&, const Bound&) = default;
};

struct SaturationConfig {
  /// Let relation arguments range over the unit as well (the literal unital ideal).
  bool include_unit_instances = true;
  /// Further generators of the ideal, e.g. bracket relations.
  std::vector<LinComb> extra_relations;
  std::size_t basis_cap = 200000;

  static SaturationConfig unital() { return {}; }
  static SaturationConfig non_unital() {
    SaturationConfig c;
    c.include_unit_instances = false;
    return c;
  }

  std::string name() const { return include_unit_instances ? "unital" : "non-unital"; }
};

/// (uv)alpha(w) - alpha(u)(vw).
inline LinComb hom_associator(const LinComb& u, const LinComb& v, const LinComb& w,
                              const AlphaAction& act = AlphaAction::shift()) {
  return mul(mul(u, v), act.apply(w)) - mul(act.apply(u), mul(v, w));
}

enum class Verdict { proven_equal, not_proven_within_bound };

inline const char* to_string(Verdict v) {
  return v == Verdict::proven_equal ? "PROVEN_EQUAL" : "NOT_PROVEN_WITHIN_BOUND";
}

struct EqualityResult {
  Verdict verdict;
  /// Normal form of lhs - rhs; zero iff proven equal.
  LinComb residue;

  bool proven() const { return verdict == Verdict::proven_equal; }
};

class RelationBasis;

RelationBasis saturate(const std::set<Symbol>& gens, const Bound& bound,
                       const SaturationConfig& config,
                       const AlphaAction& action = AlphaAction::shift());

/// Row-reduced spanning set of the relation ideal inside a bounded window.
///
/// Column 0 is the unit; columns 1.. index the window terms in canonical
/// order. Pivots are the largest column of each row, so residues are written
/// in the smallest available terms. Rows are kept in reduced row-echelon form.
class RelationBasis {
 public:
  using Column = std::uint32_t;
  using Row = std::vector<std::pair<Column, Rational>>;

  const std::vector<Symbol>& generators() const { return gens_; }
  const Bound& bound() const { return bound_; }
  const SaturationConfig& config() const { return config_; }
  const AlphaAction& alpha_action() const { return action_; }

  std::size_t window_size() const { return window_.size(); }
  const std::vector<NormalTerm>& window() const { return window_; }

  bool in_window(const NormalTerm& t) const { return index_.contains(t); }

  bool in_window(const LinComb& v) const {
    for (const auto& [t, c] : v.terms()) {
      if (!in_window(t)) return false;
    }
    return true;
  }

  std::size_t rows_count() const { return rows_.size(); }

  /// Rows as elements, ordered by pivot.
  std::vector<LinComb> rows() const {
    std::vector<std::pair<Column, std::size_t>> order;
    for (std::size_t i = 0; i < rows_.size(); ++i) order.emplace_back(rows_[i].back().first, i);
    std::sort(order.begin(), order.end());
    std::vector<LinComb> out;
    out.reserve(rows_.size());
    for (const auto& [p, i] : order) out.push_back(to_lincomb(rows_[i]));
    return out;
  }

  /// Residue of v modulo the row space. Linear, idempotent, kills every row.
  LinComb reduce(const LinComb& v) const { return to_lincomb(reduce_row(to_row(v))); }

  EqualityResult equal_mod(const LinComb& u, const LinComb& v) const {
    LinComb r = reduce(u - v);
    const Verdict verdict = r.is_zero() ? Verdict::proven_equal : Verdict::not_proven_within_bound;
    return {verdict, std::move(r)};
  }

  /// Dimension of the quotient window per arity (window terms without a pivot).
  std::map<std::size_t, std::size_t> residual_dimensions() const {
    std::map<std::size_t, std::size_t> out;
    for (std::size_t n = 1; n <= bound_.max_arity; ++n) out[n] = 0;
    for (Column c = 1; c < pivot_of_.size(); ++c) {
      if (pivot_of_[c] < 0) ++out[window_[c - 1].arity()];
    }
    return out;
  }

 private:
  friend RelationBasis saturate(const std::set<Symbol>&, const Bound&, const SaturationConfig&,
                                const AlphaAction&);

  RelationBasis(std::vector<Symbol> gens, Bound bound, SaturationConfig config, AlphaAction action)
      : gens_(std::move(gens)),
        bound_(bound),
        config_(std::move(config)),
        action_(std::move(action)) {}

  void enumerate_window() {
    if (bound_.max_arity < 1) throw PreconditionError("bound max_arity must be >= 1");
    const std::uint32_t max_exp = action_.is_shift() ? bound_.max_exponent : 0;
    std::vector<NormalTerm> leaves;
    for (Symbol g : gens_) {
      for (std::uint32_t e = 0; e <= max_exp; ++e) leaves.push_back(NormalTerm::leaf(g, e));
    }
    // Catalan-style count first so an oversized window fails before allocating.
    std::vector<double> count(bound_.max_arity + 1, 0.0);
    count[1] = static_cast<double>(leaves.size());
    double total = count[1];
    for (std::size_t n = 2; n <= bound_.max_arity; ++n) {
      for (std::size_t k = 1; k < n; ++k) count[n] += count[k] * count[n - k];
      total += count[n];
    }
    if (total > static_cast<double>(config_.basis_cap)) {
      throw ResourceError("window of " + std::to_string(static_cast<long double>(total)) +
                              " terms exceeds basis cap " + std::to_string(config_.basis_cap),
                          config_.basis_cap);
    }
    by_arity_.assign(bound_.max_arity + 1, {});
    by_arity_[1] = leaves;
    for (std::size_t n = 2; n <= bound_.max_arity; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        for (const auto& l : by_arity_[k]) {
          for (const auto& r : by_arity_[n - k]) by_arity_[n].push_back(NormalTerm::product(l, r));
        }
      }
    }
    for (auto& group : by_arity_) std::sort(group.begin(), group.end());
    for (const auto& group : by_arity_) window_.insert(window_.end(), group.begin(), group.end());
    index_.reserve(window_.size());
    for (std::size_t i = 0; i < window_.size(); ++i) index_.emplace(window_[i], static_cast<Column>(i + 1));
    pivot_of_.assign(window_.size() + 1, -1);
    occurrences_.assign(window_.size() + 1, {});
  }

  Row to_row(const LinComb& v) const {
    Row row;
    row.reserve(v.terms().size() + 1);
    if (!is_zero(v.unit_coeff())) row.emplace_back(0, v.unit_coeff());
    for (const auto& [t, c] : v.terms()) {
      auto it = index_.find(t);
      if (it == index_.end()) {
        throw OutOfWindowError("term " + to_string(t) + " lies outside the window (arity <= " +
                               std::to_string(bound_.max_arity) + ", exponent <= " +
                               std::to_string(bound_.max_exponent) + ")");
      }
      row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  LinComb to_lincomb(const Row& row) const {
    LinComb v;
    for (const auto& [c, x] : row) {
      if (c == 0) {
        v.add_unit(x);
      } else {
        v.add_term(window_[c - 1], x);
      }
    }
    return v;
  }

  Row reduce_row(const Row& row) const {
    std::map<Column, Rational> acc;
    for (const auto& [c, x] : row) {
      const int pr = pivot_of_[c];
      if (pr < 0) {
        acc[c] += x;
        continue;
      }
      for (const auto& [c2, y] : rows_[static_cast<std::size_t>(pr)]) {
        if (c2 != c) acc[c2] -= x * y;
      }
    }
    Row out;
    for (auto& [c, x] : acc) {
      if (!is_zero(x)) out.emplace_back(c, std::move(x));
    }
    return out;
  }

  static Row axpy(const Row& a, const Rational& s, const Row& b) {
    // a - s*b
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -s * b[j].second);
        ++j;
      } else {
        Rational x = a[i].second - s * b[j].second;
        if (!is_zero(x)) out.emplace_back(a[i].first, std::move(x));
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Insert a reduced, nonzero row and restore reduced echelon form.
  void insert_row(Row row) {
    const Column pivot = row.back().first;
    const Rational lead = row.back().second;
    if (lead != 1) {
      for (auto& [c, x] : row) x /= lead;
    }
    const auto id = static_cast<std::uint32_t>(rows_.size());
    for (std::uint32_t k : occurrences_[pivot]) {
      Row& other = rows_[k];
      auto it = std::lower_bound(other.begin(), other.end(), pivot,
                                 [](const auto& e, Column c) { return e.first < c; });
      if (it == other.end() || it->first != pivot) continue;
      const Rational s = it->second;
      Row updated = axpy(other, s, row);
      for (const auto& [c, x] : row) {
        if (c != pivot) occurrences_[c].push_back(k);
      }
      other = std::move(updated);
    }
    occurrences_[pivot].clear();
    occurrences_[pivot].shrink_to_fit();
    for (const auto& [c, x] : row) {
      if (c != pivot) occurrences_[c].push_back(id);
    }
    pivot_of_[pivot] = static_cast<int>(id);
    rows_.push_back(std::move(row));
  }

  /// Add v to the row space; true if it was independent of the existing rows.
  bool offer(const LinComb& v) {
    Row r = reduce_row(to_row(v));
    if (r.empty()) return false;
    insert_row(std::move(r));
    return true;
  }

  std::vector<Symbol> gens_;
  Bound bound_;
  SaturationConfig config_;
  AlphaAction action_;
  std::vector<NormalTerm> window_;
  std::vector<std::vector<NormalTerm>> by_arity_;
  std::unordered_map<NormalTerm, Column> index_;
  std::vector<Row> rows_;
  std::vector<int> pivot_of_;
  std::vector<std::vector<std::uint32_t>> occurrences_;
};

/// Saturate the relation ideal inside the window.
///
/// Generates every hom-associator instance whose arguments are window terms
/// (and the unit, when configured) and whose value stays in the window, adds
/// the extra relations, then closes under alpha and left/right multiplication
/// by window terms until no new independent row appears. Multiplicativity is
/// built into the normal form and needs no rows.
inline RelationBasis saturate(const std::set<Symbol>& gens, const Bound& bound,
                              const SaturationConfig& config, const AlphaAction& action) {
  RelationBasis basis(std::vector<Symbol>(gens.begin(), gens.end()), bound, config, action);
  basis.enumerate_window();
  const std::size_t max_arity = bound.max_arity;

  for (const auto& r : config.extra_relations) {
    if (!basis.in_window(r)) {
      throw PreconditionError("extra relation " + to_string(r) + " lies outside the window");
    }
  }

  std::deque<LinComb> pending;
  auto offer = [&](const LinComb& v) {
    if (v.is_zero() || !basis.in_window(v)) return;
    if (basis.offer(v)) pending.push_back(v);
  };

  // Arguments grouped by arity; arity 0 holds the unit.
  std::vector<std::vector<LinComb>> args(max_arity + 1);
  std::vector<std::vector<LinComb>> alpha_args(max_arity + 1);
  if (config.include_unit_instances) {
    args[0].push_back(LinComb::unit());
    alpha_args[0].push_back(LinComb::unit());
  }
  for (std::size_t n = 1; n <= max_arity; ++n) {
    for (const auto& t : basis.by_arity_[n]) {
      args[n].push_back(LinComb::term(t));
      if (action.fits(t, bound.max_exponent)) alpha_args[n].push_back(LinComb::term(t));
    }
  }

  for (std::size_t au = 0; au <= max_arity; ++au) {
    for (std::size_t av = 0; au + av <= max_arity; ++av) {
      for (std::size_t aw = 0; au + av + aw <= max_arity; ++aw) {
        if (au + av + aw == 0) continue;
        for (const auto& u : alpha_args[au]) {
          for (const auto& v : args[av]) {
            for (const auto& w : alpha_args[aw]) offer(hom_associator(u, v, w, action));
          }
        }
      }
    }
  }
  for (const auto& r : config.extra_relations) offer(r);

  while (!pending.empty()) {
    const LinComb g = std::move(pending.front());
    pending.pop_front();
    bool alpha_fits = true;
    for (const auto& [t, c] : g.terms()) alpha_fits = alpha_fits && action.fits(t, bound.max_exponent);
    if (alpha_fits) offer(action.apply(g));
    const std::size_t ag = g.max_arity();
    for (std::size_t n = 1; n + ag <= max_arity; ++n) {
      for (const auto& t : basis.by_arity_[n]) {
        const LinComb tv = LinComb::term(t);
        offer(mul(g, tv));
        offer(mul(tv, g));
      }
    }
  }
  return basis;
}

}  // namespace homalg
