#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "homalg/rational.hpp"
#include "homalg/term.hpp"

namespace homalg {

/// An element of the free unital Hom-nonassociative algebra: a scalar multiple
/// of the adjoined unit plus a finite sum of normal terms. Zero coefficients
/// are never stored.
class LinComb {
 public:
  using Terms = std::map<NormalTerm, Rational>;

  LinComb() = default;

  static LinComb unit(const Rational& c = 1) {
    LinComb v;
    v.unit_ = c;
    return v;
  }

  static LinComb term(const NormalTerm& t, const Rational& c = 1) {
    LinComb v;
    v.add_term(t, c);
    return v;
  }

  const Rational& unit_coeff() const { return unit_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return homalg::is_zero(unit_) && terms_.empty(); }

  Rational coeff(const NormalTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const NormalTerm& t, const Rational& c) {
    if (homalg::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (homalg::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_unit(const Rational& c) { unit_ += c; }

  LinComb& operator+=(const LinComb& o) {
    unit_ += o.unit_;
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
  }

  LinComb& operator-=(const LinComb& o) {
    unit_ -= o.unit_;
    for (const auto& [t, c] : o.terms_) add_term(t, Rational(-c));
    return *this;
  }

  LinComb& operator*=(const Rational& s) {
    if (homalg::is_zero(s)) {
      *this = LinComb();
      return *this;
    }
    unit_ *= s;
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.unit_ == b.unit_ && a.terms_ == b.terms_;
  }

  std::set<Symbol> generators() const {
    std::set<Symbol> out;
    for (const auto& [t, c] : terms_) {
      for (const auto& l : t.leaves()) out.insert(l.gen);
    }
    return out;
  }

  std::size_t max_arity() const {
    std::size_t m = 0;
    for (const auto& [t, c] : terms_) m = std::max(m, t.arity());
    return m;
  }

  std::uint32_t max_exponent() const {
    std::uint32_t m = 0;
    for (const auto& [t, c] : terms_) m = std::max(m, t.max_exponent());
    return m;
  }

 private:
  Rational unit_ = 0;
  Terms terms_;
};

/// The generator image j(g) composed with alpha^k, i.e. the leaf g_k.
inline LinComb make_leaf(Symbol g, std::uint32_t k = 0) {
  return LinComb::term(NormalTerm::leaf(g, k));
}

inline LinComb make_leaf(std::string_view name, std::uint32_t k = 0) {
  return make_leaf(Symbol(name), k);
}

/// Bilinear grafting; unit parts follow (a, x)(b, y) = (ab, ay + bx + xy).
inline LinComb mul(const LinComb& u, const LinComb& v) {
  LinComb out = LinComb::unit(u.unit_coeff() * v.unit_coeff());
  if (!is_zero(u.unit_coeff())) {
    for (const auto& [t, c] : v.terms()) out.add_term(t, u.unit_coeff() * c);
  }
  if (!is_zero(v.unit_coeff())) {
    for (const auto& [t, c] : u.terms()) out.add_term(t, v.unit_coeff() * c);
  }
  for (const auto& [tu, cu] : u.terms()) {
    for (const auto& [tv, cv] : v.terms()) {
      out.add_term(NormalTerm::product(tu, tv), cu * cv);
    }
  }
  return out;
}

/// alpha^k on the free object: raises every leaf exponent by k, fixes the unit.
inline LinComb alpha(const LinComb& v, std::uint32_t k = 1) {
  LinComb out = LinComb::unit(v.unit_coeff());
  for (const auto& [t, c] : v.terms()) out.add_term(t.shifted(k), c);
  return out;
}

inline LinComb normalize(const RawTerm& t) { return LinComb::term(normalize_term(t)); }

/// (arity, weight) of every homogeneous component present.
inline std::set<std::pair<std::size_t, std::uint64_t>> grading(const LinComb& v) {
  std::set<std::pair<std::size_t, std::uint64_t>> out;
  for (const auto& [t, c] : v.terms()) out.emplace(t.arity(), t.weight());
  return out;
}

/// Replace every leaf by `image(leaf)` and multiply out; the unit is fixed.
template <class LeafImage>
LinComb substitute(const NormalTerm& t, LeafImage&& image) {
  if (t.is_leaf()) return image(t.as_leaf());
  auto [l, r] = t.split();
  return mul(substitute(l, image), substitute(r, image));
}

template <class LeafImage>
LinComb substitute(const LinComb& v, LeafImage&& image) {
  LinComb out = LinComb::unit(v.unit_coeff());
  for (const auto& [t, c] : v.terms()) {
    LinComb s = substitute(t, image);
    s *= c;
    out += s;
  }
  return out;
}

}  // namespace homalg
