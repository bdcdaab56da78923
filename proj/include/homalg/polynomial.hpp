#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homalg/errors.hpp"
#include "homalg/rational.hpp"
#include "homalg/symbol.hpp"
#include "homalg/text.hpp"

namespace homalg {

/// A finite formal linear combination of keys with exact coefficients.
template <class Key>
class Sparse {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Rational>;

  Sparse() = default;

  static Sparse basis(const Key& k, const Rational& c = 1) {
    Sparse s;
    s.add(k, c);
    return s;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key& k, const Rational& c) {
    if (homalg::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (homalg::is_zero(it->second)) terms_.erase(it);
    }
  }

  Sparse& operator+=(const Sparse& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Sparse& operator-=(const Sparse& o) {
    for (const auto& [k, c] : o.terms_) add(k, Rational(-c));
    return *this;
  }
  Sparse& operator*=(const Rational& s) {
    if (homalg::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend Sparse operator+(Sparse a, const Sparse& b) { return a += b; }
  friend Sparse operator-(Sparse a, const Sparse& b) { return a -= b; }
  friend Sparse operator-(Sparse a) { return a *= Rational(-1); }
  friend Sparse operator*(const Rational& s, Sparse a) { return a *= s; }
  friend bool operator==(const Sparse& a, const Sparse& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Commutative monomial: variables with positive exponents, sorted by name.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(Symbol s, std::uint32_t e = 1) {
    Monomial m;
    if (e > 0) m.powers_.emplace_back(s, e);
    return m;
  }

  const std::vector<std::pair<Symbol, std::uint32_t>>& powers() const { return powers_; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& [s, e] : powers_) d += e;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    std::size_t i = 0, j = 0;
    while (i < a.powers_.size() || j < b.powers_.size()) {
      if (j == b.powers_.size() || (i < a.powers_.size() && a.powers_[i].first < b.powers_[j].first)) {
        m.powers_.push_back(a.powers_[i++]);
      } else if (i == a.powers_.size() || b.powers_[j].first < a.powers_[i].first) {
        m.powers_.push_back(b.powers_[j++]);
      } else {
        m.powers_.emplace_back(a.powers_[i].first, a.powers_[i].second + b.powers_[j].second);
        ++i;
        ++j;
      }
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Degree first, then lexicographic on (variable, exponent).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.powers_.begin(), a.powers_.end(),
                                                  b.powers_.begin(), b.powers_.end());
  }

 private:
  std::vector<std::pair<Symbol, std::uint32_t>> powers_;
};

using Polynomial = Sparse<Monomial>;

inline Polynomial poly_const(const Rational& c) { return Polynomial::basis(Monomial(), c); }
inline Polynomial poly_var(Symbol s) { return Polynomial::basis(Monomial::var(s)); }
inline Polynomial poly_var(std::string_view name) { return poly_var(Symbol(name)); }

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
  }
  return out;
}

inline Polynomial poly_pow(const Polynomial& p, std::uint32_t e) {
  Polynomial out = poly_const(1);
  for (std::uint32_t i = 0; i < e; ++i) out = poly_mul(out, p);
  return out;
}

inline std::set<Symbol> variables(const Polynomial& p) {
  std::set<Symbol> out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [s, e] : m.powers()) out.insert(s);
  }
  return out;
}

inline std::uint32_t degree(const Polynomial& p) {
  std::uint32_t d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.degree());
  return d;
}

/// The algebra map fixing constants and sending each variable to `images[v]`
/// (variables without an image are fixed).
inline Polynomial substitute(const Polynomial& p, const std::map<Symbol, Polynomial>& images) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = poly_const(c);
    for (const auto& [s, e] : m.powers()) {
      auto it = images.find(s);
      term = poly_mul(term, it == images.end() ? poly_pow(poly_var(s), e) : poly_pow(it->second, e));
    }
    out += term;
  }
  return out;
}

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [s, e] : m.powers()) {
    if (!out.empty()) out += "*";
    out += s.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (m.degree() == 0) {
      out += to_string(c);
    } else if (c == 1) {
      out += to_string(m);
    } else {
      out += to_string(c) + "*" + to_string(m);
    }
  }
  return out;
}

namespace detail {

inline Polynomial parse_poly_sum(Lexer& lex);

inline Polynomial parse_poly_factor(Lexer& lex) {
  using K = Lexer::Kind;
  Polynomial base;
  if (lex.peek().kind == K::name) {
    base = poly_var(lex.take().text);
  } else if (lex.peek().kind == K::number) {
    base = poly_const(lex.rational(lex.take()));
  } else if (lex.peek().kind == K::lparen) {
    lex.take();
    base = parse_poly_sum(lex);
    lex.expect(K::rparen, "')'");
  } else {
    lex.fail("expected a variable, number or '('");
  }
  if (lex.peek().kind == K::caret) {
    lex.take();
    base = poly_pow(base, parse_nat(lex.expect(K::number, "exponent after '^'"), lex));
  }
  return base;
}

inline Polynomial parse_poly_product(Lexer& lex) {
  using K = Lexer::Kind;
  Rational sign = 1;
  if (lex.peek().kind == K::minus) {
    lex.take();
    sign = -1;
  }
  Polynomial p = parse_poly_factor(lex);
  while (lex.peek().kind == K::star) {
    lex.take();
    p = poly_mul(p, parse_poly_factor(lex));
  }
  return sign * p;
}

inline Polynomial parse_poly_sum(Lexer& lex) {
  using K = Lexer::Kind;
  Polynomial p = parse_poly_product(lex);
  while (lex.peek().kind == K::plus || lex.peek().kind == K::minus) {
    const bool negate = lex.take().kind == K::minus;
    Polynomial q = parse_poly_product(lex);
    if (negate) q = -q;
    p += q;
  }
  return p;
}

}  // namespace detail

/// Parse e.g. "2*t^2 - a*b + 1/3". Variables may carry apostrophes.
inline Polynomial parse_polynomial(std::string_view text, std::size_t line = 1) {
  detail::Lexer lex(text, line);
  Polynomial p = detail::parse_poly_sum(lex);
  if (lex.peek().kind != detail::Lexer::Kind::end) lex.fail("trailing input");
  return p;
}

}  // namespace homalg
