#pragma once

// Textual term grammar:
//   leaf    := NAME "@" NAT            ("@0" may be omitted on input)
//   term    := leaf | "(" term "*" term ")" | "(" "A" NAT term ")"
//   lincomb := summand { ("+" | "-") summand } | "0"
//   summand := ["-"] (RATIONAL ["*" term] | term)
// A bare rational summand is the unit component. NAME may end in apostrophes.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "homalg/errors.hpp"
#include "homalg/lincomb.hpp"

namespace homalg {

namespace detail {

class Lexer {
 public:
  enum class Kind { end, lparen, rparen, star, plus, minus, at, caret, equals, name, number };

  struct Token {
    Kind kind = Kind::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
  };

  explicit Lexer(std::string_view src, std::size_t line = 1) : src_(src), line_(line) {
    current_ = scan();
    lookahead_ = scan();
  }

  const Token& peek() const { return current_; }
  const Token& peek2() const { return lookahead_; }

  Token take() {
    Token t = current_;
    current_ = lookahead_;
    lookahead_ = scan();
    return t;
  }

  Token expect(Kind k, const char* what) {
    if (current_.kind != k) fail(std::string("expected ") + what);
    return take();
  }

  /// A rational from a number token, reported at that token on failure.
  Rational rational(const Token& tok) const {
    try {
      return parse_rational(tok.text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), tok.line, tok.column);
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string near = current_.kind == Kind::end ? "end of input" : "'" + current_.text + "'";
    throw ParseError(what + " near " + near, current_.line, current_.column);
  }

 private:
  Token scan() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    const std::size_t start = pos_;
    auto single = [&](Kind k) {
      ++pos_;
      ++col_;
      t.kind = k;
      t.text = std::string(1, c);
    };
    switch (c) {
      case '(': single(Kind::lparen); break;
      case ')': single(Kind::rparen); break;
      case '*': single(Kind::star); break;
      case '+': single(Kind::plus); break;
      case '-': single(Kind::minus); break;
      case '@': single(Kind::at); break;
      case '^': single(Kind::caret); break;
      case '=': single(Kind::equals); break;
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) {
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
          if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
              std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
          }
          t.kind = Kind::number;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          while (pos_ < src_.size() &&
                 (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
          }
          while (pos_ < src_.size() && src_[pos_] == '\'') ++pos_;
          t.kind = Kind::name;
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        col_ += pos_ - start;
    }
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
  Token current_;
  Token lookahead_;
};

inline std::uint32_t parse_nat(const Lexer::Token& tok, Lexer& lex) {
  if (tok.text.find('/') != std::string::npos) lex.fail("expected a natural number");
  try {
    const unsigned long v = std::stoul(tok.text);
    if (v > 0xffffffffUL) throw std::out_of_range("exponent");
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw ParseError("natural number out of range", tok.line, tok.column);
  }
}

inline RawTerm parse_term(Lexer& lex) {
  using K = Lexer::Kind;
  if (lex.peek().kind == K::name) {
    const auto name = lex.take();
    std::uint32_t exp = 0;
    if (lex.peek().kind == K::at) {
      lex.take();
      exp = parse_nat(lex.expect(K::number, "alpha exponent after '@'"), lex);
    }
    return RawTerm::leaf(Symbol(name.text), exp);
  }
  if (lex.peek().kind != K::lparen) lex.fail("expected a term");
  lex.take();
  if (lex.peek().kind == K::name && lex.peek().text == "A" && lex.peek2().kind == K::number) {
    lex.take();
    const auto wtok = lex.take();
    const std::uint32_t weight = parse_nat(wtok, lex);
    if (weight == 0) throw ParseError("alpha node of weight 0", wtok.line, wtok.column);
    RawTerm child = parse_term(lex);
    lex.expect(K::rparen, "')'");
    return RawTerm::alpha(weight, std::move(child));
  }
  RawTerm lhs = parse_term(lex);
  lex.expect(K::star, "'*'");
  RawTerm rhs = parse_term(lex);
  lex.expect(K::rparen, "')'");
  return RawTerm::product(std::move(lhs), std::move(rhs));
}

inline LinComb parse_summand(Lexer& lex) {
  using K = Lexer::Kind;
  Rational sign = 1;
  if (lex.peek().kind == K::minus) {
    lex.take();
    sign = -1;
  }
  if (lex.peek().kind == K::number) {
    const auto tok = lex.take();
    Rational c = lex.rational(tok) * sign;
    if (lex.peek().kind == K::star) {
      lex.take();
      return c * normalize(parse_term(lex));
    }
    return LinComb::unit(c);
  }
  return sign * normalize(parse_term(lex));
}

}  // namespace detail

inline RawTerm parse_raw_term(std::string_view text) {
  detail::Lexer lex(text);
  RawTerm t = detail::parse_term(lex);
  if (lex.peek().kind != detail::Lexer::Kind::end) lex.fail("trailing input");
  return t;
}

inline NormalTerm parse_term(std::string_view text) { return normalize_term(parse_raw_term(text)); }

/// Parse a linear combination; alpha nodes are normalized away.
inline LinComb parse_lincomb(std::string_view text, std::size_t line = 1) {
  using K = detail::Lexer::Kind;
  detail::Lexer lex(text, line);
  LinComb out = detail::parse_summand(lex);
  while (lex.peek().kind == K::plus || lex.peek().kind == K::minus) {
    const bool negate = lex.take().kind == K::minus;
    LinComb s = detail::parse_summand(lex);
    if (negate) s = -s;
    out += s;
  }
  if (lex.peek().kind != K::end) lex.fail("expected '+', '-' or end of input");
  return out;
}

inline std::string to_string(const NormalTerm& t) {
  if (t.is_leaf()) {
    const Leaf l = t.as_leaf();
    return l.gen.name() + "@" + std::to_string(l.exp);
  }
  auto [l, r] = t.split();
  return "(" + to_string(l) + " * " + to_string(r) + ")";
}

inline std::string to_string(const RawTerm& t) {
  switch (t.kind()) {
    case RawTerm::Kind::leaf:
      return t.as_leaf().gen.name() + "@" + std::to_string(t.as_leaf().exp);
    case RawTerm::Kind::product:
      return "(" + to_string(*t.left()) + " * " + to_string(*t.right()) + ")";
    case RawTerm::Kind::alpha:
      return "(A " + std::to_string(t.weight()) + " " + to_string(*t.child()) + ")";
  }
  return {};
}

/// Canonical printing: unit component first, then terms in canonical order.
inline std::string to_string(const LinComb& v) {
  if (v.is_zero()) return "0";
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (!is_zero(v.unit_coeff())) append(to_string(v.unit_coeff()));
  for (const auto& [t, c] : v.terms()) {
    append(c == 1 ? to_string(t) : to_string(c) + "*" + to_string(t));
  }
  return out;
}

}  // namespace homalg
