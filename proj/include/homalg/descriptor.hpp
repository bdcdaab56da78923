#pragma once

// Line-oriented descriptor files. Blank lines and text after '#' are ignored.
//
// Algebra descriptor:
//   carrier poly t u          polynomial carrier in the listed variables
//   endo t = 2*t              twisting endomorphism (unlisted variables fixed)
//   wrap matrix               none | matrix | tensor
//
// Bialgebra descriptor:
//   generators a b c d
//   delta a = (a' * a'') + (b' * c'')     first leg ', second leg ''
//   endo b = 3*b
//
// Comodule descriptor:
//   generators x y
//   coaction x = (a' * x'') + (b' * y'')  coalgebra leg ', algebra leg ''
//   endo y = 1/3*y
//
// Hom-Lie descriptor (indices are 1-based):
//   dimension 2
//   basis e1 e2               optional, defaults to e1..en
//   bracket 1 2 0 2           [e1, e2] = 0*e1 + 2*e2, [e2, e1] set to the negative
//   alpha 1 1 1               alpha(e1) = e1 + e2
//   multiplicative false      optional, defaults to true
//
// Delta and coaction images are read by both the term grammar (free side)
// and the polynomial grammar (classical side), so products are written
// with explicit parentheses.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/bialgebra.hpp"
#include "homalg/errors.hpp"
#include "homalg/hom_lie.hpp"
#include "homalg/polynomial.hpp"
#include "homalg/text.hpp"

namespace homalg {

namespace detail {

struct DescriptorLine {
  std::size_t number = 0;
  std::string text;
  /// Whitespace-separated words with their 1-based columns.
  std::vector<std::pair<std::string, std::size_t>> words;

  const std::string& keyword() const { return words.front().first; }

  [[noreturn]] void fail(const std::string& what, std::size_t word = 0) const {
    throw ParseError(what, number, word < words.size() ? words[word].second : text.size() + 1);
  }

  /// The text after "keyword name =", with its column.
  std::pair<std::string_view, std::size_t> rhs() const {
    const auto eq = text.find('=');
    if (words.size() < 3 || words[2].first.rfind('=', 0) != 0 || eq == std::string::npos) {
      fail("expected '" + keyword() + " <name> = <expression>'", words.size() > 2 ? 2 : words.size());
    }
    return {std::string_view(text).substr(eq + 1), eq + 2};
  }
};

inline std::vector<DescriptorLine> split_lines(std::string_view src) {
  std::vector<DescriptorLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= src.size()) {
    const std::size_t end = std::min(src.find('\n', pos), src.size());
    ++number;
    std::string text(src.substr(pos, end - pos));
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    if (!text.empty() && text.back() == '\r') text.pop_back();
    DescriptorLine line{number, text, {}};
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i > start) line.words.emplace_back(text.substr(start, i - start), start + 1);
    }
    if (!line.words.empty()) out.push_back(std::move(line));
    if (end == src.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Re-anchor parse errors from a sub-expression at its position in the file.
template <class F>
auto parse_at(const DescriptorLine& line, std::size_t column, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line.number, column + e.column() - 1);
  }
}

inline Polynomial parse_poly_rhs(const DescriptorLine& line) {
  auto [expr, col] = line.rhs();
  return parse_at(line, col, [&] { return parse_polynomial(expr, line.number); });
}

inline Symbol declared(const DescriptorLine& line, std::size_t word, const std::vector<Symbol>& vars) {
  if (word >= line.words.size()) line.fail("missing name", word);
  Symbol s(line.words[word].first);
  for (Symbol v : vars) {
    if (v == s) return s;
  }
  line.fail("'" + s.name() + "' is not a declared generator", word);
}

inline std::vector<Symbol> parse_names(const DescriptorLine& line) {
  std::vector<Symbol> out;
  for (std::size_t i = 1; i < line.words.size(); ++i) {
    const std::string& w = line.words[i].first;
    if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_') ||
        w.find('\'') != std::string::npos) {
      line.fail("invalid generator name '" + w + "'", i);
    }
    for (Symbol s : out) {
      if (s.name() == w) line.fail("duplicate generator '" + w + "'", i);
    }
    out.emplace_back(w);
  }
  if (out.empty()) line.fail("expected at least one name", 1);
  return out;
}

inline Rational parse_word_rational(const DescriptorLine& line, std::size_t word) {
  if (word >= line.words.size()) line.fail("missing number", word);
  try {
    return parse_rational(line.words[word].first);
  } catch (const std::exception&) {
    line.fail("invalid rational '" + line.words[word].first + "'", word);
  }
}

inline std::size_t parse_word_index(const DescriptorLine& line, std::size_t word, std::size_t dim) {
  const Rational r = parse_word_rational(line, word);
  if (r.get_den() != 1 || r < 1 || r > static_cast<long>(dim)) {
    line.fail("index must be an integer in 1.." + std::to_string(dim), word);
  }
  return static_cast<std::size_t>(r.get_num().get_ui()) - 1;
}

/// Split a polynomial in tagged variables into a two-leg tensor: variables
/// with one apostrophe go left, with two go right.
inline PolyTensor polynomial_to_tensor(const Polynomial& p, const DescriptorLine& line) {
  PolyTensor out;
  for (const auto& [m, c] : p.terms()) {
    Monomial left, right;
    for (const auto& [s, e] : m.powers()) {
      auto [base, k] = split_tag(s);
      if (k == 1) {
        left = left * Monomial::var(base, e);
      } else if (k == 2) {
        right = right * Monomial::var(base, e);
      } else {
        line.fail("variable " + s.name() + " must carry one or two apostrophes");
      }
    }
    out.add({left, right}, c);
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

enum class Wrap { none, matrix, tensor };

struct AlgebraDescriptor {
  std::vector<Symbol> variables;
  std::map<Symbol, Polynomial> endo;
  Wrap wrap = Wrap::none;

  PolyAlgebra base() const { return PolyAlgebra(variables); }

  std::string endo_label() const {
    std::string out;
    for (const auto& [s, p] : endo) out += (out.empty() ? "" : ", ") + s.name() + " -> " + to_string(p);
    return out.empty() ? "id" : out;
  }
};

inline AlgebraDescriptor parse_algebra_descriptor(std::string_view src) {
  AlgebraDescriptor d;
  bool have_carrier = false;
  for (const auto& line : detail::split_lines(src)) {
    const std::string& k = line.keyword();
    if (k == "carrier") {
      if (line.words.size() < 2 || line.words[1].first != "poly") line.fail("only 'carrier poly <vars>' is supported", 1);
      detail::DescriptorLine rest = line;
      rest.words.erase(rest.words.begin());
      d.variables = detail::parse_names(rest);
      have_carrier = true;
    } else if (k == "endo") {
      if (!have_carrier) line.fail("'endo' before 'carrier'");
      const Symbol s = detail::declared(line, 1, d.variables);
      d.endo[s] = detail::parse_poly_rhs(line);
      for (Symbol v : variables(d.endo[s])) {
        if (std::find(d.variables.begin(), d.variables.end(), v) == d.variables.end()) {
          line.fail("image mentions undeclared variable " + v.name(), 3);
        }
      }
    } else if (k == "wrap") {
      const std::string w = line.words.size() > 1 ? line.words[1].first : "";
      if (w == "none") d.wrap = Wrap::none;
      else if (w == "matrix") d.wrap = Wrap::matrix;
      else if (w == "tensor") d.wrap = Wrap::tensor;
      else line.fail("wrap must be none, matrix or tensor", 1);
    } else {
      line.fail("unknown keyword '" + k + "'");
    }
  }
  if (!have_carrier) throw ParseError("missing 'carrier' line", 1, 1);
  return d;
}

/// Generators with two-leg images, read both as free elements and as polynomial tensors.
struct CoalgebraDescriptor {
  std::vector<Symbol> generators;
  std::map<Symbol, LinComb> free_images;
  std::map<Symbol, PolyTensor> poly_images;
  std::map<Symbol, Polynomial> endo;

  std::string endo_label() const {
    std::string out;
    for (const auto& [s, p] : endo) out += (out.empty() ? "" : ", ") + s.name() + " -> " + to_string(p);
    return out.empty() ? "id" : out;
  }
};

namespace detail {

inline CoalgebraDescriptor parse_coalgebra_like(std::string_view src, const std::string& image_keyword) {
  CoalgebraDescriptor d;
  bool have_gens = false;
  for (const auto& line : split_lines(src)) {
    const std::string& k = line.keyword();
    if (k == "generators") {
      d.generators = parse_names(line);
      have_gens = true;
    } else if (k == image_keyword || k == "endo") {
      if (!have_gens) line.fail("'" + k + "' before 'generators'");
      const Symbol s = declared(line, 1, d.generators);
      if (k == "endo") {
        d.endo[s] = parse_poly_rhs(line);
        continue;
      }
      auto [expr, col] = line.rhs();
      d.free_images[s] = parse_at(line, col, [&] { return parse_lincomb(expr, line.number); });
      d.poly_images[s] = polynomial_to_tensor(parse_poly_rhs(line), line);
    } else {
      line.fail("unknown keyword '" + k + "'");
    }
  }
  if (!have_gens) throw ParseError("missing 'generators' line", 1, 1);
  for (Symbol g : d.generators) {
    if (!d.free_images.contains(g)) throw ParseError("no " + image_keyword + " given for " + g.name(), 1, 1);
  }
  return d;
}

}  // namespace detail

inline CoalgebraDescriptor parse_bialgebra_descriptor(std::string_view src) {
  return detail::parse_coalgebra_like(src, "delta");
}

inline CoalgebraDescriptor parse_comodule_descriptor(std::string_view src) {
  return detail::parse_coalgebra_like(src, "coaction");
}

inline FreeBialgebra to_free_bialgebra(const CoalgebraDescriptor& d, SaturationConfig config, Bound bound) {
  FreeBialgebra b{{std::set<Symbol>(d.generators.begin(), d.generators.end()), std::move(config), bound}, d.free_images};
  return b;
}

/// The classical polynomial bialgebra of the descriptor (endomorphism not applied).
inline PolyBialgebra to_poly_bialgebra(const CoalgebraDescriptor& d) {
  return PolyBialgebra(PolyAlgebra(d.generators), d.poly_images);
}

inline PolyComodule to_poly_comodule(const CoalgebraDescriptor& d, const PolyBialgebra& h) {
  return PolyComodule(h, PolyAlgebra(d.generators), d.poly_images);
}

inline HomLieAlgebra parse_hom_lie_descriptor(std::string_view src) {
  std::size_t dim = 0;
  std::vector<Symbol> names;
  bool multiplicative = true;
  std::vector<std::pair<const detail::DescriptorLine*, bool>> pending;
  const auto lines = detail::split_lines(src);
  for (const auto& line : lines) {
    const std::string& k = line.keyword();
    if (k == "dimension") {
      const Rational r = detail::parse_word_rational(line, 1);
      if (r.get_den() != 1 || r < 1) line.fail("dimension must be a positive integer", 1);
      dim = r.get_num().get_ui();
    } else if (k == "basis") {
      names = detail::parse_names(line);
    } else if (k == "multiplicative") {
      const std::string w = line.words.size() > 1 ? line.words[1].first : "";
      if (w != "true" && w != "false") line.fail("expected true or false", 1);
      multiplicative = w == "true";
    } else if (k == "bracket" || k == "alpha") {
      pending.emplace_back(&line, k == "bracket");
    } else {
      line.fail("unknown keyword '" + k + "'");
    }
  }
  if (dim == 0) throw ParseError("missing 'dimension' line", 1, 1);
  HomLieAlgebra l = HomLieAlgebra::standard(dim, multiplicative);
  if (!names.empty()) {
    if (names.size() != dim) throw ParseError("basis lists " + std::to_string(names.size()) + " names for dimension " + std::to_string(dim), 1, 1);
    l = HomLieAlgebra(names, multiplicative);
  }
  for (const auto& [line, is_bracket] : pending) {
    const std::size_t first = is_bracket ? 3 : 2;
    if (line->words.size() != first + dim) {
      line->fail("expected " + std::to_string(dim) + " coefficients", std::min(line->words.size(), first + dim));
    }
    LieVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = detail::parse_word_rational(*line, first + k);
    const std::size_t i = detail::parse_word_index(*line, 1, dim);
    if (is_bracket) {
      const std::size_t j = detail::parse_word_index(*line, 2, dim);
      if (i == j && !is_zero(v)) line->fail("[e_i, e_i] must vanish", 3);
      l.set_bracket(i, j, std::move(v));
    } else {
      l.set_alpha(i, std::move(v));
    }
  }
  return l;
}

inline AlgebraDescriptor load_algebra_descriptor(const std::string& path) {
  return parse_algebra_descriptor(detail::read_file(path));
}
inline CoalgebraDescriptor load_bialgebra_descriptor(const std::string& path) {
  return parse_bialgebra_descriptor(detail::read_file(path));
}
inline CoalgebraDescriptor load_comodule_descriptor(const std::string& path) {
  return parse_comodule_descriptor(detail::read_file(path));
}
inline HomLieAlgebra load_hom_lie_descriptor(const std::string& path) {
  return parse_hom_lie_descriptor(detail::read_file(path));
}

}  // namespace homalg
