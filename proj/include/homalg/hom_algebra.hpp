#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "homalg/errors.hpp"
#include "homalg/polynomial.hpp"
#include "homalg/report.hpp"

namespace homalg {

enum class UnitFlavor { strict_unital, weak_unital, non_unital };

inline const char* to_string(UnitFlavor f) {
  switch (f) {
    case UnitFlavor::strict_unital: return "STRICT_UNITAL";
    case UnitFlavor::weak_unital: return "WEAK_UNITAL";
    case UnitFlavor::non_unital: return "NON_UNITAL";
  }
  return "?";
}

/// Seeded generator with a portable bounded draw (std distributions are
/// implementation-defined, which would break byte-identical reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// A concrete Hom-algebra: exact carrier with multiplication, alpha, an
/// optional distinguished unit and a sampler for law checks.
template <class A>
concept HomAlgebra = requires(const A& alg, const typename A::Element& x, Rng& rng) {
  { alg.mul(x, x) } -> std::same_as<typename A::Element>;
  { alg.alpha(x) } -> std::same_as<typename A::Element>;
  { alg.zero() } -> std::same_as<typename A::Element>;
  { alg.unit() } -> std::same_as<std::optional<typename A::Element>>;
  { alg.flavor() } -> std::same_as<UnitFlavor>;
  { alg.name() } -> std::convertible_to<std::string>;
  { alg.describe(x) } -> std::same_as<std::string>;
  { alg.sweep() } -> std::same_as<std::vector<typename A::Element>>;
  { alg.sample(rng) } -> std::same_as<typename A::Element>;
  { x == x } -> std::convertible_to<bool>;
  { x + x } -> std::convertible_to<typename A::Element>;
  { x - x } -> std::convertible_to<typename A::Element>;
  { Rational(1) * x } -> std::convertible_to<typename A::Element>;
};

/// The ground field Q as a classical algebra.
class RationalField {
 public:
  using Element = Rational;

  Element mul(const Element& x, const Element& y) const { return x * y; }
  Element alpha(const Element& x) const { return x; }
  Element zero() const { return 0; }
  std::optional<Element> unit() const { return Element(1); }
  UnitFlavor flavor() const { return UnitFlavor::strict_unital; }
  std::string name() const { return "Q"; }
  std::string describe(const Element& x) const { return to_string(x); }
  std::vector<Element> sweep() const { return {0, 1, -1, 2, Rational(1, 2)}; }
  Element sample(Rng& rng) const { return rng.uniform(-2, 2); }
};

/// Classical commutative polynomial algebra Q[vars] (alpha = identity).
class PolyAlgebra {
 public:
  using Element = Polynomial;

  explicit PolyAlgebra(std::vector<Symbol> vars, std::uint32_t sample_degree = 2)
      : vars_(std::move(vars)), sample_degree_(sample_degree) {
    monomials_.push_back(Monomial());
    std::vector<Monomial> frontier{Monomial()};
    for (std::uint32_t d = 1; d <= sample_degree_; ++d) {
      std::set<Monomial> next;
      for (const auto& m : frontier) {
        for (Symbol v : vars_) next.insert(m * Monomial::var(v));
      }
      frontier.assign(next.begin(), next.end());
      monomials_.insert(monomials_.end(), frontier.begin(), frontier.end());
    }
  }

  static PolyAlgebra over(std::initializer_list<const char*> names, std::uint32_t sample_degree = 2) {
    std::vector<Symbol> v;
    for (const char* n : names) v.emplace_back(n);
    return PolyAlgebra(std::move(v), sample_degree);
  }

  const std::vector<Symbol>& variables() const { return vars_; }
  Element var(Symbol s) const { return poly_var(s); }

  Element mul(const Element& x, const Element& y) const { return poly_mul(x, y); }
  Element alpha(const Element& x) const { return x; }
  Element zero() const { return {}; }
  std::optional<Element> unit() const { return poly_const(1); }
  UnitFlavor flavor() const { return UnitFlavor::strict_unital; }

  std::string name() const {
    std::string out = "Q[";
    for (std::size_t i = 0; i < vars_.size(); ++i) out += (i ? "," : "") + vars_[i].name();
    return out + "]";
  }
  std::string describe(const Element& x) const { return to_string(x); }

  /// Every monomial up to the sample degree, including 1.
  std::vector<Element> sweep() const {
    std::vector<Element> out;
    for (const auto& m : monomials_) out.push_back(Polynomial::basis(m));
    return out;
  }

  /// Random polynomial of degree <= sample degree with coefficients in {-2..2}.
  Element sample(Rng& rng) const {
    Element p;
    for (const auto& m : monomials_) p.add(m, rng.uniform(-2, 2));
    return p;
  }

 private:
  std::vector<Symbol> vars_;
  std::uint32_t sample_degree_;
  std::vector<Monomial> monomials_;
};

/// The algebra map on polynomials given by images of the variables.
inline std::function<Polynomial(const Polynomial&)> poly_endomorphism(std::map<Symbol, Polynomial> images) {
  return [images = std::move(images)](const Polynomial& p) { return substitute(p, images); };
}

/// A classical algebra deformed along an endomorphism phi:
/// mu_phi = phi o mu, alpha = phi.
template <HomAlgebra A>
class Twisted {
 public:
  using Element = typename A::Element;
  using Map = std::function<Element(const Element&)>;

  Twisted(A base, Map phi, bool phi_is_identity, std::string label)
      : base_(std::move(base)), phi_(std::move(phi)), identity_(phi_is_identity), label_(std::move(label)) {}

  const A& base() const { return base_; }
  const Map& phi() const { return phi_; }
  bool phi_is_identity() const { return identity_; }

  Element mul(const Element& x, const Element& y) const { return phi_(base_.mul(x, y)); }
  Element alpha(const Element& x) const { return phi_(x); }
  Element zero() const { return base_.zero(); }
  std::optional<Element> unit() const { return base_.unit(); }
  UnitFlavor flavor() const {
    if (identity_) return base_.flavor();
    return base_.unit() ? UnitFlavor::weak_unital : UnitFlavor::non_unital;
  }
  std::string name() const { return "twist(" + base_.name() + ", " + label_ + ")"; }
  std::string describe(const Element& x) const { return base_.describe(x); }
  std::vector<Element> sweep() const { return base_.sweep(); }
  Element sample(Rng& rng) const { return base_.sample(rng); }

 private:
  A base_;
  Map phi_;
  bool identity_;
  std::string label_;
};

struct SamplePlan {
  std::uint64_t seed = 1;
  /// Random tuples drawn from the sampler in addition to the sweep.
  std::size_t random_tuples = 100;
  /// Largest number of sweep tuples run exhaustively.
  std::size_t max_exhaustive = 27000;
};

namespace detail {

template <HomAlgebra A, class F>
std::size_t for_each_pair(const A& alg, const SamplePlan& plan, F&& f) {
  const auto sweep = alg.sweep();
  std::size_t n = 0;
  if (sweep.size() * sweep.size() <= plan.max_exhaustive) {
    for (const auto& x : sweep) {
      for (const auto& y : sweep) {
        f(x, y);
        ++n;
      }
    }
  }
  Rng rng(plan.seed);
  for (std::size_t i = 0; i < plan.random_tuples; ++i) {
    const auto x = alg.sample(rng);
    const auto y = alg.sample(rng);
    f(x, y);
    ++n;
  }
  return n;
}

template <HomAlgebra A, class F>
std::size_t for_each_triple(const A& alg, const SamplePlan& plan, F&& f) {
  const auto sweep = alg.sweep();
  std::size_t n = 0;
  if (sweep.size() * sweep.size() * sweep.size() <= plan.max_exhaustive) {
    for (const auto& x : sweep) {
      for (const auto& y : sweep) {
        for (const auto& z : sweep) {
          f(x, y, z);
          ++n;
        }
      }
    }
  }
  Rng rng(plan.seed);
  for (std::size_t i = 0; i < plan.random_tuples; ++i) {
    const auto x = alg.sample(rng);
    const auto y = alg.sample(rng);
    const auto z = alg.sample(rng);
    f(x, y, z);
    ++n;
  }
  return n;
}

template <HomAlgebra A>
std::string tuple_string(const A& alg, std::initializer_list<const typename A::Element*> xs) {
  std::string out = "(";
  bool first = true;
  for (const auto* x : xs) {
    out += (first ? "" : ", ") + alg.describe(*x);
    first = false;
  }
  return out + ")";
}

}  // namespace detail

/// (xy)alpha(z) == alpha(x)(yz) on the sweep and on random triples.
template <HomAlgebra A>
CheckReport check_hom_associative(const A& alg, const SamplePlan& plan = {}) {
  CheckReport r{"hom-associativity", 0, {}, plan.seed};
  r.samples_run = detail::for_each_triple(alg, plan, [&](const auto& x, const auto& y, const auto& z) {
    const auto lhs = alg.mul(alg.mul(x, y), alg.alpha(z));
    const auto rhs = alg.mul(alg.alpha(x), alg.mul(y, z));
    if (!(lhs == rhs)) {
      r.fail(detail::tuple_string(alg, {&x, &y, &z}) + ": " + alg.describe(lhs) + " != " + alg.describe(rhs));
    }
  });
  return r;
}

/// alpha(xy) == alpha(x)alpha(y).
template <HomAlgebra A>
CheckReport check_multiplicative(const A& alg, const SamplePlan& plan = {}) {
  CheckReport r{"multiplicativity", 0, {}, plan.seed};
  r.samples_run = detail::for_each_pair(alg, plan, [&](const auto& x, const auto& y) {
    const auto lhs = alg.alpha(alg.mul(x, y));
    const auto rhs = alg.mul(alg.alpha(x), alg.alpha(y));
    if (!(lhs == rhs)) {
      r.fail(detail::tuple_string(alg, {&x, &y}) + ": " + alg.describe(lhs) + " != " + alg.describe(rhs));
    }
  });
  return r;
}

/// Strict unit law mu(1, x) == x == mu(x, 1).
template <HomAlgebra A>
CheckReport check_unital(const A& alg, const SamplePlan& plan = {}) {
  CheckReport r{"strict-unitality", 0, {}, plan.seed};
  const auto one = alg.unit();
  if (!one) {
    r.fail("no distinguished unit");
    return r;
  }
  auto check = [&](const auto& x) {
    ++r.samples_run;
    const auto left = alg.mul(*one, x);
    const auto right = alg.mul(x, *one);
    if (!(left == x)) r.fail("mu(1, " + alg.describe(x) + ") = " + alg.describe(left));
    if (!(right == x)) r.fail("mu(" + alg.describe(x) + ", 1) = " + alg.describe(right));
  };
  for (const auto& x : alg.sweep()) check(x);
  Rng rng(plan.seed);
  for (std::size_t i = 0; i < plan.random_tuples; ++i) check(alg.sample(rng));
  return r;
}

/// phi is an algebra endomorphism on the sample set: additive, multiplicative, unit-preserving.
template <HomAlgebra A, class Map>
CheckReport check_endomorphism(const A& alg, const Map& phi, const SamplePlan& plan = {}) {
  CheckReport r{"algebra-endomorphism", 0, {}, plan.seed};
  if (const auto one = alg.unit(); one && !(phi(*one) == *one)) {
    r.fail("phi(1) = " + alg.describe(phi(*one)));
  }
  r.samples_run = detail::for_each_pair(alg, plan, [&](const auto& x, const auto& y) {
    if (!(phi(alg.mul(x, y)) == alg.mul(phi(x), phi(y)))) {
      r.fail("phi(xy) != phi(x)phi(y) at " + detail::tuple_string(alg, {&x, &y}));
    }
    if (!(phi(x + y) == phi(x) + phi(y))) {
      r.fail("phi(x+y) != phi(x)+phi(y) at " + detail::tuple_string(alg, {&x, &y}));
    }
  });
  return r;
}

/// Deform an associative algebra (alpha = identity) along an endomorphism.
/// The result is weakly unital when phi is not the identity, since mu_phi(1, x) = phi(x).
template <HomAlgebra A>
Twisted<A> yau_twist_algebra(const A& base, typename Twisted<A>::Map phi, std::string label,
                             const SamplePlan& plan = {}) {
  for (const auto& x : base.sweep()) {
    if (!(base.alpha(x) == x)) {
      throw PreconditionError("yau twist needs alpha = identity on " + base.name() +
                              "; alpha(" + base.describe(x) + ") = " + base.describe(base.alpha(x)));
    }
  }
  const CheckReport endo = check_endomorphism(base, phi, plan);
  if (!endo.passed()) {
    throw PreconditionError("twisting map is not an algebra endomorphism: " + endo.counterexamples.front());
  }
  bool identity = true;
  for (const auto& x : base.sweep()) identity = identity && (phi(x) == x);
  Rng rng(plan.seed);
  for (std::size_t i = 0; identity && i < plan.random_tuples; ++i) {
    const auto x = base.sample(rng);
    identity = phi(x) == x;
  }
  return Twisted<A>(base, std::move(phi), identity, std::move(label));
}

/// A 2x2 matrix, entries stored row-major.
template <class E>
struct Mat2 {
  std::array<E, 4> e{};

  E& at(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }
  const E& at(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }

  friend Mat2 operator+(Mat2 a, const Mat2& b) {
    for (std::size_t k = 0; k < 4; ++k) a.e[k] = a.e[k] + b.e[k];
    return a;
  }
  friend Mat2 operator-(Mat2 a, const Mat2& b) {
    for (std::size_t k = 0; k < 4; ++k) a.e[k] = a.e[k] - b.e[k];
    return a;
  }
  friend Mat2 operator*(const Rational& s, Mat2 a) {
    for (auto& x : a.e) x = s * x;
    return a;
  }
  friend bool operator==(const Mat2& a, const Mat2& b) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (!(a.e[k] == b.e[k])) return false;
    }
    return true;
  }
};

/// M_2(A): matrix product built from mu_A, alpha entrywise, diagonal unit.
template <HomAlgebra A>
class MatrixAlgebra {
 public:
  using Element = Mat2<typename A::Element>;

  explicit MatrixAlgebra(A base) : base_(std::move(base)) {}

  const A& base() const { return base_; }

  Element make(typename A::Element a, typename A::Element b, typename A::Element c,
               typename A::Element d) const {
    return Element{{std::move(a), std::move(b), std::move(c), std::move(d)}};
  }

  Element mul(const Element& x, const Element& y) const {
    Element out = zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        out.at(i, j) = base_.mul(x.at(i, 0), y.at(0, j)) + base_.mul(x.at(i, 1), y.at(1, j));
      }
    }
    return out;
  }
  Element alpha(const Element& x) const {
    Element out;
    for (std::size_t k = 0; k < 4; ++k) out.e[k] = base_.alpha(x.e[k]);
    return out;
  }
  Element zero() const { return make(base_.zero(), base_.zero(), base_.zero(), base_.zero()); }
  std::optional<Element> unit() const {
    const auto one = base_.unit();
    if (!one) return std::nullopt;
    return make(*one, base_.zero(), base_.zero(), *one);
  }
  UnitFlavor flavor() const { return base_.flavor(); }
  std::string name() const { return "M2(" + base_.name() + ")"; }
  std::string describe(const Element& x) const {
    return "[[" + base_.describe(x.at(0, 0)) + ", " + base_.describe(x.at(0, 1)) + "], [" +
           base_.describe(x.at(1, 0)) + ", " + base_.describe(x.at(1, 1)) + "]]";
  }

  /// Matrix units E_ij scaled by each sweep element of the base.
  std::vector<Element> sweep() const {
    std::vector<Element> out;
    for (const auto& s : base_.sweep()) {
      for (std::size_t k = 0; k < 4; ++k) {
        Element m = zero();
        m.e[k] = s;
        out.push_back(std::move(m));
      }
    }
    return out;
  }
  Element sample(Rng& rng) const {
    Element m;
    for (auto& x : m.e) x = base_.sample(rng);
    return m;
  }

 private:
  A base_;
};

template <class K1, class K2>
using TensorElement = Sparse<std::pair<K1, K2>>;

/// x (x) y for sparse vectors.
template <class K1, class K2>
TensorElement<K1, K2> tensor(const Sparse<K1>& x, const Sparse<K2>& y) {
  TensorElement<K1, K2> out;
  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) out.add({k1, k2}, c1 * c2);
  }
  return out;
}

/// (f (x) g)(t), extended linearly from basis pairs.
template <class K1, class K2, class F, class G>
auto map_tensor(const TensorElement<K1, K2>& t, F&& f, G&& g) {
  using R1 = std::decay_t<decltype(f(Sparse<K1>::basis(std::declval<K1>())))>;
  using R2 = std::decay_t<decltype(g(Sparse<K2>::basis(std::declval<K2>())))>;
  TensorElement<typename R1::key_type, typename R2::key_type> out;
  for (const auto& [k, c] : t.terms()) {
    auto piece = tensor(f(Sparse<K1>::basis(k.first)), g(Sparse<K2>::basis(k.second)));
    piece *= c;
    out += piece;
  }
  return out;
}

/// The flip m (x) n -> n (x) m.
template <class K1, class K2>
TensorElement<K2, K1> flip(const TensorElement<K1, K2>& t) {
  TensorElement<K2, K1> out;
  for (const auto& [k, c] : t.terms()) out.add({k.second, k.first}, c);
  return out;
}

/// ((a, b), c) -> (a, (b, c)) on basis keys.
template <class K1, class K2, class K3>
TensorElement<K1, std::pair<K2, K3>> reassociate(const TensorElement<std::pair<K1, K2>, K3>& t) {
  TensorElement<K1, std::pair<K2, K3>> out;
  for (const auto& [k, c] : t.terms()) out.add({k.first.first, {k.first.second, k.second}}, c);
  return out;
}

/// A (x) B with mu((a (x) b), (a' (x) b')) = mu_A(a, a') (x) mu_B(b, b') and
/// alpha = alpha_A (x) alpha_B. Both carriers must have sparse-vector elements.
template <HomAlgebra A, HomAlgebra B>
class TensorAlgebra {
 public:
  using KeyA = typename A::Element::key_type;
  using KeyB = typename B::Element::key_type;
  using Element = TensorElement<KeyA, KeyB>;

  TensorAlgebra(A left, B right) : left_(std::move(left)), right_(std::move(right)) {}

  const A& left() const { return left_; }
  const B& right() const { return right_; }

  Element mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [kx, cx] : x.terms()) {
      for (const auto& [ky, cy] : y.terms()) {
        auto piece = tensor(left_.mul(basis_a(kx.first), basis_a(ky.first)),
                            right_.mul(basis_b(kx.second), basis_b(ky.second)));
        piece *= cx * cy;
        out += piece;
      }
    }
    return out;
  }
  Element alpha(const Element& x) const {
    return map_tensor(x, [&](const auto& a) { return left_.alpha(a); },
                      [&](const auto& b) { return right_.alpha(b); });
  }
  Element zero() const { return {}; }
  std::optional<Element> unit() const {
    const auto ua = left_.unit();
    const auto ub = right_.unit();
    if (!ua || !ub) return std::nullopt;
    return tensor(*ua, *ub);
  }
  UnitFlavor flavor() const {
    if (!left_.unit() || !right_.unit()) return UnitFlavor::non_unital;
    if (left_.flavor() == UnitFlavor::strict_unital && right_.flavor() == UnitFlavor::strict_unital) {
      return UnitFlavor::strict_unital;
    }
    return UnitFlavor::weak_unital;
  }
  std::string name() const { return left_.name() + " (x) " + right_.name(); }
  std::string describe(const Element& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : x.terms()) {
      if (!out.empty()) out += " + ";
      if (c != 1) out += to_string(c) + "*";
      out += "(" + left_.describe(basis_a(k.first)) + " (x) " + right_.describe(basis_b(k.second)) + ")";
    }
    return out;
  }
  std::vector<Element> sweep() const {
    std::vector<Element> out;
    for (const auto& a : left_.sweep()) {
      for (const auto& b : right_.sweep()) out.push_back(tensor(a, b));
    }
    return out;
  }
  Element sample(Rng& rng) const {
    Element x = tensor(left_.sample(rng), right_.sample(rng));
    x += tensor(left_.sample(rng), right_.sample(rng));
    return x;
  }

 private:
  static typename A::Element basis_a(const KeyA& k) { return A::Element::basis(k); }
  static typename B::Element basis_b(const KeyB& k) { return B::Element::basis(k); }

  A left_;
  B right_;
};

}  // namespace homalg
