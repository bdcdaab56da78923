#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "homalg/errors.hpp"
#include "homalg/symbol.hpp"

namespace homalg {

/// A generator carrying an alpha-exponent: the variable x_i with alpha(x_i) = x_{i+1}.
struct Leaf {
  Symbol gen;
  std::uint32_t exp = 0;

  friend bool operator==(const Leaf&, const Leaf&) = default;
  friend std::strong_ordering operator<=>(const Leaf&, const Leaf&) = default;
};

/// A planar binary product tree whose leaves carry alpha-exponents.
///
/// Stored as a flat preorder sequence; an invalid symbol marks a product node.
/// No alpha nodes occur: alpha has been pushed to the leaves.
class NormalTerm {
 public:
  struct Node {
    Symbol gen;
    std::uint32_t exp = 0;

    bool is_product() const { return !gen.valid(); }
    friend bool operator==(const Node&, const Node&) = default;
  };

  static NormalTerm leaf(Symbol gen, std::uint32_t exp = 0) {
    NormalTerm t;
    t.nodes_.push_back({gen, exp});
    return t;
  }

  static NormalTerm product(const NormalTerm& lhs, const NormalTerm& rhs) {
    NormalTerm t;
    t.nodes_.reserve(1 + lhs.nodes_.size() + rhs.nodes_.size());
    t.nodes_.push_back({});
    t.nodes_.insert(t.nodes_.end(), lhs.nodes_.begin(), lhs.nodes_.end());
    t.nodes_.insert(t.nodes_.end(), rhs.nodes_.begin(), rhs.nodes_.end());
    return t;
  }

  std::span<const Node> nodes() const { return nodes_; }
  std::size_t arity() const { return (nodes_.size() + 1) / 2; }
  bool is_leaf() const { return nodes_.size() == 1; }

  Leaf as_leaf() const { return {nodes_.front().gen, nodes_.front().exp}; }

  std::uint64_t weight() const {
    std::uint64_t w = 0;
    for (const auto& n : nodes_) w += n.exp;
    return w;
  }

  std::uint32_t max_exponent() const {
    std::uint32_t m = 0;
    for (const auto& n : nodes_) m = std::max(m, n.exp);
    return m;
  }

  /// Left and right factors of a product term.
  std::pair<NormalTerm, NormalTerm> split() const {
    if (is_leaf()) throw StructuralError("split() on a leaf");
    const std::size_t mid = subtree_end(1);
    NormalTerm l, r;
    l.nodes_.assign(nodes_.begin() + 1, nodes_.begin() + static_cast<std::ptrdiff_t>(mid));
    r.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(mid), nodes_.end());
    return {std::move(l), std::move(r)};
  }

  /// alpha^k applied to the term (every leaf exponent raised by k).
  NormalTerm shifted(std::uint32_t k) const {
    NormalTerm t = *this;
    for (auto& n : t.nodes_) {
      if (!n.is_product()) n.exp += k;
    }
    return t;
  }

  std::vector<Leaf> leaves() const {
    std::vector<Leaf> out;
    out.reserve(arity());
    for (const auto& n : nodes_) {
      if (!n.is_product()) out.push_back({n.gen, n.exp});
    }
    return out;
  }

  /// Depth of every leaf, left to right. Determines the tree shape.
  std::vector<std::uint32_t> leaf_depths() const {
    std::vector<std::uint32_t> out;
    out.reserve(arity());
    std::vector<std::uint32_t> stack{0};
    for (const auto& n : nodes_) {
      const std::uint32_t d = stack.back();
      stack.pop_back();
      if (n.is_product()) {
        stack.push_back(d + 1);
        stack.push_back(d + 1);
      } else {
        out.push_back(d);
      }
    }
    return out;
  }

  template <class F>
  NormalTerm map_leaves(F&& f) const {
    NormalTerm t = *this;
    for (auto& n : t.nodes_) {
      if (!n.is_product()) {
        Leaf l = f(Leaf{n.gen, n.exp});
        n.gen = l.gen;
        n.exp = l.exp;
      }
    }
    return t;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& n : nodes_) {
      h ^= n.gen.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= n.exp + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend bool operator==(const NormalTerm& a, const NormalTerm& b) { return a.nodes_ == b.nodes_; }

  /// Canonical order: arity, then leaf-depth sequence, then leaf sequence.
  friend std::strong_ordering operator<=>(const NormalTerm& a, const NormalTerm& b) {
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    if (a.nodes_ == b.nodes_) return std::strong_ordering::equal;
    const auto da = a.leaf_depths();
    const auto db = b.leaf_depths();
    if (auto c = std::lexicographical_compare_three_way(da.begin(), da.end(), db.begin(), db.end());
        c != 0) {
      return c;
    }
    const auto la = a.leaves();
    const auto lb = b.leaves();
    return std::lexicographical_compare_three_way(la.begin(), la.end(), lb.begin(), lb.end());
  }

 private:
  NormalTerm() = default;

  std::size_t subtree_end(std::size_t begin) const {
    std::size_t need = 1;
    std::size_t i = begin;
    while (need > 0) {
      need += nodes_[i].is_product() ? 1 : 0;
      need -= nodes_[i].is_product() ? 0 : 1;
      ++i;
    }
    return i;
  }

  std::vector<Node> nodes_;
};

/// Pre-normalization tree: product nodes, alpha nodes of weight >= 1, leaves.
class RawTerm {
 public:
  enum class Kind { leaf, product, alpha };

  static RawTerm leaf(Symbol gen, std::uint32_t exp = 0) {
    RawTerm t(Kind::leaf);
    t.leaf_ = {gen, exp};
    return t;
  }
  static RawTerm product(RawTerm lhs, RawTerm rhs) {
    RawTerm t(Kind::product);
    t.lhs_ = std::make_shared<const RawTerm>(std::move(lhs));
    t.rhs_ = std::make_shared<const RawTerm>(std::move(rhs));
    return t;
  }
  static RawTerm alpha(std::uint32_t weight, RawTerm child) {
    if (weight == 0) throw StructuralError("alpha node of weight 0");
    RawTerm t(Kind::alpha);
    t.weight_ = weight;
    t.lhs_ = std::make_shared<const RawTerm>(std::move(child));
    return t;
  }
  static RawTerm embed(const NormalTerm& n) {
    if (n.is_leaf()) {
      const Leaf l = n.as_leaf();
      return leaf(l.gen, l.exp);
    }
    auto [l, r] = n.split();
    return product(embed(l), embed(r));
  }

  Kind kind() const { return kind_; }
  const Leaf& as_leaf() const { return leaf_; }
  std::uint32_t weight() const { return weight_; }
  const RawTerm* left() const { return lhs_.get(); }
  const RawTerm* right() const { return rhs_.get(); }
  const RawTerm* child() const { return lhs_.get(); }

 private:
  explicit RawTerm(Kind k) : kind_(k) {}

  Kind kind_;
  Leaf leaf_{};
  std::uint32_t weight_ = 0;
  std::shared_ptr<const RawTerm> lhs_, rhs_;
};

namespace detail {

inline NormalTerm normalize_shifted(const RawTerm& t, std::uint32_t shift) {
  switch (t.kind()) {
    case RawTerm::Kind::leaf: {
      if (!t.as_leaf().gen.valid()) throw StructuralError("leaf without a generator");
      return NormalTerm::leaf(t.as_leaf().gen, t.as_leaf().exp + shift);
    }
    case RawTerm::Kind::product:
      if (!t.left() || !t.right()) throw StructuralError("product node with a missing factor");
      return NormalTerm::product(normalize_shifted(*t.left(), shift),
                                 normalize_shifted(*t.right(), shift));
    case RawTerm::Kind::alpha:
      if (t.weight() == 0) throw StructuralError("alpha node of weight 0");
      if (!t.child()) throw StructuralError("alpha node without an argument");
      return normalize_shifted(*t.child(), shift + t.weight());
  }
  throw StructuralError("unknown node kind");
}

}  // namespace detail

/// Push every alpha weight down to the leaf exponents:
/// alpha(u*v) -> alpha(u)*alpha(v), alpha(x_i) -> x_{i+1}.
inline NormalTerm normalize_term(const RawTerm& t) { return detail::normalize_shifted(t, 0); }

}  // namespace homalg

template <>
struct std::hash<homalg::NormalTerm> {
  std::size_t operator()(const homalg::NormalTerm& t) const noexcept { return t.hash(); }
};
