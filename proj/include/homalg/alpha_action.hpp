#pragma once

#include <map>
#include <memory>
#include <string>

#include "homalg/errors.hpp"
#include "homalg/lincomb.hpp"

namespace homalg {

/// How alpha acts on a free Hom-algebra built over a Hom-module.
///
/// `shift`: the free Hom-module on a basis, alpha(x_i) = x_{i+1}.
/// `linear`: the Hom-module (L, alpha) with alpha given by images of basis
/// elements; leaves then carry exponent 0 only.
class AlphaAction {
 public:
  static AlphaAction shift() { return AlphaAction(); }

  static AlphaAction linear(std::map<Symbol, LinComb> images) {
    for (const auto& [g, img] : images) {
      if (!is_zero(img.unit_coeff()) || img.max_arity() > 1 || img.max_exponent() > 0) {
        throw StructuralError("alpha image of " + g.name() + " must be a combination of generators");
      }
    }
    AlphaAction a;
    a.images_ = std::make_shared<const std::map<Symbol, LinComb>>(std::move(images));
    return a;
  }

  bool is_shift() const { return images_ == nullptr; }
  const std::map<Symbol, LinComb>& images() const { return *images_; }

  LinComb image_of(Symbol g) const {
    auto it = images_->find(g);
    if (it == images_->end()) throw AssignmentError("no alpha image for generator " + g.name());
    return it->second;
  }

  /// alpha^k of a leaf, as an element.
  LinComb apply_leaf(const Leaf& l, std::uint32_t k = 1) const {
    if (is_shift()) return make_leaf(l.gen, l.exp + k);
    LinComb v = image_power(l.gen, l.exp + k);
    return v;
  }

  LinComb apply(const LinComb& v, std::uint32_t k = 1) const {
    if (is_shift()) return alpha(v, k);
    if (k == 0) return resolve(v);
    return substitute(v, [&](const Leaf& l) { return apply_leaf(l, k); });
  }

  /// Rewrite leaves g_e with e > 0 as alpha^e(g); a no-op for `shift`.
  LinComb resolve(const LinComb& v) const {
    if (is_shift() || v.max_exponent() == 0) return v;
    return substitute(v, [&](const Leaf& l) { return image_power(l.gen, l.exp); });
  }

  /// Whether alpha(t) stays inside a window capped at `max_exponent`.
  bool fits(const NormalTerm& t, std::uint32_t max_exponent) const {
    return !is_shift() || t.max_exponent() < max_exponent;
  }

 private:
  LinComb image_power(Symbol g, std::uint32_t k) const {
    LinComb v = make_leaf(g, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      v = substitute(v, [&](const Leaf& l) { return image_of(l.gen); });
    }
    return v;
  }

  std::shared_ptr<const std::map<Symbol, LinComb>> images_;
};

}  // namespace homalg
