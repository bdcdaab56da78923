#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_set>

namespace homalg {

namespace detail {

// Append-only intern table; node-based storage keeps element addresses stable.
inline const std::string& intern(std::string_view name) {
  static std::mutex mutex;
  static std::unordered_set<std::string> table;
  std::lock_guard lock(mutex);
  return *table.emplace(name).first;
}

}  // namespace detail

/// An interned generator name. Equality is pointer identity, ordering is
/// lexicographic on the name.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name) : name_(&detail::intern(name)) {}

  bool valid() const { return name_ != nullptr; }
  const std::string& name() const { return *name_; }

  /// The symbol with `suffix` appended, e.g. a -> a' for suffix "'".
  Symbol tagged(std::string_view suffix) const {
    return Symbol(*name_ + std::string(suffix));
  }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    if (!a.name_) return std::strong_ordering::less;
    if (!b.name_) return std::strong_ordering::greater;
    return a.name_->compare(*b.name_) <=> 0;
  }

  std::size_t hash() const { return std::hash<const void*>{}(name_); }

 private:
  const std::string* name_ = nullptr;
};

}  // namespace homalg

template <>
struct std::hash<homalg::Symbol> {
  std::size_t operator()(homalg::Symbol s) const noexcept { return s.hash(); }
};
