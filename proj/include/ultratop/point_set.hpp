#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ultratop/errors.hpp"

namespace ultratop {

/// Hard cap on the number of points of any finite carrier (one machine word).
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of {0, ..., 63}, stored as a bitmask. Points are indices into
/// whatever ordered collection the set lives over (a Carrier, the elements
/// of a FiniteRing, ...).
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}
  PointSet(std::initializer_list<std::size_t> points) {
    for (auto p : points) insert(p);
  }

  /// {0, ..., n-1}.
  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr PointSet singleton(std::size_t p) { return PointSet(std::uint64_t{1} << p); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t p) const noexcept { return p < 64 && ((bits_ >> p) & 1U) != 0; }
  constexpr void insert(std::size_t p) noexcept { bits_ |= std::uint64_t{1} << p; }
  constexpr void erase(std::size_t p) noexcept { bits_ &= ~(std::uint64_t{1} << p); }
  constexpr bool subset_of(PointSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  /// Lowest member; the set must be nonempty.
  constexpr std::size_t first() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  constexpr PointSet operator|(PointSet o) const noexcept { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const noexcept { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const noexcept { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet operator^(PointSet o) const noexcept { return PointSet(bits_ ^ o.bits_); }
  constexpr PointSet& operator|=(PointSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr PointSet& operator-=(PointSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(PointSet, PointSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order for sets over a sorted carrier: by cardinality, then by
/// the lexicographic order of the sorted index lists.
inline bool shortlex_less(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // The lowest index where exactly one of them has a member decides: the set
  // holding it has the smaller entry at the first differing list position.
  const PointSet diff = a ^ b;
  return a.contains(diff.first());
}

inline void normalize(std::vector<PointSet>& sets) {
  std::sort(sets.begin(), sets.end(), shortlex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

struct PointSetHash {
  std::size_t operator()(PointSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// The ambient finite set. Labels are kept sorted and distinct so that point
/// indices, and therefore every derived output, are deterministic.
class Carrier {
 public:
  Carrier() = default;

  explicit Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw DomainError("carrier must have at least one point");
    if (labels_.size() > kMaxPoints)
      throw DomainError("carrier has " + std::to_string(labels_.size()) + " points; the cap is " +
                        std::to_string(kMaxPoints));
    std::sort(labels_.begin(), labels_.end());
    auto dup = std::adjacent_find(labels_.begin(), labels_.end());
    if (dup != labels_.end()) throw DomainError("duplicate carrier label '" + *dup + "'");
  }
  Carrier(std::initializer_list<std::string> labels) : Carrier(std::vector<std::string>(labels)) {}

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  PointSet all() const noexcept { return PointSet::full(labels_.size()); }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::size_t index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw DomainError("label '" + std::string(label) + "' is not a point of the carrier");
  }

  PointSet subset(const std::vector<std::string>& labels) const {
    PointSet s;
    for (const auto& l : labels) s.insert(index_of(l));
    return s;
  }

  std::vector<std::string> labels_of(PointSet s) const {
    std::vector<std::string> out;
    for (auto i : s.indices()) out.push_back(labels_.at(i));
    return out;
  }

  bool contains(PointSet s) const noexcept { return s.subset_of(all()); }

  void require_subset(PointSet s, std::string_view what) const {
    if (!contains(s)) throw DomainError(std::string(what) + " is not a subset of the carrier");
  }

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Iterates over every subset of `universe` (including the empty set and
/// `universe` itself), in increasing bitmask order.
template <class F>
void for_each_subset(PointSet universe, F&& f) {
  const std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  while (true) {
    f(PointSet(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

}  // namespace ultratop
