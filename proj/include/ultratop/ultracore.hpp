#pragma once

// Set families over a finite carrier and the ultrafilter limit-set calculus on
// them. Every ultrafilter on a finite set is principal, so an ultrafilter is
// represented by its base set and generating point.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ultratop/errors.hpp"
#include "ultratop/point_set.hpp"

namespace ultratop::core {

struct Member {
  std::string name;
  PointSet set;

  friend bool operator==(const Member&, const Member&) = default;
};

/// A nonempty named list of subsets of a carrier.
class SetFamily {
 public:
  SetFamily(Carrier carrier, std::vector<Member> members)
      : carrier_(std::move(carrier)), members_(std::move(members)) {
    if (members_.empty()) throw DomainError("set family must have at least one member");
    for (const auto& m : members_) carrier_.require_subset(m.set, "family member '" + m.name + "'");
  }

  /// Members named m0, m1, ... in the given order.
  static SetFamily of(Carrier carrier, const std::vector<PointSet>& sets) {
    std::vector<Member> members;
    members.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) members.push_back({"m" + std::to_string(i), sets[i]});
    return SetFamily(std::move(carrier), std::move(members));
  }

  const Carrier& carrier() const noexcept { return carrier_; }
  const std::vector<Member>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// The distinct member subsets in shortlex order.
  std::vector<PointSet> sets() const {
    std::vector<PointSet> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.set);
    normalize(out);
    return out;
  }

  bool has_set(PointSet s) const {
    return std::any_of(members_.begin(), members_.end(), [s](const Member& m) { return m.set == s; });
  }

  /// Same carrier, members deduplicated and renamed into canonical order.
  SetFamily normalized() const { return of(carrier_, sets()); }

  /// True when every pair of distinct points is separated by some member.
  bool separates_points() const {
    for (std::size_t x = 0; x < carrier_.size(); ++x)
      for (std::size_t y = x + 1; y < carrier_.size(); ++y) {
        bool separated = false;
        for (const auto& m : members_)
          if (m.set.contains(x) != m.set.contains(y)) { separated = true; break; }
        if (!separated) return false;
      }
    return true;
  }

 private:
  Carrier carrier_;
  std::vector<Member> members_;
};

/// The trivial ultrafilter on `base` generated by `point`: a subset S of the
/// base belongs to it iff point ∈ S.
class PrincipalUltrafilter {
 public:
  PrincipalUltrafilter(PointSet base, std::size_t point) : base_(base), point_(point) {
    if (!base_.contains(point_))
      throw InvalidUltrafilter("ultrafilter point " + std::to_string(point_) + " is not in its base");
  }

  PointSet base() const noexcept { return base_; }
  std::size_t point() const noexcept { return point_; }

  bool contains(PointSet s) const noexcept { return s.subset_of(base_) && s.contains(point_); }
  /// Membership of the trace S ∩ base.
  bool contains_trace(PointSet s) const noexcept { return s.contains(point_); }

  friend bool operator==(const PrincipalUltrafilter&, const PrincipalUltrafilter&) = default;

 private:
  PointSet base_;
  std::size_t point_;
};

/// Points of the carrier that agree with `u` on every member of `family`:
/// x ∈ F ⟺ F ∩ Y ∈ u.
inline PointSet limit_set(PointSet y, const PrincipalUltrafilter& u, const SetFamily& family) {
  family.carrier().require_subset(y, "ultrafilter base");
  if (u.base() != y) throw InvalidUltrafilter("ultrafilter is not an ultrafilter on the given base");
  PointSet result;
  for (std::size_t x = 0; x < family.carrier().size(); ++x) {
    bool agrees = true;
    for (const auto& m : family.members()) {
      if (m.set.contains(x) != u.contains_trace(m.set & y)) { agrees = false; break; }
    }
    if (agrees) result.insert(x);
  }
  return result;
}

inline PointSet limit_set(const PrincipalUltrafilter& u, const SetFamily& family) {
  return limit_set(u.base(), u, family);
}

/// Y contains the limit set of every ultrafilter on Y. The empty set is
/// vacuously stable.
inline bool is_stable(PointSet y, const SetFamily& family) {
  family.carrier().require_subset(y, "subset");
  for (auto p : y.indices())
    if (!limit_set(y, PrincipalUltrafilter(y, p), family).subset_of(y)) return false;
  return true;
}

/// Union of the limit sets of all ultrafilters on Y: the closure of Y in the
/// family's ultrafilter topology.
inline PointSet stable_closure(PointSet y, const SetFamily& family) {
  family.carrier().require_subset(y, "subset");
  PointSet out;
  for (auto p : y.indices()) out |= limit_set(y, PrincipalUltrafilter(y, p), family);
  return out;
}

/// T must belong to U (U.point ∈ T ⊆ U.base); returns the trace ultrafilter on T.
inline PrincipalUltrafilter restrict_ultrafilter(const PrincipalUltrafilter& u, PointSet t) {
  if (!t.subset_of(u.base())) throw DomainError("restriction target is not a subset of the ultrafilter base");
  if (!t.contains(u.point())) throw InvalidUltrafilter("T not a member of U");
  return PrincipalUltrafilter(t, u.point());
}

/// Z ⊇ U.base; returns {Z' ⊆ Z : Z' ∩ base ∈ U}.
inline PrincipalUltrafilter extend_ultrafilter(const PrincipalUltrafilter& u, PointSet z) {
  if (!u.base().subset_of(z)) throw DomainError("extension target does not contain the ultrafilter base");
  return PrincipalUltrafilter(z, u.point());
}

/// The finite Boolean subalgebra generated by a family, given by its atoms.
class BoolAlgebra {
 public:
  BoolAlgebra(SetFamily generators, std::vector<PointSet> atoms)
      : generators_(std::move(generators)), atoms_(std::move(atoms)) {
    block_of_.assign(generators_.carrier().size(), 0);
    for (std::size_t b = 0; b < atoms_.size(); ++b)
      for (auto p : atoms_[b].indices()) block_of_[p] = b;
  }

  const SetFamily& generators() const noexcept { return generators_; }
  /// Blocks in order of their lowest point.
  const std::vector<PointSet>& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  PointSet atom_of(std::size_t point) const { return atoms_.at(block_of_.at(point)); }
  std::size_t block_index(std::size_t point) const { return block_of_.at(point); }

  /// The element of the algebra made of the atoms selected by `mask`.
  PointSet element(std::uint64_t mask) const {
    PointSet out;
    for (std::size_t b = 0; b < atoms_.size(); ++b)
      if ((mask >> b) & 1U) out |= atoms_[b];
    return out;
  }

  /// A set is in the algebra iff it is a union of atoms.
  bool contains(PointSet s) const {
    for (const auto& a : atoms_)
      if (a.intersects(s) && !a.subset_of(s)) return false;
    return true;
  }

  /// All 2^(atom count) elements, shortlex ordered.
  std::vector<PointSet> elements() const {
    if (atoms_.size() > 24) throw DomainError("Boolean algebra with more than 2^24 elements");
    std::vector<PointSet> out;
    out.reserve(std::size_t{1} << atoms_.size());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms_.size()); ++m) out.push_back(element(m));
    normalize(out);
    return out;
  }

 private:
  SetFamily generators_;
  std::vector<PointSet> atoms_;
  std::vector<std::size_t> block_of_;
};

/// Partition of the carrier into classes of points no member separates.
inline BoolAlgebra atoms(const SetFamily& family) {
  const auto n = family.carrier().size();
  std::vector<PointSet> blocks;
  PointSet assigned;
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned.contains(x)) continue;
    PointSet block = PointSet::singleton(x);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (assigned.contains(y)) continue;
      bool same = true;
      for (const auto& m : family.members())
        if (m.set.contains(x) != m.set.contains(y)) { same = false; break; }
      if (same) block.insert(y);
    }
    assigned |= block;
    blocks.push_back(block);
  }
  return BoolAlgebra(family, std::move(blocks));
}

/// The three derived families: intersections and unions of nonempty finite
/// subfamilies, and member complements.
struct FamilyTransforms {
  SetFamily intersections;
  SetFamily unions;
  SetFamily complements;
};

namespace detail {

/// Closes `seed` under a binary operation (finite carrier ⇒ finite closure).
template <class Op>
std::vector<PointSet> close_under(std::vector<PointSet> seed, Op op) {
  std::unordered_set<PointSet, PointSetHash> seen(seed.begin(), seed.end());
  std::vector<PointSet> all(seen.begin(), seen.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      PointSet c = op(all[i], all[j]);
      if (seen.insert(c).second) all.push_back(c);
    }
  }
  normalize(all);
  return all;
}

}  // namespace detail

inline FamilyTransforms family_transforms(const SetFamily& family) {
  const auto base = family.sets();
  auto meets = detail::close_under(base, [](PointSet a, PointSet b) { return a & b; });
  auto joins = detail::close_under(base, [](PointSet a, PointSet b) { return a | b; });
  std::vector<PointSet> comps;
  for (auto s : base) comps.push_back(family.carrier().all() - s);
  normalize(comps);
  const auto& c = family.carrier();
  return {SetFamily::of(c, meets), SetFamily::of(c, joins), SetFamily::of(c, comps)};
}

/// F ∪ {X ∖ F : F ∈ F}.
inline SetFamily with_complements(const SetFamily& family) {
  auto sets = family.sets();
  for (auto s : family.sets()) sets.push_back(family.carrier().all() - s);
  normalize(sets);
  return SetFamily::of(family.carrier(), sets);
}

/// The atoms of Bool(F), used as a generating family in their own right.
inline SetFamily atom_family(const SetFamily& family) {
  auto a = atoms(family).atoms();
  normalize(a);
  return SetFamily::of(family.carrier(), a);
}

/// Outcome of a finite-intersection-property check over any set type.
template <class Set>
struct FipVerdict {
  bool has_fip = false;
  /// Meaningful when has_fip holds: the intersection of the whole list.
  std::optional<Set> intersection;
  /// When has_fip fails: indices of a smallest subfamily with empty
  /// intersection, first in lexicographic index order among those of that size.
  std::vector<std::size_t> witness;
};

/// Finite-intersection-property check over a finite list. For a finite list
/// the property holds iff the total intersection is nonempty; otherwise the
/// minimal witness is found by breadth-first search over subfamily size.
template <class Set, class Meet, class IsEmpty>
FipVerdict<Set> fip_search(std::span<const Set> sets, Meet meet, IsEmpty is_empty) {
  if (sets.empty()) throw DomainError("finite-intersection check needs a nonempty list");
  FipVerdict<Set> v;
  Set total = sets[0];
  for (std::size_t i = 1; i < sets.size(); ++i) total = meet(total, sets[i]);
  if (!is_empty(total)) {
    v.has_fip = true;
    v.intersection = std::move(total);
    return v;
  }
  const std::size_t n = sets.size();
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Set acc = sets[idx[0]];
      for (std::size_t i = 1; i < k; ++i) acc = meet(acc, sets[idx[i]]);
      if (is_empty(acc)) {
        v.witness = idx;
        return v;
      }
      // next k-combination of {0..n-1}
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return v;  // unreachable: the full list already has empty intersection
}

inline FipVerdict<PointSet> fip_check(std::span<const PointSet> sets) {
  return fip_search<PointSet>(sets, [](PointSet a, PointSet b) { return a & b; },
                              [](PointSet s) { return s.empty(); });
}

}  // namespace ultratop::core
