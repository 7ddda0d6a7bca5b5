#pragma once

// Finite topological spaces, described by their closed sets.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ultratop/errors.hpp"
#include "ultratop/point_set.hpp"
#include "ultratop/ultracore.hpp"

namespace ultratop::fintop {

/// Upper bound on the number of closed sets any constructor will enumerate.
inline constexpr std::size_t kMaxClosedSets = std::size_t{1} << 20;

class FinSpace {
 public:
  /// Validates that the closed sets contain ∅ and the carrier and are closed
  /// under pairwise union and intersection.
  FinSpace(Carrier carrier, std::vector<PointSet> closed) : carrier_(std::move(carrier)), closed_(std::move(closed)) {
    normalize(closed_);
    for (auto c : closed_) carrier_.require_subset(c, "closed set");
    std::unordered_set<PointSet, PointSetHash> lookup(closed_.begin(), closed_.end());
    if (!lookup.contains(PointSet{})) throw DomainError("the empty set is not closed");
    if (!lookup.contains(carrier_.all())) throw DomainError("the carrier is not closed");
    for (std::size_t i = 0; i < closed_.size(); ++i)
      for (std::size_t j = i + 1; j < closed_.size(); ++j) {
        if (!lookup.contains(closed_[i] | closed_[j]))
          throw DomainError("closed sets are not closed under union");
        if (!lookup.contains(closed_[i] & closed_[j]))
          throw DomainError("closed sets are not closed under intersection");
      }
    point_closure_.reserve(carrier_.size());
    for (std::size_t x = 0; x < carrier_.size(); ++x) point_closure_.push_back(closure(PointSet::singleton(x)));
  }

  /// Partition topology: closed sets are the unions of blocks.
  static FinSpace from_partition(Carrier carrier, const std::vector<PointSet>& blocks) {
    if (blocks.size() > 20) throw DomainError("partition topology with more than 2^20 closed sets");
    std::vector<PointSet> closed;
    closed.reserve(std::size_t{1} << blocks.size());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << blocks.size()); ++m) {
      PointSet s;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if ((m >> b) & 1U) s |= blocks[b];
      closed.push_back(s);
    }
    return FinSpace(std::move(carrier), std::move(closed));
  }

  static FinSpace discrete(Carrier carrier) {
    std::vector<PointSet> blocks;
    for (std::size_t x = 0; x < carrier.size(); ++x) blocks.push_back(PointSet::singleton(x));
    return from_partition(std::move(carrier), blocks);
  }

  static FinSpace chaotic(Carrier carrier) {
    auto all = carrier.all();
    return FinSpace(std::move(carrier), {PointSet{}, all});
  }

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  /// Shortlex ordered.
  const std::vector<PointSet>& closed_sets() const noexcept { return closed_; }

  std::vector<PointSet> open_sets() const {
    std::vector<PointSet> out;
    out.reserve(closed_.size());
    for (auto c : closed_) out.push_back(carrier_.all() - c);
    normalize(out);
    return out;
  }

  bool is_closed(PointSet s) const { return std::binary_search(closed_.begin(), closed_.end(), s, shortlex_less); }
  bool is_open(PointSet s) const { return is_closed(carrier_.all() - s); }
  bool is_clopen(PointSet s) const { return is_closed(s) && is_open(s); }

  /// Smallest closed superset.
  PointSet closure(PointSet s) const {
    carrier_.require_subset(s, "subset");
    PointSet out = carrier_.all();
    for (auto c : closed_)
      if (s.subset_of(c)) out &= c;
    return out;
  }

  PointSet point_closure(std::size_t x) const { return point_closure_.at(x); }

  /// Smallest open set containing x.
  PointSet minimal_open(std::size_t x) const {
    PointSet out;
    for (std::size_t y = 0; y < size(); ++y)
      if (point_closure_[y].contains(x)) out.insert(y);
    return out;
  }

  /// Every closed set of `coarser` is closed here.
  bool refines(const FinSpace& coarser) const {
    return std::all_of(coarser.closed_.begin(), coarser.closed_.end(), [this](PointSet c) { return is_closed(c); });
  }

  bool is_discrete() const {
    for (std::size_t x = 0; x < size(); ++x)
      if (!is_open(PointSet::singleton(x))) return false;
    return true;
  }

  friend bool operator==(const FinSpace& a, const FinSpace& b) {
    return a.carrier_ == b.carrier_ && a.closed_ == b.closed_;
  }

 private:
  Carrier carrier_;
  std::vector<PointSet> closed_;
  std::vector<PointSet> point_closure_;
};

/// Partial order on a carrier, stored as the down-set of every point.
class Poset {
 public:
  /// `below[x]` = {y : y ≤ x}. Validates reflexivity, antisymmetry and
  /// transitivity.
  Poset(Carrier carrier, std::vector<PointSet> below) : carrier_(std::move(carrier)), below_(std::move(below)) {
    const auto n = carrier_.size();
    if (below_.size() != n) throw DomainError("order relation does not cover every point");
    for (std::size_t x = 0; x < n; ++x) {
      carrier_.require_subset(below_[x], "down-set of '" + carrier_.label(x) + "'");
      if (!below_[x].contains(x)) throw DomainError("order is not reflexive at '" + carrier_.label(x) + "'");
      for (auto y : below_[x].indices()) {
        if (y != x && below_[y].contains(x))
          throw DomainError("order is not antisymmetric: '" + carrier_.label(x) + "' and '" + carrier_.label(y) + "'");
        if (!below_[y].subset_of(below_[x]))
          throw DomainError("order is not transitive through '" + carrier_.label(y) + "'");
      }
    }
  }

  static Poset from_pairs(Carrier carrier, const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
    std::vector<PointSet> below(carrier.size());
    for (std::size_t x = 0; x < carrier.size(); ++x) below[x].insert(x);
    for (auto [lo, hi] : leq) {
      if (lo >= carrier.size() || hi >= carrier.size()) throw DomainError("order pair outside the carrier");
      below[hi].insert(lo);
    }
    return Poset(std::move(carrier), std::move(below));
  }

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool leq(std::size_t y, std::size_t x) const { return below_.at(x).contains(y); }
  PointSet down_set(std::size_t x) const { return below_.at(x); }
  PointSet up_set(std::size_t x) const {
    PointSet out;
    for (std::size_t y = 0; y < size(); ++y)
      if (below_[y].contains(x)) out.insert(y);
    return out;
  }

  /// Pairs (lower, upper) where upper covers lower, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (auto y : (below_[x] - PointSet::singleton(x)).indices()) {
        bool cover = true;
        for (auto z : (below_[x] - PointSet::singleton(x) - PointSet::singleton(y)).indices())
          if (below_[z].contains(y)) { cover = false; break; }
        if (cover) out.emplace_back(y, x);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  PointSet maximal_elements() const {
    PointSet out;
    for (std::size_t x = 0; x < size(); ++x)
      if (up_set(x) == PointSet::singleton(x)) out.insert(x);
    return out;
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Carrier carrier_;
  std::vector<PointSet> below_;
};

namespace detail {

/// All unions of the given generators (including the empty union).
inline std::vector<PointSet> all_unions(const std::vector<PointSet>& generators) {
  std::unordered_set<PointSet, PointSetHash> seen{PointSet{}};
  std::vector<PointSet> out{PointSet{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto g : generators) {
      PointSet u = out[i] | g;
      if (seen.insert(u).second) {
        if (out.size() >= kMaxClosedSets) throw DomainError("topology has more than 2^20 open sets");
        out.push_back(u);
      }
    }
  }
  return out;
}

inline std::vector<PointSet> complements(const Carrier& c, const std::vector<PointSet>& sets) {
  std::vector<PointSet> out;
  out.reserve(sets.size());
  for (auto s : sets) out.push_back(c.all() - s);
  return out;
}

}  // namespace detail

/// Opens are the unions of finite intersections of subbasis members (the
/// empty intersection being the carrier).
inline FinSpace from_subbasis(const core::SetFamily& subbasis) {
  const auto& c = subbasis.carrier();
  std::vector<PointSet> minimal;
  for (std::size_t x = 0; x < c.size(); ++x) {
    PointSet m = c.all();
    for (const auto& mem : subbasis.members())
      if (mem.set.contains(x)) m &= mem.set;
    minimal.push_back(m);
  }
  auto opens = detail::all_unions(minimal);
  return FinSpace(c, detail::complements(c, opens));
}

inline FinSpace from_subbasis(const Carrier& carrier, const std::vector<PointSet>& subbasis) {
  if (subbasis.empty()) return FinSpace::chaotic(carrier);
  return from_subbasis(core::SetFamily::of(carrier, subbasis));
}

/// Closed sets are the F-stable subsets, i.e. the unions of atoms of Bool(F).
inline FinSpace ultra_topology(const core::SetFamily& family) {
  return FinSpace::from_partition(family.carrier(), core::atoms(family).atoms());
}

/// First pair of topologically indistinguishable points, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> indistinguishable_pair(const FinSpace& space) {
  for (std::size_t x = 0; x < space.size(); ++x)
    for (std::size_t y = x + 1; y < space.size(); ++y)
      if (space.point_closure(x) == space.point_closure(y)) return std::pair{x, y};
  return std::nullopt;
}

inline bool is_t0(const FinSpace& space) { return !indistinguishable_pair(space).has_value(); }

/// Classes of points with equal closures.
inline std::vector<PointSet> indistinguishability_classes(const FinSpace& space) {
  std::vector<PointSet> blocks;
  PointSet done;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (done.contains(x)) continue;
    PointSet b;
    for (std::size_t y = x; y < space.size(); ++y)
      if (space.point_closure(y) == space.point_closure(x)) b.insert(y);
    done |= b;
    blocks.push_back(b);
  }
  return blocks;
}

/// y ≤ x iff y ∈ cl({x}). Throws NotT0Error when the order would not be
/// antisymmetric.
inline Poset specialization_order(const FinSpace& space) {
  if (auto pair = indistinguishable_pair(space))
    throw NotT0Error(space.carrier().label(pair->first), space.carrier().label(pair->second));
  std::vector<PointSet> below;
  for (std::size_t x = 0; x < space.size(); ++x) below.push_back(space.point_closure(x));
  return Poset(space.carrier(), std::move(below));
}

/// Closed sets are the down-sets, so cl({x}) = ↓x and generic points are maxima.
inline FinSpace poset_to_space(const Poset& p) {
  std::vector<PointSet> principal;
  for (std::size_t x = 0; x < p.size(); ++x) principal.push_back(p.down_set(x));
  return FinSpace(p.carrier(), detail::all_unions(principal));
}

inline Poset space_to_poset(const FinSpace& space) { return specialization_order(space); }

/// Each check of the finite spectral-space characterization.
struct SpectralReport {
  bool t0 = false;
  std::optional<std::pair<std::string, std::string>> indistinguishable;
  bool quasi_compact = true;
  bool sober = false;
  /// Minimal open neighborhoods form a basis of compact opens whose pairwise
  /// intersections are again unions of basis members.
  bool compact_open_basis = false;
  /// Every ultrafilter on the carrier has a nonempty limit set w.r.t. the
  /// basis of minimal open neighborhoods.
  bool ultrafilter_criterion = false;
  bool spectral = false;
};

/// Irreducible closed sets: nonempty and not the union of two proper closed
/// subsets. A reducible set splits into two maximal proper closed subsets, so
/// only those pairs are tried.
inline std::vector<PointSet> irreducible_closed_sets(const FinSpace& space) {
  std::vector<PointSet> out;
  const auto& closed = space.closed_sets();
  for (auto c : closed) {
    if (c.empty()) continue;
    std::vector<PointSet> proper;
    for (auto a : closed)
      if (a != c && a.subset_of(c)) proper.push_back(a);
    std::vector<PointSet> maximal;
    for (auto a : proper) {
      bool dominated = false;
      for (auto b : proper)
        if (b != a && a.subset_of(b)) { dominated = true; break; }
      if (!dominated) maximal.push_back(a);
    }
    bool reducible = false;
    for (std::size_t i = 0; i < maximal.size() && !reducible; ++i)
      for (std::size_t j = i + 1; j < maximal.size(); ++j)
        if ((maximal[i] | maximal[j]) == c) { reducible = true; break; }
    if (!reducible) out.push_back(c);
  }
  return out;
}

inline core::SetFamily minimal_open_basis(const FinSpace& space) {
  std::vector<PointSet> basis;
  for (std::size_t x = 0; x < space.size(); ++x) basis.push_back(space.minimal_open(x));
  normalize(basis);
  return core::SetFamily::of(space.carrier(), basis);
}

/// Checks T0, sobriety, quasi-compactness and the compact-open basis, and the
/// ultrafilter criterion. On a finite space the verdict coincides with T0;
/// the two routes are cross-checked.
inline SpectralReport is_spectral(const FinSpace& space) {
  SpectralReport r;
  if (auto pair = indistinguishable_pair(space)) {
    r.indistinguishable = std::pair{space.carrier().label(pair->first), space.carrier().label(pair->second)};
  }
  r.t0 = !r.indistinguishable.has_value();

  r.sober = true;
  for (auto c : irreducible_closed_sets(space)) {
    std::size_t generic = 0;
    for (auto x : c.indices())
      if (space.point_closure(x) == c) ++generic;
    if (generic != 1) { r.sober = false; break; }
  }

  // Finite spaces: every open set is quasi-compact, so any basis consists of
  // compact opens. Check the minimal neighborhoods really form a ∩-closed basis.
  const auto basis = minimal_open_basis(space);
  auto is_union_of_basis = [&](PointSet s) {
    PointSet cover;
    for (const auto& b : basis.members())
      if (b.set.subset_of(s)) cover |= b.set;
    return cover == s;
  };
  r.compact_open_basis = true;
  for (auto o : space.open_sets())
    if (!is_union_of_basis(o)) { r.compact_open_basis = false; break; }
  for (const auto& a : basis.members())
    for (const auto& b : basis.members())
      if (!space.is_open(a.set & b.set) || !is_union_of_basis(a.set & b.set)) r.compact_open_basis = false;

  r.ultrafilter_criterion = true;
  const auto all = space.carrier().all();
  for (std::size_t x = 0; x < space.size(); ++x)
    if (core::limit_set(all, core::PrincipalUltrafilter(all, x), basis).empty()) r.ultrafilter_criterion = false;

  r.spectral = r.t0 && r.sober && r.quasi_compact && r.compact_open_basis;
  const bool criterion_route = r.t0 && r.ultrafilter_criterion;
  if (r.spectral != r.t0 || criterion_route != r.spectral)
    throw std::logic_error("finite spectral-space characterizations disagree");
  return r;
}

/// Generated by the compact opens (here: all opens) and their complements.
inline FinSpace patch_topology(const FinSpace& space) {
  auto subbasis = space.open_sets();
  for (auto c : space.closed_sets()) subbasis.push_back(c);
  normalize(subbasis);
  return from_subbasis(space.carrier(), subbasis);
}

/// Generizations of Y: {x : cl({x}) ∩ Y ≠ ∅}.
inline PointSet generic_closure(const FinSpace& space, PointSet y) {
  space.carrier().require_subset(y, "subset");
  PointSet out;
  for (std::size_t x = 0; x < space.size(); ++x)
    if (space.point_closure(x).intersects(y)) out.insert(x);
  return out;
}

/// A total map between carriers, by point index.
struct PointMap {
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t x) const { return image.at(x); }

  PointSet preimage(PointSet s) const {
    PointSet out;
    for (std::size_t x = 0; x < image.size(); ++x)
      if (s.contains(image[x])) out.insert(x);
    return out;
  }

  void require_total(const Carrier& dom, const Carrier& cod) const {
    if (image.size() != dom.size()) throw DomainError("point map is not total on the domain");
    for (auto y : image)
      if (y >= cod.size()) throw DomainError("point map leaves the codomain");
  }
};

/// Preimages of closed sets are closed.
inline bool is_continuous(const PointMap& f, const FinSpace& dom, const FinSpace& cod) {
  f.require_total(dom.carrier(), cod.carrier());
  return std::all_of(cod.closed_sets().begin(), cod.closed_sets().end(),
                     [&](PointSet c) { return dom.is_closed(f.preimage(c)); });
}

struct TransportReport {
  /// {f⁻¹(G) : G ∈ 𝒢} ⊆ ℱ.
  bool hypothesis = false;
  /// Continuity between the two ultrafilter topologies.
  bool ultra_continuous = false;
};

inline TransportReport ultra_transport(const PointMap& f, const core::SetFamily& dom_family,
                                       const core::SetFamily& cod_family) {
  f.require_total(dom_family.carrier(), cod_family.carrier());
  TransportReport r;
  r.hypothesis = std::all_of(cod_family.members().begin(), cod_family.members().end(),
                             [&](const core::Member& g) { return dom_family.has_set(f.preimage(g.set)); });
  r.ultra_continuous = is_continuous(f, ultra_topology(dom_family), ultra_topology(cod_family));
  if (r.hypothesis && !r.ultra_continuous)
    throw std::logic_error("preimage hypothesis holds but the map is not ultra-continuous");
  return r;
}

}  // namespace ultratop::fintop
