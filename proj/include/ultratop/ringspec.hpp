#pragma once

// Finite commutative unital rings given by operation tables, their prime
// spectra, and the space of intermediate rings of an extension.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ultratop/errors.hpp"
#include "ultratop/fintop.hpp"
#include "ultratop/point_set.hpp"
#include "ultratop/ultracore.hpp"

namespace ultratop::ring {

using Table = std::vector<std::vector<std::size_t>>;

/// Size cap for rings given by arbitrary tables.
inline constexpr std::size_t kMaxTableRing = 32;
/// Size cap for zmod and product.
inline constexpr std::size_t kMaxBuiltRing = 64;

class FiniteRing {
 public:
  /// Validates every commutative-ring axiom exhaustively.
  static FiniteRing from_tables(std::vector<std::string> labels, Table add, Table mul, std::size_t zero, std::size_t one,
                                std::size_t cap = kMaxTableRing) {
    if (labels.size() > cap)
      throw DomainError("ring has " + std::to_string(labels.size()) + " elements; the cap is " + std::to_string(cap));
    FiniteRing r(std::move(labels), std::move(add), std::move(mul), zero, one);
    r.validate();
    return r;
  }

  static FiniteRing zmod(std::size_t n) {
    if (n < 2) throw DomainError("zmod needs n >= 2");
    if (n > kMaxBuiltRing) throw DomainError("zmod(" + std::to_string(n) + ") exceeds the 64-element cap");
    std::vector<std::string> labels;
    Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        add[a][b] = (a + b) % n;
        mul[a][b] = (a * b) % n;
      }
    }
    return FiniteRing(std::move(labels), std::move(add), std::move(mul), 0, 1);
  }

  /// Componentwise operations; element (r, s) has index r·|S| + s.
  static FiniteRing product(const FiniteRing& r, const FiniteRing& s) {
    const auto n = r.size() * s.size();
    if (n > kMaxBuiltRing) throw DomainError("product ring exceeds the 64-element cap");
    auto idx = [&](std::size_t a, std::size_t b) { return a * s.size() + b; };
    std::vector<std::string> labels(n);
    Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        labels[idx(a, b)] = "(" + r.label(a) + "," + s.label(b) + ")";
        for (std::size_t c = 0; c < r.size(); ++c)
          for (std::size_t d = 0; d < s.size(); ++d) {
            add[idx(a, b)][idx(c, d)] = idx(r.add(a, c), s.add(b, d));
            mul[idx(a, b)][idx(c, d)] = idx(r.mul(a, c), s.mul(b, d));
          }
      }
    return FiniteRing(std::move(labels), std::move(add), std::move(mul), idx(r.zero(), s.zero()),
                      idx(r.one(), s.one()));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  std::size_t zero() const noexcept { return zero_; }
  std::size_t one() const noexcept { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a][b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add_[a][neg_[b]]; }
  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }
  PointSet all() const noexcept { return PointSet::full(size()); }

  std::size_t pow(std::size_t b, std::size_t k) const {
    std::size_t acc = one_;
    for (std::size_t i = 0; i < k; ++i) acc = mul(acc, b);
    return acc;
  }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw DomainError("'" + label + "' is not an element of the ring");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  std::vector<std::string> labels_of(PointSet s) const {
    std::vector<std::string> out;
    for (auto i : s.indices()) out.push_back(labels_.at(i));
    return out;
  }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.labels_ == b.labels_ && a.add_ == b.add_ && a.mul_ == b.mul_ && a.zero_ == b.zero_ && a.one_ == b.one_;
  }

  /// Throws DomainError naming the first violated axiom.
  void validate() const {
    const auto n = size();
    auto fail = [](const std::string& what) { throw DomainError("tables are not a commutative ring: " + what); };
    for (std::size_t a = 0; a < n; ++a) {
      if (add_[a][zero_] != a) fail("zero is not an additive identity");
      if (mul_[a][one_] != a) fail("one is not a multiplicative identity");
      if (add_[a][neg_[a]] != zero_) fail("missing additive inverse");
      for (std::size_t b = 0; b < n; ++b) {
        if (add_[a][b] != add_[b][a]) fail("addition is not commutative");
        if (mul_[a][b] != mul_[b][a]) fail("multiplication is not commutative");
        for (std::size_t c = 0; c < n; ++c) {
          if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) fail("addition is not associative");
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) fail("multiplication is not associative");
          if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]]) fail("multiplication does not distribute");
        }
      }
    }
    if (n > 1 && zero_ == one_) fail("one equals zero in a nonzero ring");
  }

 private:
  FiniteRing(std::vector<std::string> labels, Table add, Table mul, std::size_t zero, std::size_t one)
      : labels_(std::move(labels)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one) {
    const auto n = labels_.size();
    if (n == 0) throw DomainError("ring must have at least one element");
    if (n > kMaxBuiltRing) throw DomainError("ring exceeds the 64-element cap");
    {
      auto sorted = labels_;
      std::sort(sorted.begin(), sorted.end());
      if (auto d = std::adjacent_find(sorted.begin(), sorted.end()); d != sorted.end())
        throw DomainError("duplicate ring element '" + *d + "'");
    }
    auto check_table = [n](const Table& t, const char* name) {
      if (t.size() != n) throw DomainError(std::string(name) + " table has the wrong number of rows");
      for (const auto& row : t) {
        if (row.size() != n) throw DomainError(std::string(name) + " table has a row of the wrong length");
        for (auto v : row)
          if (v >= n) throw DomainError(std::string(name) + " table has an entry outside the ring");
      }
    };
    check_table(add_, "addition");
    check_table(mul_, "multiplication");
    if (zero_ >= n || one_ >= n) throw DomainError("zero or one is not an element of the ring");
    neg_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (add_[a][b] == zero_) { neg_[a] = b; break; }
    for (auto v : neg_)
      if (v == n) throw DomainError("tables are not a commutative ring: missing additive inverse");
  }

  std::vector<std::string> labels_;
  Table add_;
  Table mul_;
  std::size_t zero_;
  std::size_t one_;
  std::vector<std::size_t> neg_;
};

/// `seed` closed under adding elements of `gens`: the additive subgroup
/// generated by seed ∪ gens when seed ⊆ that subgroup.
inline PointSet additive_closure(const FiniteRing& r, PointSet seed, const std::vector<std::size_t>& gens) {
  PointSet out = seed;
  out.insert(r.zero());
  std::vector<std::size_t> frontier = out.indices();
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto e : frontier)
      for (auto g : gens) {
        auto s = r.add(e, g);
        if (!out.contains(s)) { out.insert(s); next.push_back(s); }
      }
    frontier = std::move(next);
  }
  return out;
}

inline PointSet generated_ideal(const FiniteRing& r, PointSet gens) {
  PointSet products;
  for (auto g : gens.indices())
    for (std::size_t x = 0; x < r.size(); ++x) products.insert(r.mul(x, g));
  return additive_closure(r, PointSet{}, products.indices());
}

inline bool is_ideal(const FiniteRing& r, PointSet s) {
  if (!s.contains(r.zero())) return false;
  for (auto a : s.indices()) {
    for (auto b : s.indices())
      if (!s.contains(r.add(a, b))) return false;
    for (std::size_t x = 0; x < r.size(); ++x)
      if (!s.contains(r.mul(x, a))) return false;
  }
  return true;
}

namespace detail {

/// Greedy generating set: walk elements in ring order, keep those not yet
/// generated. Deterministic, and distinct targets give distinct lists.
template <class Generate>
std::vector<std::size_t> greedy_generators(const FiniteRing& r, PointSet target, PointSet start, Generate generate) {
  std::vector<std::size_t> gens;
  PointSet current = start;
  for (std::size_t x = 0; x < r.size() && current != target; ++x) {
    if (!target.contains(x) || current.contains(x)) continue;
    gens.push_back(x);
    current = generate(gens);
  }
  return gens;
}

inline std::string join_labels(const FiniteRing& r, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += r.label(idx[i]);
  }
  return out;
}

}  // namespace detail

/// An ideal together with a readable generator label such as "(2)".
struct Ideal {
  PointSet members;
  std::string label;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members == b.members; }
};

inline Ideal make_ideal(const FiniteRing& r, PointSet members) {
  if (!is_ideal(r, members)) throw DomainError("subset is not an ideal");
  auto gen = [&](const std::vector<std::size_t>& g) {
    PointSet s;
    for (auto x : g) s.insert(x);
    return generated_ideal(r, s);
  };
  auto gens = detail::greedy_generators(r, members, PointSet::singleton(r.zero()), gen);
  if (gens.empty()) return {members, "(" + r.label(r.zero()) + ")"};
  return {members, "(" + detail::join_labels(r, gens) + ")"};
}

/// Every ideal, reached from the zero ideal by adjoining one element at a time.
inline std::vector<PointSet> all_ideals(const FiniteRing& r) {
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> out;
  PointSet zero = generated_ideal(r, PointSet{});
  seen.insert(zero);
  out.push_back(zero);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t x = 0; x < r.size(); ++x) {
      if (out[i].contains(x)) continue;
      PointSet g = out[i];
      g.insert(x);
      PointSet next = generated_ideal(r, g);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  normalize(out);
  return out;
}

inline bool is_prime_ideal(const FiniteRing& r, PointSet p) {
  if (p == r.all() || !is_ideal(r, p)) return false;
  for (std::size_t a = 0; a < r.size(); ++a) {
    if (p.contains(a)) continue;
    for (std::size_t b = 0; b < r.size(); ++b)
      if (!p.contains(b) && p.contains(r.mul(a, b))) return false;
  }
  return true;
}

inline bool is_maximal_ideal(const FiniteRing& r, PointSet m, const std::vector<PointSet>& ideals) {
  if (m == r.all()) return false;
  return std::none_of(ideals.begin(), ideals.end(),
                      [&](PointSet i) { return i != m && i != r.all() && m.subset_of(i); });
}

/// The prime spectrum: the primes, indexed by the carrier built from their
/// labels, plus the ideal lattice used for the Zariski closed sets.
class Spectrum {
 public:
  explicit Spectrum(const FiniteRing& r) : ring_(r), ideals_(all_ideals(r)) {
    std::vector<Ideal> primes;
    for (auto i : ideals_)
      if (is_prime_ideal(r, i)) {
        if (!is_maximal_ideal(r, i, ideals_))
          throw std::logic_error("prime ideal that is not maximal in a finite ring");
        primes.push_back(make_ideal(r, i));
      }
    if (primes.empty()) throw DomainError("ring has no prime ideals (zero ring)");
    std::vector<std::string> labels;
    for (const auto& p : primes) labels.push_back(p.label);
    carrier_ = Carrier(labels);
    primes_.resize(primes.size());
    for (auto& p : primes) {
      auto idx = carrier_.index_of(p.label);
      primes_[idx] = std::move(p);
    }
  }

  const FiniteRing& ring() const noexcept { return ring_; }
  const Carrier& carrier() const noexcept { return carrier_; }
  /// In carrier order.
  const std::vector<Ideal>& primes() const noexcept { return primes_; }
  const std::vector<PointSet>& ideals() const noexcept { return ideals_; }

  /// V(𝔞) = primes containing 𝔞.
  PointSet vanishing(PointSet ideal) const {
    PointSet out;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (ideal.subset_of(primes_[i].members)) out.insert(i);
    return out;
  }
  PointSet vanishing_of(std::size_t f) const { return vanishing(generated_ideal(ring_, PointSet::singleton(f))); }
  /// D_f = Spec ∖ V(f).
  PointSet principal_open(std::size_t f) const { return carrier_.all() - vanishing_of(f); }

  std::size_t index_of_prime(PointSet members) const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (primes_[i].members == members) return i;
    throw DomainError("subset is not a prime ideal of the ring");
  }

  fintop::FinSpace space() const {
    std::vector<PointSet> closed;
    for (auto i : ideals_) closed.push_back(vanishing(i));
    return fintop::FinSpace(carrier_, std::move(closed));
  }

  /// {D_f : f ∈ R}, members named "D(f)".
  core::SetFamily principal_opens() const {
    std::vector<core::Member> members;
    for (std::size_t f = 0; f < ring_.size(); ++f) members.push_back({"D(" + ring_.label(f) + ")", principal_open(f)});
    return core::SetFamily(carrier_, std::move(members));
  }

 private:
  FiniteRing ring_;
  std::vector<PointSet> ideals_;
  Carrier carrier_;
  std::vector<Ideal> primes_;
};

/// Primes in carrier (label) order.
inline std::vector<Ideal> prime_ideals(const FiniteRing& r) { return Spectrum(r).primes(); }

inline fintop::FinSpace spec_space(const FiniteRing& r) { return Spectrum(r).space(); }

inline core::SetFamily principal_open_family(const FiniteRing& r) { return Spectrum(r).principal_opens(); }

/// Every open set is a union of members contained in it.
inline bool is_basis(const fintop::FinSpace& space, const core::SetFamily& family) {
  for (const auto& m : family.members())
    if (!space.is_open(m.set)) return false;
  for (auto o : space.open_sets()) {
    PointSet cover;
    for (const auto& m : family.members())
      if (m.set.subset_of(o)) cover |= m.set;
    if (cover != o) return false;
  }
  return true;
}

/// {x ∈ R : V(x) ∩ Y ∈ U}, cross-checked against the limit set of U with
/// respect to the principal opens (which must be exactly this prime).
inline Ideal ultrafilter_prime(const Spectrum& spec, PointSet y, const core::PrincipalUltrafilter& u) {
  spec.carrier().require_subset(y, "subset of the spectrum");
  if (u.base() != y) throw InvalidUltrafilter("ultrafilter is not an ultrafilter on the given subset");
  PointSet members;
  for (std::size_t x = 0; x < spec.ring().size(); ++x)
    if (u.contains_trace(spec.vanishing_of(x) & y)) members.insert(x);
  const auto limit = core::limit_set(y, u, spec.principal_opens());
  if (limit != PointSet::singleton(spec.index_of_prime(members)))
    throw std::logic_error("ultrafilter prime disagrees with the principal-open limit set");
  return spec.primes()[spec.index_of_prime(members)];
}

/// A unital ring homomorphism, by table of images.
class RingHom {
 public:
  RingHom(FiniteRing source, FiniteRing target, std::vector<std::size_t> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.size() != source_.size()) throw DomainError("homomorphism table does not cover the source ring");
    for (auto v : map_)
      if (v >= target_.size()) throw DomainError("homomorphism maps outside the target ring");
    if (map_[source_.one()] != target_.one()) throw DomainError("homomorphism does not preserve one");
    for (std::size_t a = 0; a < source_.size(); ++a)
      for (std::size_t b = 0; b < source_.size(); ++b) {
        if (map_[source_.add(a, b)] != target_.add(map_[a], map_[b]))
          throw DomainError("map does not preserve addition at (" + source_.label(a) + "," + source_.label(b) + ")");
        if (map_[source_.mul(a, b)] != target_.mul(map_[a], map_[b]))
          throw DomainError("map does not preserve multiplication at (" + source_.label(a) + "," +
                            source_.label(b) + ")");
      }
  }

  const FiniteRing& source() const noexcept { return source_; }
  const FiniteRing& target() const noexcept { return target_; }
  const std::vector<std::size_t>& map() const noexcept { return map_; }
  std::size_t operator()(std::size_t a) const { return map_.at(a); }

  PointSet image() const {
    PointSet out;
    for (auto v : map_) out.insert(v);
    return out;
  }
  PointSet preimage(PointSet s) const {
    PointSet out;
    for (std::size_t a = 0; a < map_.size(); ++a)
      if (s.contains(map_[a])) out.insert(a);
    return out;
  }
  bool injective() const { return image().size() == map_.size(); }

 private:
  FiniteRing source_;
  FiniteRing target_;
  std::vector<std::size_t> map_;
};

/// An injective unital homomorphism A ↪ B.
class RingEmbedding : public RingHom {
 public:
  RingEmbedding(FiniteRing source, FiniteRing target, std::vector<std::size_t> map)
      : RingHom(std::move(source), std::move(target), std::move(map)) {
    if (!injective()) throw DomainError("ring map is not injective");
  }
  explicit RingEmbedding(RingHom h) : RingHom(std::move(h)) {
    if (!injective()) throw DomainError("ring map is not injective");
  }
};

/// 𝔮 ↦ h⁻¹(𝔮), as a map from the carrier of Spec(B) to that of Spec(A).
inline fintop::PointMap spec_functor(const RingHom& h, const Spectrum& spec_source, const Spectrum& spec_target) {
  fintop::PointMap f;
  for (const auto& q : spec_target.primes()) f.image.push_back(spec_source.index_of_prime(h.preimage(q.members)));
  return f;
}

inline fintop::PointMap spec_functor(const RingHom& h) {
  return spec_functor(h, Spectrum(h.source()), Spectrum(h.target()));
}

/// A unital subring, stored as its member set.
struct Subring {
  PointSet members;
  std::string label;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Subring& a, const Subring& b) { return a.members == b.members; }
};

inline bool is_subring(const FiniteRing& r, PointSet s) {
  if (!s.contains(r.zero()) || !s.contains(r.one())) return false;
  for (auto a : s.indices()) {
    if (!s.contains(r.neg(a))) return false;
    for (auto b : s.indices())
      if (!s.contains(r.add(a, b)) || !s.contains(r.mul(a, b))) return false;
  }
  return true;
}

/// Smallest unital subring containing `gens`.
inline PointSet generated_subring(const FiniteRing& r, PointSet gens) {
  PointSet out = gens;
  out.insert(r.zero());
  out.insert(r.one());
  for (PointSet before; before != out;) {
    before = out;
    const auto current = out.indices();
    for (auto a : current) {
      out.insert(r.neg(a));
      for (auto b : current) {
        out.insert(r.add(a, b));
        out.insert(r.mul(a, b));
      }
    }
  }
  return out;
}

/// Intermediate rings A ⊆ C ⊆ B of an embedding, as a space with the subbasis
/// U_x = {C : x ∈ C}.
class OverringSpace {
 public:
  explicit OverringSpace(const RingEmbedding& e) : target_(e.target()), image_(e.image()) {
    if (target_.size() > kMaxTableRing)
      throw DomainError("intermediate-ring enumeration is capped at 32-element targets");
    const PointSet base = generated_subring(target_, image_);
    std::unordered_set<PointSet, PointSetHash> seen{base};
    std::vector<PointSet> found{base};
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t x = 0; x < target_.size(); ++x) {
        if (found[i].contains(x)) continue;
        PointSet g = found[i];
        g.insert(x);
        PointSet next = generated_subring(target_, g);
        if (seen.insert(next).second) found.push_back(next);
      }
    std::vector<Subring> rings;
    for (auto s : found) {
      auto gen = [&](const std::vector<std::size_t>& g) {
        PointSet gs = base;
        for (auto x : g) gs.insert(x);
        return generated_subring(target_, gs);
      };
      auto gens = detail::greedy_generators(target_, s, base, gen);
      rings.push_back({s, gens.empty() ? std::string("A") : "A[" + detail::join_labels(target_, gens) + "]"});
    }
    std::vector<std::string> labels;
    for (const auto& c : rings) labels.push_back(c.label);
    carrier_ = Carrier(labels);
    rings_.resize(rings.size());
    for (auto& c : rings) {
      auto idx = carrier_.index_of(c.label);
      rings_[idx] = std::move(c);
    }
  }

  const FiniteRing& target() const noexcept { return target_; }
  PointSet image() const noexcept { return image_; }
  const Carrier& carrier() const noexcept { return carrier_; }
  /// In carrier order.
  const std::vector<Subring>& rings() const noexcept { return rings_; }

  /// U_x = {C : x ∈ C}.
  PointSet containing(std::size_t x) const {
    PointSet out;
    for (std::size_t i = 0; i < rings_.size(); ++i)
      if (rings_[i].members.contains(x)) out.insert(i);
    return out;
  }

  core::SetFamily subbasis() const {
    std::vector<core::Member> members;
    for (std::size_t x = 0; x < target_.size(); ++x) members.push_back({"U(" + target_.label(x) + ")", containing(x)});
    return core::SetFamily(carrier_, std::move(members));
  }

  fintop::FinSpace space() const { return fintop::from_subbasis(subbasis()); }

  std::size_t index_of_ring(PointSet members) const {
    for (std::size_t i = 0; i < rings_.size(); ++i)
      if (rings_[i].members == members) return i;
    throw DomainError("subset is not an intermediate ring of the extension");
  }

 private:
  FiniteRing target_;
  PointSet image_;
  Carrier carrier_;
  std::vector<Subring> rings_;
};

inline std::vector<Subring> intermediate_rings(const RingEmbedding& e) { return OverringSpace(e).rings(); }

inline fintop::FinSpace overring_space(const RingEmbedding& e) { return OverringSpace(e).space(); }

/// A_U = {x ∈ B : U_x ∩ Y ∈ U}; verified to be an intermediate ring.
inline Subring a_ultra(const OverringSpace& s, PointSet y, const core::PrincipalUltrafilter& u) {
  s.carrier().require_subset(y, "subset of the intermediate-ring space");
  if (u.base() != y) throw InvalidUltrafilter("ultrafilter is not an ultrafilter on the given subset");
  PointSet members;
  for (std::size_t x = 0; x < s.target().size(); ++x)
    if (u.contains_trace(s.containing(x) & y)) members.insert(x);
  if (!s.image().subset_of(members) || !is_subring(s.target(), members))
    throw std::logic_error("ultrafilter ring is not an intermediate ring");
  return s.rings()[s.index_of_ring(members)];
}

/// A monic polynomial over a subring, low-degree coefficient first; the last
/// coefficient is the ring's one.
struct MonicRelation {
  std::vector<std::size_t> coefficients;

  std::size_t degree() const noexcept { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

inline std::size_t evaluate(const FiniteRing& r, const MonicRelation& p, std::size_t b) {
  std::size_t acc = r.zero();
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) acc = r.add(r.mul(acc, b), *it);
  return acc;
}

struct IntegralityCertificate {
  bool integral = false;
  MonicRelation relation;
};

namespace detail {

inline void require_subring(const FiniteRing& b, PointSet c) {
  if (!c.subset_of(b.all()) || !is_subring(b, c)) throw DomainError("C is not a subring of B");
}

}  // namespace detail

/// Elements of C give x − b. Otherwise power periodicity b^(m+p) = b^m gives
/// x^(m+p) − x^m, whose coefficients lie in the prime subring.
inline IntegralityCertificate is_integral(std::size_t b, PointSet c, const FiniteRing& ring) {
  detail::require_subring(ring, c);
  if (b >= ring.size()) throw DomainError("element is not in B");
  IntegralityCertificate cert;
  cert.integral = true;
  if (c.contains(b)) {
    cert.relation.coefficients = {ring.neg(b), ring.one()};
    return cert;
  }
  std::map<std::size_t, std::size_t> first_seen;
  std::size_t power = ring.one();
  for (std::size_t k = 0;; ++k) {
    auto [it, fresh] = first_seen.emplace(power, k);
    if (!fresh) {
      const std::size_t m = it->second;
      cert.relation.coefficients.assign(k + 1, ring.zero());
      cert.relation.coefficients[m] = ring.neg(ring.one());
      cert.relation.coefficients[k] = ring.one();
      break;
    }
    power = ring.mul(power, b);
  }
  // Coefficients 0, 1 and -1 lie in every unital subring.
  for (auto a : cert.relation.coefficients)
    if (!c.contains(a)) throw std::logic_error("certificate coefficient outside the subring");
  return cert;
}

/// Integral closure of C in B: the elements of B integral over C.
inline PointSet integral_closure(PointSet c, const FiniteRing& ring) {
  PointSet out;
  for (std::size_t b = 0; b < ring.size(); ++b)
    if (is_integral(b, c, ring).integral) out.insert(b);
  return out;
}

struct ClosednessVerdict {
  bool integrally_closed = false;
  /// An element of B ∖ C integral over C, when not closed.
  std::optional<std::size_t> witness;
  std::optional<IntegralityCertificate> certificate;
};

/// C is integrally closed in B iff every element of B integral over C lies in C.
inline ClosednessVerdict is_integrally_closed_in(PointSet c, const FiniteRing& ring) {
  detail::require_subring(ring, c);
  ClosednessVerdict v;
  for (std::size_t b = 0; b < ring.size(); ++b) {
    if (c.contains(b)) continue;
    auto cert = is_integral(b, c, ring);
    if (cert.integral) {
      v.witness = b;
      v.certificate = cert;
      return v;
    }
  }
  v.integrally_closed = true;
  return v;
}

}  // namespace ultratop::ring
