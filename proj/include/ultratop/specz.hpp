#pragma once

// A decidable model of Spec(Z). Points are the generic point (0) and the
// primes (p). Constructible sets are finite sets of primes or their
// complements; the generic point lies in a constructible set iff it is cofinite.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ultratop/errors.hpp"
#include "ultratop/ultracore.hpp"

namespace ultratop::specz {

using Integer = std::int64_t;
using Prime = std::uint64_t;

/// Inputs to v_of / d_of are capped so that trial division stays cheap.
inline constexpr std::uint64_t kFactorCap = 1'000'000'000'000ULL;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller–Rabin; the first twelve prime bases are exact for
/// every n < 3.3·10^24, which covers all of uint64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) { d >>= 1; ++s; }
  for (auto a : bases) {
    auto x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

/// Distinct prime divisors of |n| in increasing order; n ≠ 0.
inline std::vector<Prime> prime_divisors(Integer n) {
  if (n == 0) throw DomainError("zero has no finite set of prime divisors");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  if (m > kFactorCap) throw DomainError("|" + std::to_string(n) + "| exceeds the factorization cap 10^12");
  std::vector<Prime> out;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
      if (is_prime(m)) break;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

/// A point of Spec(Z).
class ZPoint {
 public:
  static ZPoint generic() { return ZPoint(0); }
  static ZPoint prime(Prime p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    return ZPoint(p);
  }

  bool is_generic() const noexcept { return p_ == 0; }
  /// Only meaningful for closed points.
  Prime characteristic() const noexcept { return p_; }
  std::string label() const { return "(" + std::to_string(p_) + ")"; }

  friend bool operator==(ZPoint, ZPoint) = default;

 private:
  explicit ZPoint(Prime p) : p_(p) {}
  Prime p_;
};

namespace detail {

inline std::vector<Prime> canonical_primes(std::vector<Prime> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return primes;
}

inline std::vector<Prime> set_union(const std::vector<Prime>& a, const std::vector<Prime>& b) {
  std::vector<Prime> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline std::vector<Prime> set_intersection(const std::vector<Prime>& a, const std::vector<Prime>& b) {
  std::vector<Prime> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline std::vector<Prime> set_difference(const std::vector<Prime>& a, const std::vector<Prime>& b) {
  std::vector<Prime> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline bool includes(const std::vector<Prime>& a, const std::vector<Prime>& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Normal form of a constructible subset of Spec(Z). cofinite = false:
/// {(p) : p ∈ primes}. cofinite = true: {(0)} ∪ {(q) : q ∉ primes}.
class ZConstructible {
 public:
  ZConstructible() = default;
  ZConstructible(std::vector<Prime> primes, bool cofinite)
      : primes_(detail::canonical_primes(std::move(primes))), cofinite_(cofinite) {}

  static ZConstructible empty_set() { return {}; }
  static ZConstructible whole_space() { return ZConstructible({}, true); }

  const std::vector<Prime>& primes() const noexcept { return primes_; }
  bool cofinite() const noexcept { return cofinite_; }
  bool empty() const noexcept { return !cofinite_ && primes_.empty(); }
  bool contains_generic() const noexcept { return cofinite_; }

  bool contains(ZPoint x) const {
    if (x.is_generic()) return cofinite_;
    bool listed = std::binary_search(primes_.begin(), primes_.end(), x.characteristic());
    return cofinite_ ? !listed : listed;
  }

  ZConstructible complement() const {
    ZConstructible out = *this;
    out.cofinite_ = !cofinite_;
    return out;
  }

  friend ZConstructible operator|(const ZConstructible& a, const ZConstructible& b) {
    if (!a.cofinite_ && !b.cofinite_) return from_canonical(detail::set_union(a.primes_, b.primes_), false);
    if (a.cofinite_ && b.cofinite_) return from_canonical(detail::set_intersection(a.primes_, b.primes_), true);
    const auto& cof = a.cofinite_ ? a : b;
    const auto& fin = a.cofinite_ ? b : a;
    return from_canonical(detail::set_difference(cof.primes_, fin.primes_), true);
  }

  friend ZConstructible operator&(const ZConstructible& a, const ZConstructible& b) {
    if (!a.cofinite_ && !b.cofinite_) return from_canonical(detail::set_intersection(a.primes_, b.primes_), false);
    if (a.cofinite_ && b.cofinite_) return from_canonical(detail::set_union(a.primes_, b.primes_), true);
    const auto& cof = a.cofinite_ ? a : b;
    const auto& fin = a.cofinite_ ? b : a;
    return from_canonical(detail::set_difference(fin.primes_, cof.primes_), false);
  }

  ZConstructible operator~() const { return complement(); }

  bool subset_of(const ZConstructible& o) const { return (*this & o.complement()).empty(); }

  friend bool operator==(const ZConstructible&, const ZConstructible&) = default;

 private:
  static ZConstructible from_canonical(std::vector<Prime> primes, bool cofinite) {
    ZConstructible out;
    out.primes_ = std::move(primes);
    out.cofinite_ = cofinite;
    return out;
  }

  std::vector<Prime> primes_;
  bool cofinite_ = false;
};

/// V(n): primes dividing n; V(0) is the whole space.
inline ZConstructible v_of(Integer n) {
  if (n == 0) return ZConstructible::whole_space();
  return ZConstructible(prime_divisors(n), false);
}

/// D(n) = Spec(Z) ∖ V(n).
inline ZConstructible d_of(Integer n) { return v_of(n).complement(); }

enum class SupportMode { Finite, CofinitePrimes };

/// An arbitrary subset of Spec(Z) whose closed points form a finite or
/// cofinite set of primes, plus an independent generic-point flag.
class ZSubsetDescriptor {
 public:
  ZSubsetDescriptor() = default;
  ZSubsetDescriptor(std::vector<Prime> primes, SupportMode mode, bool include_generic)
      : primes_(detail::canonical_primes(std::move(primes))), mode_(mode), include_generic_(include_generic) {}

  static ZSubsetDescriptor empty_set() { return {}; }
  static ZSubsetDescriptor max_spectrum() { return ZSubsetDescriptor({}, SupportMode::CofinitePrimes, false); }
  static ZSubsetDescriptor whole_space() { return ZSubsetDescriptor({}, SupportMode::CofinitePrimes, true); }
  static ZSubsetDescriptor finite_primes(std::vector<Prime> primes) {
    return ZSubsetDescriptor(std::move(primes), SupportMode::Finite, false);
  }
  static ZSubsetDescriptor of(const ZConstructible& c) {
    return ZSubsetDescriptor(c.primes(), c.cofinite() ? SupportMode::CofinitePrimes : SupportMode::Finite,
                             c.cofinite());
  }

  const std::vector<Prime>& primes() const noexcept { return primes_; }
  SupportMode mode() const noexcept { return mode_; }
  bool include_generic() const noexcept { return include_generic_; }
  /// Infinitely many closed points.
  bool infinite() const noexcept { return mode_ == SupportMode::CofinitePrimes; }
  bool empty() const noexcept { return mode_ == SupportMode::Finite && primes_.empty() && !include_generic_; }

  bool contains(ZPoint x) const {
    if (x.is_generic()) return include_generic_;
    bool listed = std::binary_search(primes_.begin(), primes_.end(), x.characteristic());
    return mode_ == SupportMode::Finite ? listed : !listed;
  }

  ZSubsetDescriptor with_generic(bool g) const {
    ZSubsetDescriptor out = *this;
    out.include_generic_ = g;
    return out;
  }

  bool subset_of(const ZSubsetDescriptor& o) const {
    if (include_generic_ && !o.include_generic_) return false;
    using detail::includes;
    switch (mode_) {
      case SupportMode::Finite:
        return o.mode_ == SupportMode::Finite ? includes(o.primes_, primes_)
                                              : detail::set_intersection(primes_, o.primes_).empty();
      case SupportMode::CofinitePrimes:
        return o.mode_ == SupportMode::CofinitePrimes && includes(primes_, o.primes_);
    }
    return false;
  }

  friend bool operator==(const ZSubsetDescriptor&, const ZSubsetDescriptor&) = default;

 private:
  std::vector<Prime> primes_;
  SupportMode mode_ = SupportMode::Finite;
  bool include_generic_ = false;
};

/// Ultrafilter limit points of Y. Principal ultrafilters on Y yield the points
/// of Y. A nonprincipal ultrafilter exists only on an infinite Y, and every one
/// of them has limit prime (0): an integer x ≠ 0 lies in only finitely many
/// primes, so V(x) ∩ Y is finite and never in the ultrafilter.
inline ZSubsetDescriptor limit_points(const ZSubsetDescriptor& y) {
  return y.infinite() ? y.with_generic(true) : y;
}

/// Closure in the patch (= ultrafilter) topology.
inline ZSubsetDescriptor patch_closure(const ZSubsetDescriptor& y) { return limit_points(y); }

struct UltraClosedVerdict {
  bool closed = false;
  /// A limit point outside Y, when not closed. Only the generic point can be.
  std::optional<ZPoint> witness;
};

inline UltraClosedVerdict is_ultra_closed(const ZSubsetDescriptor& y) {
  if (limit_points(y).subset_of(y)) return {true, std::nullopt};
  return {false, ZPoint::generic()};
}

inline UltraClosedVerdict is_ultra_closed(const ZConstructible& c) { return is_ultra_closed(ZSubsetDescriptor::of(c)); }

/// Zariski closed sets are V(n), n ≠ 0 (finite prime sets) and the whole space.
inline ZSubsetDescriptor zariski_closure(const ZSubsetDescriptor& y) {
  if (y.mode() == SupportMode::Finite && !y.include_generic()) return y;
  return ZSubsetDescriptor::whole_space();
}

/// Same contract as core::fip_check, over constructible normal forms.
inline core::FipVerdict<ZConstructible> z_fip_check(std::span<const ZConstructible> sets) {
  auto verdict = core::fip_search<ZConstructible>(
      sets, [](const ZConstructible& a, const ZConstructible& b) { return a & b; },
      [](const ZConstructible& s) { return s.empty(); });
  // Patch compactness: a family with the FIP has nonempty total intersection.
  if (verdict.has_fip && (!verdict.intersection || verdict.intersection->empty()))
    throw std::logic_error("family with the finite intersection property has empty intersection");
  return verdict;
}

}  // namespace ultratop::specz
