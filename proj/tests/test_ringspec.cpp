#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ultratop/ringspec.hpp"

using namespace ultratop;
using namespace ultratop::ring;

namespace {

std::vector<std::string> prime_labels(const FiniteRing& r) {
  std::vector<std::string> out;
  for (const auto& p : prime_ideals(r)) out.push_back(p.label);
  return out;
}

std::size_t pick_prime_index(const Spectrum& spec, const std::string& label) { return spec.carrier().index_of(label); }

}  // namespace

TEST(FiniteRing, Zmod) {
  auto z4 = FiniteRing::zmod(4);
  EXPECT_EQ(z4.size(), 4u);
  EXPECT_EQ(z4.label(z4.one()), "1");
  EXPECT_EQ(z4.label(z4.zero()), "0");
  EXPECT_EQ(z4.mul(z4.index_of("3"), z4.index_of("3")), z4.index_of("1"));
  EXPECT_THROW(FiniteRing::zmod(1), DomainError);
  EXPECT_THROW(FiniteRing::zmod(65), DomainError);
}

TEST(FiniteRing, ProductOfZ2Z3IsZ6ByCrt) {
  auto z2 = FiniteRing::zmod(2), z3 = FiniteRing::zmod(3), z6 = FiniteRing::zmod(6);
  auto p = FiniteRing::product(z2, z3);
  ASSERT_EQ(p.size(), 6u);
  // Canonical bijection a ↦ (a mod 2, a mod 3); product index is i·|S| + j.
  auto phi = [](std::size_t a) { return (a % 2) * 3 + (a % 3); };
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      EXPECT_EQ(p.add(phi(a), phi(b)), phi(z6.add(a, b)));
      EXPECT_EQ(p.mul(phi(a), phi(b)), phi(z6.mul(a, b)));
    }
  EXPECT_EQ(p.one(), phi(1));
  EXPECT_EQ(p.label(phi(5)), "(1,2)");
  EXPECT_THROW(FiniteRing::product(FiniteRing::zmod(8), FiniteRing::zmod(9)), DomainError);
}

TEST(FiniteRing, TableValidation) {
  // Z/2 with a broken multiplication (1·1 = 0).
  Table add = {{0, 1}, {1, 0}}, bad_mul = {{0, 0}, {0, 0}};
  EXPECT_THROW(FiniteRing::from_tables({"0", "1"}, add, bad_mul, 0, 1), DomainError);
  // Non-commutative multiplication table.
  Table nc = {{0, 0, 0}, {0, 1, 2}, {0, 1, 2}};
  Table add3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_THROW(FiniteRing::from_tables({"0", "1", "2"}, add3, nc, 0, 1), DomainError);
  EXPECT_THROW(FiniteRing::from_tables({"0", "1"}, {{0, 1}}, bad_mul, 0, 1), DomainError);
  for (const auto& r : fixtures::test_rings()) EXPECT_NO_THROW(r.validate());
}

TEST(PrimeIdeals, Examples) {
  EXPECT_EQ(prime_labels(FiniteRing::zmod(12)), (std::vector<std::string>{"(2)", "(3)"}));
  EXPECT_EQ(prime_labels(FiniteRing::zmod(8)), std::vector<std::string>{"(2)"});
  EXPECT_EQ(prime_ideals(FiniteRing::product(FiniteRing::zmod(2), FiniteRing::zmod(2))).size(), 2u);
  EXPECT_EQ(prime_ideals(fixtures::gf16()).size(), 1u);  // a field: only (0)
}

TEST(PrimeIdeals, CountMatchesDistinctPrimeFactors) {
  for (std::size_t n = 2; n <= 64; ++n) EXPECT_EQ(prime_ideals(FiniteRing::zmod(n)).size(), fixtures::omega(n)) << n;
}

TEST(PrimeIdeals, EveryPrimeIsAMaximalIdeal) {
  for (const auto& r : fixtures::test_rings()) {
    auto ideals = all_ideals(r);
    for (auto i : ideals) {
      EXPECT_TRUE(is_ideal(r, i));
      if (is_prime_ideal(r, i)) { EXPECT_TRUE(is_maximal_ideal(r, i, ideals)); }
    }
    // Brute-force ideal count over all subsets, for the small rings.
    if (r.size() <= 16) {
      std::size_t brute = 0;
      for_each_subset(r.all(), [&](PointSet s) { brute += is_ideal(r, s) ? 1 : 0; });
      EXPECT_EQ(brute, ideals.size());
    }
  }
}

TEST(SpecSpace, Examples) {
  auto z12 = spec_space(FiniteRing::zmod(12));
  EXPECT_EQ(z12.size(), 2u);
  EXPECT_TRUE(z12.is_discrete());
  EXPECT_EQ(spec_space(FiniteRing::zmod(8)).size(), 1u);
  auto r = fintop::is_spectral(z12);
  EXPECT_TRUE(r.spectral);
  EXPECT_TRUE(fintop::specialization_order(z12).covers().empty());
  EXPECT_EQ(fintop::patch_topology(z12), z12);

  auto p = principal_open_family(FiniteRing::zmod(12));
  EXPECT_EQ(p.members().size(), 12u);
  EXPECT_EQ(p.members()[2].name, "D(2)");
  EXPECT_EQ(p.members()[2].set, PointSet{1});  // D(2) = {(3)}
  EXPECT_TRUE(fintop::ultra_topology(p).is_discrete());
}

TEST(SpecSpace, PrincipalOpensAreABasisAndUltraIsPatch) {
  for (const auto& r : fixtures::test_rings()) {
    auto s = spec_space(r);
    auto p = principal_open_family(r);
    EXPECT_TRUE(is_basis(s, p));
    EXPECT_EQ(fintop::ultra_topology(p), fintop::patch_topology(s));
    EXPECT_TRUE(fintop::ultra_topology(p).is_discrete());
    EXPECT_TRUE(fintop::is_spectral(s).spectral);
  }
}

TEST(UltrafilterPrime, Examples) {
  Spectrum spec(FiniteRing::zmod(12));
  auto all = spec.carrier().all();
  auto two = pick_prime_index(spec, "(2)");
  auto p = ultrafilter_prime(spec, all, core::PrincipalUltrafilter(all, two));
  EXPECT_EQ(p.label, "(2)");
  EXPECT_EQ(spec.ring().labels_of(p.members), (std::vector<std::string>{"0", "2", "4", "6", "8", "10"}));
  auto single = PointSet::singleton(two);
  EXPECT_EQ(ultrafilter_prime(spec, single, core::PrincipalUltrafilter(single, two)), p);
  EXPECT_THROW(ultrafilter_prime(spec, single, core::PrincipalUltrafilter(all, two)), InvalidUltrafilter);
}

TEST(UltrafilterPrime, EqualsGeneratingPrimeOnAllTestRings) {
  for (const auto& r : fixtures::test_rings()) {
    Spectrum spec(r);
    for_each_subset(spec.carrier().all(), [&](PointSet y) {
      for (auto i : y.indices()) {
        core::PrincipalUltrafilter u(y, i);
        EXPECT_EQ(ultrafilter_prime(spec, y, u), spec.primes()[i]);
        EXPECT_EQ(core::limit_set(y, u, spec.principal_opens()), PointSet::singleton(i));
      }
    });
  }
}

TEST(Overrings, F2IntoF16HasThreeRings) {
  auto e = fixtures::prime_embedding(2, fixtures::gf16());
  OverringSpace s(e);
  std::multiset<std::size_t> sizes;
  for (const auto& c : s.rings()) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 4, 16}));
  auto space = s.space();
  EXPECT_TRUE(fintop::is_spectral(space).spectral);
  // F16 is the generic point: its closure is everything.
  std::size_t top = 0;
  for (std::size_t i = 0; i < s.rings().size(); ++i)
    if (s.rings()[i].size() == 16) top = i;
  EXPECT_EQ(space.point_closure(top), space.carrier().all());
  EXPECT_EQ(fintop::specialization_order(space).maximal_elements(), PointSet::singleton(top));
}

TEST(Overrings, IdentityHasOneRing) {
  for (const auto& r : {FiniteRing::zmod(6), fixtures::gf4()}) {
    auto rings = intermediate_rings(fixtures::identity_embedding(r));
    ASSERT_EQ(rings.size(), 1u);
    EXPECT_EQ(rings[0].members, r.all());
    EXPECT_EQ(rings[0].label, "A");
  }
}

TEST(Overrings, SpecializationIsInclusionAndSpaceIsSpectral) {
  for (const auto& e : fixtures::small_extensions()) {
    OverringSpace s(e);
    auto space = s.space();
    EXPECT_TRUE(fintop::is_spectral(space).spectral);
    auto order = fintop::specialization_order(space);
    for (std::size_t i = 0; i < s.rings().size(); ++i)
      for (std::size_t j = 0; j < s.rings().size(); ++j)
        EXPECT_EQ(order.leq(i, j), s.rings()[i].members.subset_of(s.rings()[j].members));
    // Brute-force subring enumeration.
    std::size_t brute = 0;
    for_each_subset(e.target().all(), [&](PointSet c) {
      if (e.image().subset_of(c) && is_subring(e.target(), c)) ++brute;
    });
    EXPECT_EQ(brute, s.rings().size());
  }
}

TEST(Overrings, AUltraRecoversGeneratingRing) {
  for (const auto& e : fixtures::small_extensions()) {
    OverringSpace s(e);
    for_each_subset(s.carrier().all(), [&](PointSet y) {
      for (auto i : y.indices()) {
        auto c = a_ultra(s, y, core::PrincipalUltrafilter(y, i));
        EXPECT_EQ(c, s.rings()[i]);
        EXPECT_TRUE(e.image().subset_of(c.members));
        EXPECT_TRUE(is_subring(e.target(), c.members));
      }
    });
  }
}

TEST(Integrality, Certificates) {
  auto f16 = fixtures::gf16();
  auto f2 = fixtures::prime_embedding(2, f16).image();
  auto zero = is_integral(f16.zero(), f2, f16);
  EXPECT_TRUE(zero.integral);
  EXPECT_EQ(zero.relation.degree(), 1u);
  EXPECT_EQ(is_integral(f16.one(), f2, f16).relation.degree(), 1u);
  for (std::size_t b = 0; b < f16.size(); ++b) {
    auto cert = is_integral(b, f2, f16);
    EXPECT_TRUE(cert.integral);
    EXPECT_EQ(evaluate(f16, cert.relation, b), f16.zero());
    EXPECT_EQ(cert.relation.coefficients.back(), f16.one());
    EXPECT_LE(cert.relation.degree(), 16u);  // b^16 = b in GF(16)
  }
  EXPECT_THROW(is_integral(0, PointSet{0, 2}, f16), DomainError);
}

TEST(Integrality, EveryElementIsIntegralSoOnlyBIsClosed) {
  for (const auto& e : fixtures::small_extensions()) {
    for (const auto& c : intermediate_rings(e)) {
      EXPECT_EQ(integral_closure(c.members, e.target()), e.target().all());
      for (std::size_t b = 0; b < e.target().size(); ++b) {
        auto cert = is_integral(b, c.members, e.target());
        ASSERT_TRUE(cert.integral);
        EXPECT_EQ(evaluate(e.target(), cert.relation, b), e.target().zero());
        for (auto a : cert.relation.coefficients) EXPECT_TRUE(c.members.contains(a));
      }
      auto verdict = is_integrally_closed_in(c.members, e.target());
      EXPECT_EQ(verdict.integrally_closed, c.members == e.target().all());
      if (!verdict.integrally_closed) {
        ASSERT_TRUE(verdict.witness && verdict.certificate);
        EXPECT_FALSE(c.members.contains(*verdict.witness));
        EXPECT_EQ(evaluate(e.target(), verdict.certificate->relation, *verdict.witness), e.target().zero());
      }
    }
  }
}

TEST(SpecFunctor, QuotientZ12ToZ6) {
  auto z12 = FiniteRing::zmod(12), z6 = FiniteRing::zmod(6);
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < 12; ++a) map.push_back(a % 6);
  RingHom h(z12, z6, map);
  Spectrum s12(z12), s6(z6);
  auto f = spec_functor(h, s12, s6);
  // (2) ↦ (2), (3) ↦ (3).
  EXPECT_EQ(f.image, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(fintop::is_continuous(f, s6.space(), s12.space()));
  auto t = fintop::ultra_transport(f, s6.principal_opens(), s12.principal_opens());
  EXPECT_TRUE(t.hypothesis);
  EXPECT_TRUE(t.ultra_continuous);
}

TEST(SpecFunctor, IdentityAndProjection) {
  auto z6 = FiniteRing::zmod(6);
  auto id = spec_functor(fixtures::identity_embedding(z6));
  EXPECT_EQ(id.image, (std::vector<std::size_t>{0, 1}));

  auto z4 = FiniteRing::zmod(4), z3 = FiniteRing::zmod(3);
  auto prod = FiniteRing::product(z4, z3);
  std::vector<std::size_t> proj;
  for (std::size_t a = 0; a < prod.size(); ++a) proj.push_back(a / 3);
  RingHom h(prod, z4, proj);
  Spectrum sp(prod), s4(z4);
  auto f = spec_functor(h, sp, s4);
  ASSERT_EQ(f.image.size(), 1u);
  // The image is the closed point (2) × Z/3.
  EXPECT_TRUE(sp.space().is_closed(PointSet::singleton(f.image[0])));
  EXPECT_EQ(sp.primes()[f.image[0]].members, h.preimage(s4.primes()[0].members));
}

TEST(RingHom, RejectsNonHomomorphisms) {
  auto z4 = FiniteRing::zmod(4), z2 = FiniteRing::zmod(2);
  EXPECT_THROW(RingHom(z2, z4, {0, 1}), DomainError);         // 1 + 1 ↦ 0 ≠ 2
  EXPECT_THROW(RingHom(z4, z2, {0, 0, 0, 0}), DomainError);   // one not preserved
  EXPECT_NO_THROW(RingHom(z4, z2, {0, 1, 0, 1}));
  EXPECT_THROW(RingEmbedding(z4, z2, {0, 1, 0, 1}), DomainError);
}
