#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ultratop/fintop.hpp"

using namespace ultratop;
using namespace ultratop::fintop;
using ultratop::fixtures::family;

namespace {

Carrier ab() { return Carrier({"a", "b"}); }

// Opens {∅, {a}, {a,b}}; closed sets {∅, {b}, {a,b}}.
FinSpace sierpinski() { return from_subbasis(ab(), {PointSet{0}}); }

// Random space generated by a random subbasis of up to four sets.
FinSpace random_space(std::mt19937_64& rng, std::size_t max_points) {
  std::uniform_int_distribution<std::size_t> npts(1, max_points), nsets(0, 4);
  auto c = fixtures::letters(npts(rng));
  std::uniform_int_distribution<std::uint64_t> bits(0, c.all().bits());
  std::vector<PointSet> sub;
  for (std::size_t i = nsets(rng); i > 0; --i) sub.push_back(PointSet(bits(rng)));
  return from_subbasis(c, sub);
}

FinSpace random_t0_space(std::mt19937_64& rng, std::size_t max_points) {
  std::uniform_int_distribution<std::size_t> npts(1, max_points);
  return poset_to_space(fixtures::random_poset(rng, npts(rng), 0.3));
}

}  // namespace

TEST(FinSpace, ValidatesAxioms) {
  auto c = ab();
  EXPECT_THROW(FinSpace(c, {PointSet{}, PointSet{0}}), DomainError);        // carrier missing
  EXPECT_THROW(FinSpace(c, {PointSet{0}, c.all()}), DomainError);           // ∅ missing
  Carrier abc({"a", "b", "c"});
  EXPECT_THROW(FinSpace(abc, {PointSet{}, PointSet{0}, PointSet{1}, abc.all()}), DomainError);  // no {a,b}
  EXPECT_NO_THROW(FinSpace(c, {PointSet{}, PointSet{1}, c.all()}));
}

TEST(FromSubbasis, Sierpinski) {
  auto s = sierpinski();
  EXPECT_EQ(s.open_sets(), (std::vector<PointSet>{PointSet{}, PointSet{0}, PointSet{0, 1}}));
  EXPECT_EQ(s.closed_sets(), (std::vector<PointSet>{PointSet{}, PointSet{1}, PointSet{0, 1}}));
}

TEST(FromSubbasis, SingletonsGiveDiscrete) {
  Carrier c({"a", "b", "c"});
  auto s = from_subbasis(c, {PointSet{0}, PointSet{1}, PointSet{2}});
  EXPECT_TRUE(s.is_discrete());
  EXPECT_EQ(s, FinSpace::discrete(c));
  EXPECT_EQ(s.closed_sets().size(), 8u);
}

TEST(FromSubbasis, IntersectionsAreOpen) {
  Carrier c({"a", "b", "c"});
  auto s = from_subbasis(c, {PointSet{0, 1}, PointSet{1, 2}});
  // Closing {ab, bc} under ∩ then ∪ gives ∅, b, ab, bc, abc.
  EXPECT_EQ(s.open_sets(), (std::vector<PointSet>{PointSet{}, PointSet{1}, PointSet{0, 1}, PointSet{1, 2}, c.all()}));
  EXPECT_THROW(from_subbasis(c, {PointSet{5}}), DomainError);
}

TEST(FromSubbasis, MatchesOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = fixtures::random_family(rng, 7, 4);
    EXPECT_EQ(from_subbasis(f).open_sets(),
              fixtures::oracle_opens_from_subbasis(f.carrier(), fixtures::member_sets(f)));
  }
}

TEST(UltraTopology, Examples) {
  Carrier c({"a", "b", "c"});
  std::vector<PointSet> everything;
  for_each_subset(c.all(), [&](PointSet s) { everything.push_back(s); });
  EXPECT_TRUE(ultra_topology(core::SetFamily::of(c, everything)).is_discrete());
  EXPECT_EQ(ultra_topology(family(c, {{"a", "b", "c"}})), FinSpace::chaotic(c));
  EXPECT_EQ(ultra_topology(family(c, {{"a", "b"}})).closed_sets(),
            (std::vector<PointSet>{PointSet{}, PointSet{2}, PointSet{0, 1}, c.all()}));
}

TEST(UltraTopology, ClosedSetsAreStableSets) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = fixtures::random_family(rng, 8, 5);
    EXPECT_EQ(ultra_topology(f).closed_sets(), fixtures::oracle_stable_sets(f));
  }
}

TEST(UltraTopology, InvariantUnderTransforms) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = fixtures::random_family(rng, 10, 4);
    auto u = ultra_topology(f);
    auto t = core::family_transforms(f);
    EXPECT_EQ(ultra_topology(t.intersections), u);
    EXPECT_EQ(ultra_topology(t.unions), u);
    EXPECT_EQ(ultra_topology(core::atom_family(f)), u);
    for (auto b : core::atoms(f).elements()) EXPECT_TRUE(u.is_clopen(b));
    if (f.separates_points()) { EXPECT_TRUE(u.is_discrete()); }
  }
}

TEST(UltraTopology, StableClosureIsTopologicalClosure) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = fixtures::random_family(rng, 7, 4);
    auto u = ultra_topology(f);
    auto stable = fixtures::oracle_stable_sets(f);
    for_each_subset(f.carrier().all(), [&](PointSet y) {
      auto oracle = fixtures::oracle_smallest_stable_superset(stable, y);
      ASSERT_TRUE(oracle.has_value());
      EXPECT_EQ(core::stable_closure(y, f), *oracle);
      EXPECT_EQ(u.closure(y), *oracle);
    });
  }
}

TEST(UltraTopology, RefinesGeneratedTopology) {
  std::mt19937_64 rng(35);
  int strict = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto f = fixtures::random_family(rng, 7, 4);
    auto generated = from_subbasis(f);
    auto u = ultra_topology(f);
    EXPECT_TRUE(u.refines(generated));
    if (is_t0(generated)) {
      EXPECT_EQ(patch_topology(generated), u);
      if (!generated.is_discrete()) {
        EXPECT_NE(u, generated);
        ++strict;
      }
    }
  }
  EXPECT_GT(strict, 0);
}

TEST(Specialization, Sierpinski) {
  auto p = specialization_order(sierpinski());
  EXPECT_TRUE(p.leq(1, 0));   // b ∈ cl{a}
  EXPECT_FALSE(p.leq(0, 1));
  EXPECT_EQ(p.covers(), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}}));
}

TEST(Specialization, DiscreteIsAntichainChaoticIsNotT0) {
  Carrier c({"a", "b", "c"});
  auto p = specialization_order(FinSpace::discrete(c));
  EXPECT_TRUE(p.covers().empty());
  EXPECT_EQ(p.maximal_elements(), c.all());
  try {
    specialization_order(FinSpace::chaotic(ab()));
    FAIL() << "expected NotT0Error";
  } catch (const NotT0Error& e) {
    EXPECT_EQ(e.first(), "a");
    EXPECT_EQ(e.second(), "b");
  }
}

TEST(Poset, ValidatesOrderAxioms) {
  auto c = ab();
  EXPECT_THROW(Poset(c, {PointSet{}, PointSet{1}}), DomainError);              // not reflexive
  EXPECT_THROW(Poset(c, {PointSet{0, 1}, PointSet{0, 1}}), DomainError);       // not antisymmetric
  Carrier abc({"a", "b", "c"});
  EXPECT_THROW(Poset(abc, {PointSet{0}, PointSet{0, 1}, PointSet{1, 2}}), DomainError);  // not transitive
  EXPECT_THROW(Poset::from_pairs(abc, {{0, 1}, {1, 2}}), DomainError);  // pairs are not closed for you
  EXPECT_NO_THROW(Poset::from_pairs(abc, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST(Spectral, Examples) {
  auto r = is_spectral(sierpinski());
  EXPECT_TRUE(r.t0);
  EXPECT_TRUE(r.sober);
  EXPECT_TRUE(r.quasi_compact);
  EXPECT_TRUE(r.compact_open_basis);
  EXPECT_TRUE(r.ultrafilter_criterion);
  EXPECT_TRUE(r.spectral);

  auto chaotic = is_spectral(FinSpace::chaotic(ab()));
  EXPECT_FALSE(chaotic.t0);
  EXPECT_FALSE(chaotic.spectral);
  ASSERT_TRUE(chaotic.indistinguishable.has_value());
  EXPECT_EQ(chaotic.indistinguishable->first, "a");
}

TEST(Spectral, VerdictEqualsT0) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 300; ++trial) {
    auto s = random_space(rng, 7);
    EXPECT_EQ(is_spectral(s).spectral, is_t0(s));
  }
}

TEST(Spectral, IrreducibleClosedSetsArePointClosures) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_space(rng, 7);
    for (auto c : irreducible_closed_sets(s)) {
      bool generic = false;
      for (auto x : c.indices()) generic |= s.point_closure(x) == c;
      EXPECT_TRUE(generic);
    }
  }
}

TEST(Patch, Examples) {
  EXPECT_TRUE(patch_topology(sierpinski()).is_discrete());
  EXPECT_EQ(patch_topology(FinSpace::chaotic(ab())), FinSpace::chaotic(ab()));
}

TEST(Patch, PartitionOfIndistinguishabilityAndBasisUltra) {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_space(rng, 7);
    auto patch = patch_topology(s);
    EXPECT_EQ(patch, FinSpace::from_partition(s.carrier(), indistinguishability_classes(s)));
    EXPECT_EQ(patch, ultra_topology(minimal_open_basis(s)));
    if (is_t0(s)) { EXPECT_TRUE(patch.is_discrete()); }
  }
}

TEST(GenericClosure, Examples) {
  auto s = sierpinski();
  EXPECT_EQ(generic_closure(s, PointSet{1}), s.carrier().all());
  EXPECT_EQ(generic_closure(s, PointSet{0}), PointSet{0});
  EXPECT_EQ(generic_closure(s, s.carrier().all()), s.carrier().all());
  auto d = FinSpace::discrete(Carrier({"a", "b", "c"}));
  for_each_subset(d.carrier().all(), [&](PointSet y) { EXPECT_EQ(generic_closure(d, y), y); });
  EXPECT_THROW(generic_closure(s, PointSet{4}), DomainError);
}

TEST(GenericClosure, ClosedInUltraTopologyOfBasis) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_space(rng, 8);
    auto u = ultra_topology(minimal_open_basis(s));
    for_each_subset(s.carrier().all(), [&](PointSet y) {
      auto g = generic_closure(s, y);
      EXPECT_TRUE(y.subset_of(g));
      EXPECT_TRUE(u.is_closed(g));
      EXPECT_TRUE(s.is_open(g));  // generizations form an up-set, i.e. an open set
    });
  }
}

TEST(Continuity, IdentityAndConstantMaps) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_space(rng, 6);
    PointMap id;
    for (std::size_t x = 0; x < s.size(); ++x) id.image.push_back(x);
    EXPECT_TRUE(is_continuous(id, s, s));
    auto t = random_t0_space(rng, 5);
    // A point of a T0 space whose closure is itself: take a minimal element.
    std::size_t closed_point = 0;
    for (std::size_t y = 0; y < t.size(); ++y)
      if (t.point_closure(y).size() == 1) closed_point = y;
    ASSERT_EQ(t.point_closure(closed_point).size(), 1u);
    EXPECT_TRUE(is_continuous(PointMap{std::vector<std::size_t>(s.size(), closed_point)}, s, t));
  }
}

TEST(Continuity, Errors) {
  auto s = sierpinski();
  EXPECT_THROW(is_continuous(PointMap{{0}}, s, s), DomainError);
  EXPECT_THROW(is_continuous(PointMap{{0, 7}}, s, s), DomainError);
  // Swapping the two points of the Sierpiński space is not continuous.
  EXPECT_FALSE(is_continuous(PointMap{{1, 0}}, s, s));
}

TEST(Continuity, UltraTransport) {
  std::mt19937_64 rng(41);
  int hypotheses = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto f = fixtures::random_family(rng, 5, 4);
    auto g = fixtures::random_family(rng, 5, 2);
    std::uniform_int_distribution<std::size_t> pick(0, g.carrier().size() - 1);
    PointMap map;
    for (std::size_t x = 0; x < f.carrier().size(); ++x) map.image.push_back(pick(rng));
    // Adjoin the preimages so the hypothesis holds for half of the trials.
    if (trial % 2 == 0) {
      auto sets = fixtures::member_sets(f);
      for (const auto& m : g.members()) sets.push_back(map.preimage(m.set));
      f = core::SetFamily::of(f.carrier(), sets);
    }
    auto r = ultra_transport(map, f, g);
    if (r.hypothesis) {
      ++hypotheses;
      EXPECT_TRUE(r.ultra_continuous);
    }
  }
  EXPECT_GE(hypotheses, 150);
}

TEST(Duality, Examples) {
  auto chain = Poset::from_pairs(ab(), {{1, 0}});
  EXPECT_EQ(poset_to_space(chain), sierpinski());
  Carrier c({"a", "b", "c", "d"});
  EXPECT_EQ(poset_to_space(Poset::from_pairs(c, {})), FinSpace::discrete(c));
}

TEST(Duality, RoundTrips) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> n(1, 7);
    auto p = fixtures::random_poset(rng, n(rng), 0.35);
    auto s = poset_to_space(p);
    EXPECT_EQ(space_to_poset(s), p);
    for (auto c : s.closed_sets())
      for (auto x : c.indices()) EXPECT_TRUE(p.down_set(x).subset_of(c));
  }
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_space(rng, 7);
    if (!is_t0(s)) continue;
    EXPECT_EQ(poset_to_space(specialization_order(s)), s);
  }
}

TEST(Duality, PosetCountsMatchOeis) {
  // Labeled posets on n points: 1, 3, 19, 219 (OEIS A001035).
  EXPECT_EQ(fixtures::all_posets(1).size(), 1u);
  EXPECT_EQ(fixtures::all_posets(2).size(), 3u);
  EXPECT_EQ(fixtures::all_posets(3).size(), 19u);
  EXPECT_EQ(fixtures::all_posets(4).size(), 219u);
}
