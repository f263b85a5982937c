#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "tsys/tsys.hpp"

using namespace tsys;
using tsys::oracles::chain_system;

TEST(IsTransferSystem, TrivialAndMaximal) {
  for (const auto& L : {FiniteLattice::chain(3), FiniteLattice::boolean(2),
                        FiniteLattice::divisors(12)}) {
    EXPECT_TRUE(is_transfer_system(*L, BitRel::identity(L->size())));
    EXPECT_TRUE(is_transfer_system(*L, L->order()));
  }
}

TEST(IsTransferSystem, RestrictionFailure) {
  // {(0,2)}+ids on [2]: restriction along 1 <= 2 demands (0,1)
  auto c2 = FiniteLattice::chain(2);
  BitRel rel = BitRel::identity(3);
  rel.set(0, 2);
  EXPECT_FALSE(is_transfer_system(*c2, rel));
}

TEST(IsTransferSystem, DimensionMismatch) {
  auto c2 = FiniteLattice::chain(2);
  EXPECT_THROW(is_transfer_system(*c2, BitRel::identity(4)),
               DimensionMismatch);
}

TEST(TransferClosure, IdentitiesAlreadyClosed) {
  auto c3 = FiniteLattice::chain(3);
  auto R = transfer_closure(c3, BitRel::identity(4));
  EXPECT_EQ(R, TransferSystem::trivial(c3));
}

TEST(TransferClosure, OneRestrictionStep) {
  auto c2 = FiniteLattice::chain(2);
  BitRel seed(3);
  seed.set(0, 2);
  auto R = transfer_closure(c2, seed);
  EXPECT_EQ(R, chain_system(2, {{0, 1}, {0, 2}}));
}

TEST(TransferClosure, MaximalIsFixed) {
  auto d12 = FiniteLattice::divisors(12);
  EXPECT_EQ(transfer_closure(d12, d12->order()), TransferSystem::maximal(d12));
}

TEST(TransferClosure, RejectsNonRefiningSeed) {
  auto c2 = FiniteLattice::chain(2);
  BitRel seed(3);
  seed.set(2, 0);
  EXPECT_THROW(transfer_closure(c2, seed), Error);
}

TEST(Enumerate, SmallChainCounts) {
  EXPECT_EQ(enumerate_transfer_systems(FiniteLattice::chain(0)).size(), 1u);
  EXPECT_EQ(enumerate_transfer_systems(FiniteLattice::chain(2)).size(), 5u);
  const auto table = oracles::catalan_table(7);
  for (int n = 0; n <= 5; ++n)
    EXPECT_EQ(enumerate_transfer_systems(FiniteLattice::chain(n)).size(),
              static_cast<std::size_t>(table[n + 1]))
        << "n = " << n;
}

TEST(Enumerate, MatchesBruteForceSubsetFilter) {
  for (const auto& L : {FiniteLattice::chain(4), FiniteLattice::boolean(2),
                        oracles::diamond_m3()})
    EXPECT_EQ(static_cast<long long>(enumerate_transfer_systems(L).size()),
              oracles::count_transfer_systems_brute(*L));
}

TEST(Enumerate, MembersAreClosedAndSorted) {
  for (const auto& L : {FiniteLattice::chain(4), FiniteLattice::boolean(2)}) {
    const auto systems = enumerate_transfer_systems(L);
    for (std::size_t i = 0; i < systems.size(); ++i) {
      EXPECT_TRUE(is_transfer_system(*L, systems[i].rel()));
      BitRel again = systems[i].rel();
      detail::transfer_close(*L, again);
      EXPECT_EQ(again, systems[i].rel());  // closure idempotent on members
      if (i) EXPECT_LT(TransferSystem::compare(systems[i - 1], systems[i]), 0);
    }
  }
}

TEST(LeftClass, MaximalGivesIdentities) {
  for (int n : {2, 3, 4}) {
    auto R = TransferSystem::maximal(FiniteLattice::chain(n));
    EXPECT_EQ(left_class(R).rel, BitRel::identity(n + 1));
  }
}

TEST(LeftClass, TrivialGivesAllComparable) {
  auto c3 = FiniteLattice::chain(3);
  EXPECT_EQ(left_class(TransferSystem::trivial(c3)).rel, c3->order());
}

TEST(LeftClass, WorkedExampleOnChain2) {
  auto R = chain_system(2, {{0, 1}, {0, 2}});
  BitRel expected = BitRel::identity(3);
  expected.set(1, 2);
  EXPECT_EQ(left_class(R).rel, expected);
}

// Galois property of lifting: S ⊆ ^⊠T iff T ⊆ S^⊠, over all morphism
// classes on a fixed chain.
TEST(Lifting, GaloisProperty) {
  for (int n : {2, 3, 4}) {
    const auto L = FiniteLattice::chain(n);
    std::vector<std::pair<int, int>> comp;
    for (int x = 0; x <= n; ++x)
      for (int y = x + 1; y <= n; ++y) comp.emplace_back(x, y);
    const int k = static_cast<int>(comp.size());
    std::vector<BitRel> classes(1 << k, BitRel(0));
    std::vector<BitRel> lefts(1 << k, BitRel(0));
    std::vector<BitRel> rights(1 << k, BitRel(0));
    for (int mask = 0; mask < (1 << k); ++mask) {
      BitRel rel = BitRel::identity(n + 1);
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) rel.set(comp[i].first, comp[i].second);
      classes[mask] = rel;
      lefts[mask] = detail::lifting_left(*L, rel);
      rights[mask] = oracles::lifting_right(*L, rel);
    }
    for (int s = 0; s < (1 << k); ++s)
      for (int t = 0; t < (1 << k); ++t)
        EXPECT_EQ(classes[s].subset_of(lefts[t]),
                  classes[t].subset_of(rights[s]))
            << "n=" << n << " s=" << s << " t=" << t;
  }
}

TEST(Factorize, TrivialAndMaximal) {
  auto c3 = FiniteLattice::chain(3);
  auto trivial = TransferSystem::trivial(c3);
  auto maximal = TransferSystem::maximal(c3);
  EXPECT_EQ(factorize(trivial, 1, 3), 3);  // x L y R y
  EXPECT_EQ(factorize(maximal, 1, 3), 1);  // x L x R y
}

TEST(Factorize, WorkedExampleOnChain2) {
  auto R = chain_system(2, {{0, 1}, {0, 2}});
  EXPECT_EQ(factorize(R, 0, 2), 0);
}

TEST(Factorize, RequiresComparableInput) {
  auto R = TransferSystem::trivial(FiniteLattice::boolean(2));
  EXPECT_THROW(factorize(R, 1, 2), Error);  // incomparable middles
}

// Every comparable pair factors, and the factorizing object is unique.
TEST(Factorize, ExistsUniquelyEverywhere) {
  std::vector<LatticePtr> lattices;
  for (int n = 0; n <= 5; ++n) lattices.push_back(FiniteLattice::chain(n));
  lattices.push_back(FiniteLattice::boolean(2));
  lattices.push_back(FiniteLattice::boolean(3));
  for (const auto& L : lattices)
    for (const auto& R : enumerate_transfer_systems(L)) {
      const BitRel lc = detail::lifting_left(*L, R.rel());
      for (int x = 0; x < L->size(); ++x)
        for (int y = 0; y < L->size(); ++y) {
          if (!L->le(x, y)) continue;
          int hits = 0;
          for (int z = 0; z < L->size(); ++z)
            if (lc.at(x, z) && R.contains(z, y)) ++hits;
          EXPECT_EQ(hits, 1);
          EXPECT_TRUE(lc.at(x, factorize(R, x, y)));
        }
    }
}

TEST(WeakEquivalences, EqualPairGivesEverything) {
  auto c3 = FiniteLattice::chain(3);
  for (const auto& R : enumerate_transfer_systems(c3))
    EXPECT_EQ(weak_equivalences(R, R).rel, c3->order());
}

TEST(WeakEquivalences, WorkedExampleOnChain2) {
  auto R = chain_system(2, {{0, 1}});
  auto Rp = chain_system(2, {{0, 1}, {0, 2}});
  BitRel expected = BitRel::identity(3);
  expected.set(0, 1);
  expected.set(1, 2);
  EXPECT_EQ(weak_equivalences(R, Rp).rel, expected);
  EXPECT_FALSE(weak_equivalences(R, Rp).contains(0, 2));
}

TEST(WeakEquivalences, TrivialUnderMaximal) {
  auto c4 = FiniteLattice::chain(4);
  EXPECT_EQ(weak_equivalences(TransferSystem::trivial(c4),
                              TransferSystem::maximal(c4))
                .rel,
            BitRel::identity(5));
}

TEST(WeakEquivalences, RejectsNonPremodelPair) {
  auto c2 = FiniteLattice::chain(2);
  EXPECT_THROW(weak_equivalences(TransferSystem::maximal(c2),
                                 TransferSystem::trivial(c2)),
               NotAPremodelPair);
}

TEST(PiMap, TrivialAndMaximal) {
  auto c3 = FiniteLattice::chain(3);
  EXPECT_EQ(pi_map(TransferSystem::trivial(c3)),
            (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(pi_map(TransferSystem::maximal(c3)),
            (std::vector<int>{3, 3, 3, 3}));
}

TEST(PiMap, ModelStructureExampleOnChain6) {
  auto R = chain_system(6, {{1, 2}, {1, 3}});
  auto Rp = chain_system(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                             {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
  EXPECT_EQ(pi_map(R), (std::vector<int>{0, 3, 2, 3, 4, 5, 6}));
  EXPECT_EQ(pi_map(Rp), (std::vector<int>{0, 6, 2, 6, 6, 5, 6}));
}

TEST(PiMap, RequiresChain) {
  EXPECT_THROW(pi_map(TransferSystem::trivial(FiniteLattice::boolean(2))),
               NotAChain);
}

// pi is inflationary, idempotent, and i R j iff i <= j <= pi(i).
TEST(PiMap, CharacterizesTheRelation) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& R :
         enumerate_transfer_systems(FiniteLattice::chain(n))) {
      const auto pi = pi_map(R);
      for (int i = 0; i <= n; ++i) {
        EXPECT_GE(pi[i], i);
        EXPECT_EQ(pi[pi[i]], pi[i]);
        for (int j = 0; j <= n; ++j)
          EXPECT_EQ(R.contains(i, j), i <= j && j <= pi[i]);
      }
    }
}

TEST(ThetaMap, TrivialMaximalAndWorkedExample) {
  auto c3 = FiniteLattice::chain(3);
  EXPECT_EQ(theta_map(TransferSystem::trivial(c3)),
            (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(theta_map(TransferSystem::maximal(c3)),
            (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(theta_map(chain_system(2, {{0, 1}, {0, 2}})),
            (std::vector<int>{0, 1, 1}));
}

// theta duality: (x, y) in the left class iff theta(y) <= x <= y, and
// theta(i) is the least y with y L i.
TEST(ThetaMap, DualCharacterization) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& R :
         enumerate_transfer_systems(FiniteLattice::chain(n))) {
      const auto theta = theta_map(R);
      const BitRel lc = left_class(R).rel;
      for (int y = 0; y <= n; ++y) {
        int least = y;
        for (int x = 0; x <= y; ++x)
          if (lc.at(x, y)) {
            least = x;
            break;
          }
        EXPECT_EQ(theta[y], least);
        EXPECT_LE(theta[y], y);
        EXPECT_EQ(theta[theta[y]], theta[y]);
        for (int x = 0; x <= n; ++x)
          EXPECT_EQ(lc.at(x, y) && x <= y, theta[y] <= x && x <= y);
      }
    }
}
