#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsys/tsys.hpp"

using namespace tsys;

TEST(Chain, DegenerateSingleton) {
  auto c0 = FiniteLattice::chain(0);
  EXPECT_EQ(c0->size(), 1);
  EXPECT_EQ(c0->bottom(), 0);
  EXPECT_EQ(c0->top(), 0);
  EXPECT_TRUE(c0->is_chain());
}

TEST(Chain, OrderIsIntegerOrder) {
  auto c2 = FiniteLattice::chain(2);
  EXPECT_EQ(c2->size(), 3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) EXPECT_EQ(c2->le(x, y), x <= y);
}

TEST(Chain, MeetMinJoinMax) {
  auto c6 = FiniteLattice::chain(6);
  EXPECT_EQ(c6->join(3, 5), 5);
  EXPECT_EQ(c6->meet(3, 5), 3);
  auto c4 = FiniteLattice::chain(4);
  EXPECT_EQ(c4->meet(1, 3), 1);
}

TEST(Chain, NegativeRejected) { EXPECT_THROW(FiniteLattice::chain(-1), Error); }

TEST(BuildLattice, DiamondB2) {
  auto b2 = FiniteLattice::boolean(2);
  EXPECT_EQ(b2->size(), 4);
  EXPECT_EQ(b2->meet(1, 2), 0);  // the two incomparable middles
  EXPECT_EQ(b2->join(1, 2), 3);
  EXPECT_EQ(b2->bottom(), 0);
  EXPECT_EQ(b2->top(), 3);
  EXPECT_FALSE(b2->is_chain());
}

TEST(BuildLattice, ForkHasNoJoin) {
  // bottom below three incomparable atoms
  BitRel leq(4);
  for (int i = 0; i < 4; ++i) leq.set(i, i);
  for (int a : {1, 2, 3}) leq.set(0, a);
  try {
    FiniteLattice::from_order(leq);
    FAIL() << "fork accepted as a lattice";
  } catch (const NotALattice& e) {
    EXPECT_EQ(e.x, 1);
    EXPECT_EQ(e.y, 2);
  }
}

TEST(BuildLattice, ChainRelationEqualsChain) {
  BitRel leq(3);
  for (int x = 0; x < 3; ++x)
    for (int y = x; y < 3; ++y) leq.set(x, y);
  auto built = FiniteLattice::from_order(leq);
  EXPECT_TRUE(*built == *FiniteLattice::chain(2));
}

TEST(BuildLattice, RejectsNonPartialOrder) {
  BitRel cyclic(2);
  cyclic.set(0, 0);
  cyclic.set(1, 1);
  cyclic.set(0, 1);
  cyclic.set(1, 0);
  EXPECT_THROW(FiniteLattice::from_order(cyclic), NotAPartialOrder);
  BitRel irreflexive(2);
  irreflexive.set(0, 1);
  EXPECT_THROW(FiniteLattice::from_order(irreflexive), NotAPartialOrder);
}

TEST(MeetJoin, IndexOutOfRange) {
  auto c2 = FiniteLattice::chain(2);
  EXPECT_THROW(c2->meet(0, 3), std::out_of_range);
  EXPECT_THROW(c2->join(-1, 0), std::out_of_range);
}

TEST(MeetJoin, IdempotentOnEveryElement) {
  for (const auto& L : {FiniteLattice::boolean(3), FiniteLattice::divisors(12),
                        FiniteLattice::chain(4)})
    for (int x = 0; x < L->size(); ++x) {
      EXPECT_EQ(L->meet(x, x), x);
      EXPECT_EQ(L->join(x, x), x);
    }
}

// meet is the greatest lower bound and join the least upper bound, checked
// against the order directly.
TEST(MeetJoin, BoundsAreExtremal) {
  for (const auto& L :
       {FiniteLattice::chain(5), FiniteLattice::boolean(2),
        FiniteLattice::boolean(3), FiniteLattice::divisors(12),
        oracles::diamond_m3()}) {
    const int n = L->size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int m = L->meet(x, y);
        const int j = L->join(x, y);
        EXPECT_TRUE(L->le(m, x));
        EXPECT_TRUE(L->le(m, y));
        EXPECT_TRUE(L->le(x, j));
        EXPECT_TRUE(L->le(y, j));
        for (int z = 0; z < n; ++z) {
          if (L->le(z, x) && L->le(z, y)) EXPECT_TRUE(L->le(z, m));
          if (L->le(x, z) && L->le(y, z)) EXPECT_TRUE(L->le(j, z));
        }
      }
  }
}

TEST(Divisors, TwelveHasSixDivisors) {
  auto d = FiniteLattice::divisors(12);
  EXPECT_EQ(d->size(), 6);  // 1 2 3 4 6 12
  EXPECT_FALSE(d->is_chain());
}

TEST(IsLatticePoset, ChainsAreLattices) {
  for (int n = 0; n <= 8; ++n)
    EXPECT_TRUE(is_lattice_poset(PosetRelation(FiniteLattice::chain(n)->order())));
}

TEST(IsLatticePoset, ForkIsNot) {
  BitRel leq(4);
  for (int i = 0; i < 4; ++i) leq.set(i, i);
  for (int a : {1, 2, 3}) leq.set(0, a);
  EXPECT_FALSE(is_lattice_poset(PosetRelation(leq)));
}

TEST(IsLatticePoset, LargeKnownLattices) {
  EXPECT_TRUE(is_lattice_poset(PosetRelation(FiniteLattice::boolean(7)->order())));
  EXPECT_TRUE(is_lattice_poset(PosetRelation(FiniteLattice::chain(100)->order())));
}

TEST(Intervals, TwoElementChain) {
  const auto iv = intervals(PosetRelation(FiniteLattice::chain(1)->order()));
  ASSERT_EQ(iv.size(), 3u);
  EXPECT_EQ(iv[0], (Interval{0, 0}));
  EXPECT_EQ(iv[1], (Interval{0, 1}));
  EXPECT_EQ(iv[2], (Interval{1, 1}));
}

TEST(Intervals, CardinalityMatchesDoubleLoop) {
  for (const auto& L :
       {FiniteLattice::chain(4), FiniteLattice::boolean(3),
        FiniteLattice::divisors(12), oracles::diamond_m3()}) {
    PosetRelation p(L->order());
    std::size_t direct = 0;
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (p.le(a, b)) ++direct;
    EXPECT_EQ(intervals(p).size(), direct);
  }
}
