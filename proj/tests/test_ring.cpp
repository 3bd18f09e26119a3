#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ringmig/ring.hpp"

namespace ringmig {
namespace {

TEST(Dist, DirectArc) { EXPECT_EQ(dist(RingSize{10}, 0, 3), 3); }
TEST(Dist, WraparoundArc) { EXPECT_EQ(dist(RingSize{10}, 2, 9), 3); }
TEST(Dist, Antipodal) { EXPECT_EQ(dist(RingSize{10}, 0, 5), 5); }

TEST(Dist, MatchesWalkingOracle) {
    for (std::int64_t len = 4; len <= 24; len += 2) {
        const RingSize ring{len};
        for (Position a = 0; a < len; ++a) {
            for (Position b = 0; b < len; ++b) {
                ASSERT_EQ(dist(ring, a, b), oracle::walk_dist(len, a, b)) << len << ' ' << a << ' ' << b;
            }
        }
    }
}

TEST(RingSize, RejectsOddOrTiny) {
    EXPECT_THROW(RingSize{2}, std::invalid_argument);
    EXPECT_THROW(RingSize{7}, std::invalid_argument);
    EXPECT_THROW(RingSize{-4}, std::invalid_argument);
    EXPECT_NO_THROW(RingSize{4});
}

TEST(RingSize, Wrap) {
    const RingSize ring{10};
    EXPECT_EQ(ring.wrap(-1), 9);
    EXPECT_EQ(ring.wrap(23), 3);
    EXPECT_EQ(ring.wrap(0), 0);
}

TEST(ClassifyTriple, Examples) {
    const TripleRelation a = classify_triple(RingSize{100}, 0, 10, 4);
    EXPECT_EQ(a.variant, TripleVariant::ZeqXminusY);
    EXPECT_EQ(a.x, 10);
    EXPECT_EQ(a.y, 4);
    EXPECT_EQ(a.z, 6);

    const TripleRelation b = classify_triple(RingSize{10}, 0, 3, 3);
    EXPECT_EQ(b.variant, TripleVariant::ZeqXminusY);
    EXPECT_EQ(b.x, 3);
    EXPECT_EQ(b.y, 3);
    EXPECT_EQ(b.z, 0);

    const TripleRelation c = classify_triple(RingSize{100}, 0, 30, 60);
    EXPECT_EQ(c.variant, TripleVariant::SumEqualsL);
    EXPECT_EQ(c.x, 30);
    EXPECT_EQ(c.y, 40);
    EXPECT_EQ(c.z, 30);
}

TEST(ClassifyTriple, CoincidentServerPicksSecondBranch) {
    // x = 0 gives z = y, which is first caught by z = y - x.
    const TripleRelation r = classify_triple(RingSize{20}, 5, 5, 12);
    EXPECT_EQ(r.variant, TripleVariant::ZeqYminusX);
}

// Arc-based oracle: the three points split the ring into three arcs; each
// pairwise distance is min(arc, L - arc).
TEST(ClassifyTriple, ArcDecompositionSmallRings) {
    for (std::int64_t len = 4; len <= 32; len += 2) {
        const RingSize ring{len};
        for (Position p = 0; p < len; ++p) {
            for (Position q = 0; q < len; ++q) {
                const TripleRelation rel = classify_triple(ring, 0, p, q);
                ASSERT_TRUE(relation_holds(rel.variant, rel.x, rel.y, rel.z, ring));
                ASSERT_EQ(rel.x, oracle::walk_dist(len, 0, p));
                ASSERT_EQ(rel.y, oracle::walk_dist(len, 0, q));
                ASSERT_EQ(rel.z, oracle::walk_dist(len, p, q));
            }
        }
    }
}

TEST(ClassifyTriple, DeterministicUnderRepeat) {
    std::mt19937_64 rng(7);
    const RingSize ring{1000};
    std::uniform_int_distribution<Position> pick(0, 999);
    for (int i = 0; i < 1000; ++i) {
        const Position s = pick(rng), a = pick(rng), b = pick(rng);
        const TripleRelation first = classify_triple(ring, s, a, b);
        const TripleRelation second = classify_triple(ring, s, a, b);
        ASSERT_EQ(first.variant, second.variant);
    }
}

}  // namespace
}  // namespace ringmig
