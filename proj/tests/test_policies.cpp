#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ringmig/policies.hpp"
#include "ringmig/workloads.hpp"

namespace ringmig {
namespace {

const DerivedConstants& K() { return canonical_constants(); }

PolicyState state_at(std::int64_t len, Position server, Position prev) {
    return PolicyState{RingSize{len}, server, prev};
}

TEST(TriAct, CoincidentPreviousRequestIsCaseB) {
    const Decision d = triact_decide(state_at(1'000'000, 0, 0), 354990, K());
    EXPECT_EQ(d.label, CaseLabel::B);
    EXPECT_EQ(d.new_server, 0);
    EXPECT_EQ(d.service_cost, 354990);
    EXPECT_EQ(d.migration_cost, 0);
}

TEST(TriAct, AdversaryConfigurationIsCaseE) {
    const std::int64_t len = 1'000'000;
    const AdversaryLayout l = adversary_layout(RingSize{len}, K());
    ASSERT_EQ(l.d_sa, 354974);
    ASSERT_EQ(l.d_sb, 412785);
    const Decision d = triact_decide(state_at(len, 0, l.a), l.b, K());
    EXPECT_EQ(d.label, CaseLabel::E);
    EXPECT_EQ(d.new_server, l.b);
    EXPECT_EQ(d.service_cost, 412785);
    EXPECT_EQ(d.migration_cost, 412785);
    EXPECT_TRUE(d.near_boundary);
}

TEST(TriAct, CoarselyRoundedAdversaryPointFallsInCaseD) {
    // (354990, 412800) is above both y1 and y2 at that x, so the D branch
    // fires first even though the point is also below y3.
    const std::int64_t len = 1'000'000;
    const Decision d = triact_decide(state_at(len, 0, 354990), len - 412800, K());
    EXPECT_EQ(d.label, CaseLabel::D);
    EXPECT_EQ(d.new_server, 354990);
}

TEST(TriAct, CaseA) {
    const Decision d = triact_decide(state_at(100, 0, 10), 4, K());
    EXPECT_EQ(d.label, CaseLabel::A);
    EXPECT_EQ(d.new_server, 4);
    EXPECT_EQ(d.service_cost, 4);
    EXPECT_EQ(d.migration_cost, 4);
}

TEST(TriAct, CaseC) {
    // s between r_prev and r_cur on the short arcs.
    const Decision d = triact_decide(state_at(100, 10, 0), 20, K());
    EXPECT_EQ(d.label, CaseLabel::C);
    EXPECT_EQ(d.new_server, 10);
    EXPECT_EQ(d.migration_cost, 0);
}

TEST(TriAct, ActionMatchesLabel) {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 20000; ++iter) {
        const std::int64_t len = 2 * std::uniform_int_distribution<std::int64_t>(2, 250)(rng);
        std::uniform_int_distribution<Position> pick(0, len - 1);
        const PolicyState st = state_at(len, pick(rng), pick(rng));
        const Position r = pick(rng);
        const Decision d = triact_decide(st, r, K());
        switch (d.label) {
            case CaseLabel::A:
            case CaseLabel::E: ASSERT_EQ(d.new_server, r); break;
            case CaseLabel::B:
            case CaseLabel::D: ASSERT_EQ(d.new_server, st.prev_request); break;
            case CaseLabel::C:
            case CaseLabel::F: ASSERT_EQ(d.new_server, st.server); break;
            case CaseLabel::None: FAIL() << "TriAct must label every step";
        }
        ASSERT_EQ(d.service_cost, dist(st.ring, st.server, r));
        ASSERT_EQ(d.migration_cost, dist(st.ring, st.server, d.new_server));
    }
}

TEST(TriAct, FarCasesMatchRegionOracle) {
    const std::int64_t len = 120;
    const RingSize ring{len};
    const long double rho = oracle::bisect_rho();
    std::size_t far = 0;
    for (Position prev = 0; prev < len; ++prev) {
        for (Position r = 0; r < len; ++r) {
            const TripleRelation rel = classify_triple(ring, 0, prev, r);
            if (rel.variant != TripleVariant::SumEqualsL) continue;
            ++far;
            const Decision d = triact_decide(PolicyState{ring, 0, prev}, r, K());
            const auto region = oracle::far_region(rel.x, rel.y, len, rho);
            const CaseLabel expected = region == oracle::Region::D   ? CaseLabel::D
                                       : region == oracle::Region::E ? CaseLabel::E
                                                                     : CaseLabel::F;
            ASSERT_EQ(d.label, expected) << "x=" << rel.x << " y=" << rel.y;
        }
    }
    EXPECT_GT(far, 0u);
}

TEST(NeverMove, Examples) {
    const Decision zero = never_move_decide(state_at(10, 0, 0), 0);
    EXPECT_EQ(zero.service_cost + zero.migration_cost, 0);
    EXPECT_EQ(zero.new_server, 0);
    const Decision five = never_move_decide(state_at(10, 0, 0), 5);
    EXPECT_EQ(five.service_cost, 5);
    EXPECT_EQ(five.new_server, 0);
    EXPECT_EQ(five.label, CaseLabel::None);
}

TEST(NeverMove, FixedDistanceSequence) {
    const Instance inst{RingSize{40}, 3, std::vector<Position>(17, 10)};
    EXPECT_EQ(run_policy(inst, NeverMovePolicy{}).schedule.total_cost, 17 * 7);
}

TEST(MoveToRequest, Examples) {
    const Decision zero = move_to_request_decide(state_at(10, 0, 0), 0);
    EXPECT_EQ(zero.service_cost + zero.migration_cost, 0);
    const Decision three = move_to_request_decide(state_at(10, 0, 0), 3);
    EXPECT_EQ(three.service_cost, 3);
    EXPECT_EQ(three.migration_cost, 3);
    EXPECT_EQ(three.new_server, 3);
}

TEST(MoveToRequest, AlternatingPairCostsTwoKPerRequest) {
    // Requests alternate between nodes 5 and 12 (k = 7), server starts at 5.
    // Each request after the first costs k to serve plus k to follow.
    const std::int64_t m = 9;
    Instance inst{RingSize{30}, 5, {}};
    for (std::int64_t i = 0; i < 2 * m; ++i) inst.requests.push_back(i % 2 == 0 ? 12 : 5);
    EXPECT_EQ(run_policy(inst, MoveToRequestPolicy{}).schedule.total_cost, 2 * (2 * m) * 7);
}

TEST(MakePolicy, KnownAndUnknownNames) {
    for (auto name : policy_names()) EXPECT_EQ(make_policy(name)->name(), name);
    try {
        make_policy("lru");
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_EQ(e.field(), "policy");
    }
}

TEST(RunPolicy, EmptySequence) {
    const PolicyRun run = run_policy(Instance{RingSize{8}, 3, {}}, TriActPolicy{});
    EXPECT_EQ(run.schedule.total_cost, 0);
    EXPECT_EQ(run.schedule.servers, std::vector<Position>{3});
    EXPECT_TRUE(run.steps.empty());
}

TEST(RunPolicy, SingleRequestIsCaseBWithoutMigration) {
    const PolicyRun run = run_policy(Instance{RingSize{50}, 4, {21}}, TriActPolicy{});
    ASSERT_EQ(run.steps.size(), 1u);
    EXPECT_EQ(run.steps[0].label, CaseLabel::B);
    EXPECT_EQ(run.schedule.total_cost, 17);
    EXPECT_EQ(run.steps[0].migration_cost, 0);
}

TEST(RunPolicy, RejectsOffRingPositions) {
    EXPECT_THROW(run_policy(Instance{RingSize{10}, 0, {3, 10}}, TriActPolicy{}), InvalidInput);
    EXPECT_THROW(run_policy(Instance{RingSize{10}, -1, {}}, TriActPolicy{}), InvalidInput);
}

TEST(RunPolicy, CostIsSumOfSteps) {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        const Instance inst = random_instance(RingSize{2 * (2 + static_cast<std::int64_t>(rng() % 100))},
                                              static_cast<std::int64_t>(rng() % 40), rng());
        for (auto name : policy_names()) {
            const PolicyRun run = run_policy(inst, *make_policy(name));
            std::int64_t total = 0;
            for (const StepRecord& s : run.steps) {
                ASSERT_GE(s.service_cost, 0);
                ASSERT_GE(s.migration_cost, 0);
                total += s.service_cost + s.migration_cost;
            }
            ASSERT_EQ(total, run.schedule.total_cost);
            ASSERT_EQ(run.schedule.servers.size(), inst.requests.size() + 1);
        }
    }
}

TEST(RunPolicy, AdversaryTraceAndCost) {
    const RingSize ring{1'000'000};
    const std::int64_t periods = 25;
    const AdversaryLayout l = adversary_layout(ring, K());
    const PolicyRun run = run_policy(theorem2_instance(ring, periods, K()), TriActPolicy{});
    const CaseLabel pattern[] = {CaseLabel::B, CaseLabel::E, CaseLabel::B, CaseLabel::E};
    for (std::size_t i = 0; i < run.steps.size(); ++i) ASSERT_EQ(run.steps[i].label, pattern[i % 4]);
    EXPECT_EQ(run.schedule.total_cost, periods * (2 * l.d_sa + 4 * l.d_sb));
}

}  // namespace
}  // namespace ringmig
