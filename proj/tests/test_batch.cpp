#include <gtest/gtest.h>

#include <random>

#include "ringmig/batch.hpp"
#include "ringmig/workloads.hpp"

namespace ringmig {
namespace {

TEST(MapIndexed, ParallelMatchesSerialOrder) {
    auto square = [](std::size_t i) { return static_cast<long>(i * i); };
    const auto serial = map_indexed(500, square, Execution::Serial);
    const auto parallel = map_indexed(500, square, Execution::Parallel);
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(serial[21], 441);
}

TEST(MapIndexed, RethrowsFirstFailure) {
    auto fn = [](std::size_t i) -> int {
        if (i == 7) throw std::runtime_error("seven");
        if (i == 9) throw std::logic_error("nine");
        return 0;
    };
    try {
        map_indexed(20, fn, Execution::Parallel);
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "seven");
    }
}

TEST(MapIndexed, Empty) { EXPECT_TRUE(map_indexed(0, [](std::size_t) { return 1; }, Execution::Parallel).empty()); }

TEST(CheckBatch, SerialAndParallelAgree) {
    std::mt19937_64 rng(21);
    std::vector<Instance> instances;
    for (int i = 0; i < 60; ++i) {
        instances.push_back(random_instance(RingSize{2 * (2 + static_cast<std::int64_t>(rng() % 100))},
                                            static_cast<std::int64_t>(rng() % 30), rng()));
    }
    const auto& k = canonical_constants();
    const auto serial = check_batch(instances, k, Execution::Serial, DpBudget{});
    const auto parallel = check_batch(instances, k, Execution::Parallel, DpBudget{});
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].triact_cost, parallel[i].triact_cost);
        EXPECT_EQ(serial[i].opt_cost, parallel[i].opt_cost);
        EXPECT_EQ(serial[i].summary.max_excess, parallel[i].summary.max_excess);
        EXPECT_TRUE(serial[i].summary.clean());
    }
}

}  // namespace
}  // namespace ringmig
