#include "ringmig/workloads.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace ringmig {

AdversaryLayout adversary_layout(RingSize ring, const DerivedConstants& constants) {
    if (ring.length() < kMinAdversaryRing) {
        throw std::invalid_argument("adversary instance needs L >= " +
                                    std::to_string(kMinAdversaryRing) + ", got " +
                                    std::to_string(ring.length()));
    }
    const double len = static_cast<double>(ring.length());
    AdversaryLayout layout{};
    layout.d_sa = static_cast<std::int64_t>(std::ceil(constants.p.x * len));
    layout.d_sb = static_cast<std::int64_t>(std::ceil(constants.p.y * len)) - 1;
    layout.s = 0;
    layout.a = layout.d_sa;
    layout.b = ring.wrap(-layout.d_sb);
    layout.c = ring.wrap(layout.b - layout.d_sa);
    return layout;
}

Instance theorem2_instance(RingSize ring, std::int64_t periods, const DerivedConstants& constants) {
    if (periods < 1) throw std::invalid_argument("theorem2_instance: periods must be positive");
    const AdversaryLayout layout = adversary_layout(ring, constants);
    Instance instance{ring, layout.s, {}};
    instance.requests.reserve(static_cast<std::size_t>(4 * periods));
    for (std::int64_t k = 0; k < periods; ++k) {
        instance.requests.insert(instance.requests.end(), {layout.a, layout.b, layout.c, layout.s});
    }
    return instance;
}

std::int64_t reference_offline_cost(RingSize ring, std::int64_t periods,
                                    const DerivedConstants& constants) {
    const AdversaryLayout l = adversary_layout(ring, constants);
    const std::int64_t period = dist(ring, l.a, l.b) + dist(ring, l.a, l.c) +
                                dist(ring, l.c, l.s) + dist(ring, l.c, l.a);
    return dist(ring, l.s, l.a) + periods * period;
}

std::vector<Position> reference_offline_schedule(RingSize ring, std::int64_t periods,
                                                 const DerivedConstants& constants) {
    const AdversaryLayout l = adversary_layout(ring, constants);
    std::vector<Position> t;
    t.reserve(static_cast<std::size_t>(4 * periods + 1));
    t.push_back(l.s);
    for (std::int64_t k = 0; k < periods; ++k) {
        // after a, b, c, s
        t.insert(t.end(), {l.a, l.c, l.c, k + 1 < periods ? l.a : l.c});
    }
    return t;
}

Instance random_instance(RingSize ring, std::int64_t m, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("random_instance: m must be non-negative");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Position> pick(0, ring.length() - 1);
    Instance instance{ring, pick(rng), {}};
    instance.requests.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) instance.requests.push_back(pick(rng));
    return instance;
}

Instance walk_instance(RingSize ring, std::int64_t m, std::int64_t step_bound, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("walk_instance: m must be non-negative");
    if (step_bound < 0 || step_bound >= ring.half()) {
        throw std::invalid_argument("walk_instance: step_bound must be in [0, L/2), got " +
                                    std::to_string(step_bound));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Position> start(0, ring.length() - 1);
    std::uniform_int_distribution<std::int64_t> step(-step_bound, step_bound);
    Instance instance{ring, start(rng), {}};
    instance.requests.reserve(static_cast<std::size_t>(m));
    Position at = instance.s0;
    for (std::int64_t i = 0; i < m; ++i) {
        at = ring.wrap(at + step(rng));
        instance.requests.push_back(at);
    }
    return instance;
}

}  // namespace ringmig
