#include "ringmig/instance.hpp"

namespace ringmig {

void validate(const Instance& instance) {
    const RingSize ring = instance.ring;
    if (!ring.contains(instance.s0)) {
        throw InvalidInput("s0", "s0 = " + std::to_string(instance.s0) + " is outside [0, " +
                                     std::to_string(ring.length()) + ")");
    }
    for (std::size_t i = 0; i < instance.requests.size(); ++i) {
        if (!ring.contains(instance.requests[i])) {
            throw InvalidInput("requests", "requests[" + std::to_string(i) + "] = " +
                                               std::to_string(instance.requests[i]) +
                                               " is outside [0, " +
                                               std::to_string(ring.length()) + ")");
        }
    }
}

std::int64_t schedule_cost(const Instance& instance, std::span<const Position> servers) {
    if (servers.size() != instance.requests.size()) {
        throw InvalidInput("schedule", "schedule has " + std::to_string(servers.size()) +
                                           " positions for " +
                                           std::to_string(instance.requests.size()) +
                                           " requests");
    }
    std::int64_t cost = 0;
    Position at = instance.s0;
    for (std::size_t i = 0; i < servers.size(); ++i) {
        if (!instance.ring.contains(servers[i])) {
            throw InvalidInput("schedule", "schedule[" + std::to_string(i) + "] is off the ring");
        }
        cost += dist(instance.ring, at, instance.requests[i]) + dist(instance.ring, at, servers[i]);
        at = servers[i];
    }
    return cost;
}

}  // namespace ringmig
