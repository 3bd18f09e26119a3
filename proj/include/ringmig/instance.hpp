#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringmig/ring.hpp"

namespace ringmig {

/// Raised when an instance or schedule violates its invariants. field()
/// names the offending input field.
class InvalidInput : public std::invalid_argument {
public:
    InvalidInput(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct Instance {
    RingSize ring;
    Position s0;
    std::vector<Position> requests;
};

/// Throws InvalidInput if s0 or any request lies outside [0, L).
void validate(const Instance& instance);

/// Server locations s_0..s_n (servers.front() is s_0) with their total cost.
struct Schedule {
    std::vector<Position> servers;
    std::int64_t total_cost = 0;
};

/// Cost of serving the requests with the page at servers[i-1] and then
/// migrating to servers[i]. `servers` holds s_1..s_n (not s_0).
std::int64_t schedule_cost(const Instance& instance, std::span<const Position> servers);

}  // namespace ringmig
