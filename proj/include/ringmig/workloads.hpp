#pragma once

#include <cstdint>
#include <vector>

#include "ringmig/constants.hpp"
#include "ringmig/instance.hpp"

namespace ringmig {

/// The four nodes of the lower-bound adversary. s = 0, a clockwise of s,
/// b counter-clockwise of s, c a further d(s, a) beyond b.
struct AdversaryLayout {
    Position s, a, b, c;
    std::int64_t d_sa;  // = d(b, c)
    std::int64_t d_sb;
};

inline constexpr std::int64_t kMinAdversaryRing = 10'000;

/// Integer layout for ring size L. d(s, a) = ceil(p_x L) and
/// d(s, b) = ceil(p_y L) - 1: point p lies on y1, y2 and y3 at once, so b is
/// placed strictly below p_y to land in Case E rather than on the Case D
/// boundary. Throws std::invalid_argument if L < kMinAdversaryRing.
AdversaryLayout adversary_layout(RingSize ring, const DerivedConstants& constants);

/// Requests (a, b, c, s) repeated `periods` times, starting from s.
Instance theorem2_instance(RingSize ring, std::int64_t periods, const DerivedConstants& constants);

/// Cost of the adversary's explicit offline algorithm as accounted in the
/// lower-bound argument: move s -> a before the first request, then per
/// period serve b from a, move a -> c, serve c free, serve s from c and move
/// c -> a. Equals d(s,a) * (1 + 2 * periods).
std::int64_t reference_offline_cost(RingSize ring, std::int64_t periods,
                                    const DerivedConstants& constants);

/// The same algorithm realized under the serve-then-migrate cost model
/// (the initial move happens after serving the first request and the last
/// return to a is dropped). Returns t_0..t_n.
std::vector<Position> reference_offline_schedule(RingSize ring, std::int64_t periods,
                                                 const DerivedConstants& constants);

/// m independent uniform positions; s0 uniform too. Deterministic in seed.
Instance random_instance(RingSize ring, std::int64_t m, std::uint64_t seed);

/// Random walk: each request within step_bound of the previous one (the
/// first within step_bound of s0). step_bound must be < L/2.
Instance walk_instance(RingSize ring, std::int64_t m, std::int64_t step_bound, std::uint64_t seed);

}  // namespace ringmig
