#include "ringmig/ring.hpp"

#include <stdexcept>
#include <string>

namespace ringmig {

RingSize::RingSize(std::int64_t length) : length_(length) {
    if (length < 4 || length % 2 != 0) {
        throw std::invalid_argument("ring length must be even and >= 4, got " +
                                    std::to_string(length));
    }
}

std::string_view to_string(TripleVariant v) noexcept {
    switch (v) {
        case TripleVariant::ZeqXminusY: return "z=x-y";
        case TripleVariant::ZeqYminusX: return "z=y-x";
        case TripleVariant::ZeqXplusY: return "z=x+y";
        case TripleVariant::SumEqualsL: return "x+y+z=L";
    }
    return "?";
}

bool relation_holds(TripleVariant v, std::int64_t x, std::int64_t y, std::int64_t z,
                    RingSize ring) noexcept {
    switch (v) {
        case TripleVariant::ZeqXminusY: return z == x - y;
        case TripleVariant::ZeqYminusX: return z == y - x;
        case TripleVariant::ZeqXplusY: return z == x + y;
        case TripleVariant::SumEqualsL: return x + y + z == ring.length();
    }
    return false;
}

TripleRelation classify_triple(RingSize ring, Position s, Position r_prev, Position r_cur) {
    const std::int64_t x = dist(ring, s, r_prev);
    const std::int64_t y = dist(ring, s, r_cur);
    const std::int64_t z = dist(ring, r_prev, r_cur);
    for (auto v : {TripleVariant::ZeqXminusY, TripleVariant::ZeqYminusX,
                   TripleVariant::ZeqXplusY, TripleVariant::SumEqualsL}) {
        if (relation_holds(v, x, y, z, ring)) return {v, x, y, z};
    }
    // Unreachable for valid positions: the three arcs between the points sum
    // to L, and at most one of them exceeds L/2.
    throw std::logic_error("classify_triple: no distance relation holds");
}

}  // namespace ringmig
