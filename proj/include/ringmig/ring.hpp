#pragma once

#include <cstdint>
#include <string_view>

namespace ringmig {

/// Integer arc-length coordinate on the ring, always in [0, L).
using Position = std::int64_t;

/// Circumference of a ring network. Even and at least 4, so the antipodal
/// distance L/2 is an exact integer.
class RingSize {
public:
    explicit RingSize(std::int64_t length);

    std::int64_t length() const noexcept { return length_; }
    std::int64_t half() const noexcept { return length_ / 2; }
    bool contains(Position p) const noexcept { return p >= 0 && p < length_; }

    /// Reduces any integer onto [0, L).
    Position wrap(std::int64_t p) const noexcept {
        const std::int64_t r = p % length_;
        return r < 0 ? r + length_ : r;
    }

    friend bool operator==(RingSize, RingSize) = default;

private:
    std::int64_t length_;
};

/// Shortest-path distance between two positions.
inline std::int64_t dist(RingSize ring, Position a, Position b) noexcept {
    const std::int64_t diff = a > b ? a - b : b - a;
    const std::int64_t other = ring.length() - diff;
    return diff < other ? diff : other;
}

/// Which distance identity relates the triple (server, previous request,
/// current request). The first four enumerators are tested in this order.
enum class TripleVariant {
    ZeqXminusY,
    ZeqYminusX,
    ZeqXplusY,
    SumEqualsL,
};

std::string_view to_string(TripleVariant v) noexcept;

struct TripleRelation {
    TripleVariant variant;
    std::int64_t x;  // d(s, r_prev)
    std::int64_t y;  // d(s, r_cur)
    std::int64_t z;  // d(r_prev, r_cur)
};

/// Evaluates the four relations in fixed order and returns the first that
/// holds. One always holds for three points on a ring.
TripleRelation classify_triple(RingSize ring, Position s, Position r_prev, Position r_cur);

/// True when the three distances satisfy the given relation.
bool relation_holds(TripleVariant v, std::int64_t x, std::int64_t y, std::int64_t z,
                    RingSize ring) noexcept;

}  // namespace ringmig
