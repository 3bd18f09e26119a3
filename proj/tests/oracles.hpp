#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's geometry or threshold code.

#include <cmath>
#include <cstdint>

namespace ringmig::oracle {

/// Shortest distance by walking the ring one unit at a time in both
/// directions.
inline std::int64_t walk_dist(std::int64_t len, std::int64_t a, std::int64_t b) {
    std::int64_t cw = 0;
    for (std::int64_t p = a; p != b; p = (p + 1) % len) ++cw;
    std::int64_t ccw = 0;
    for (std::int64_t p = a; p != b; p = (p + len - 1) % len) ++ccw;
    return cw < ccw ? cw : ccw;
}

/// Root of the quartic by plain bisection in long double.
inline long double bisect_rho() {
    auto f = [](long double r) { return -r * r * r * r + 4 * r * r * r + r * r - 18 * r + 24; };
    long double lo = 3.0L;
    long double hi = 3.5L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = (lo + hi) / 2;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

enum class Region { D, E, F };

/// D/E/F regions with every threshold inequality multiplied through by its
/// (positive) denominator, in long double. Inputs satisfy x + y + z = L.
inline Region far_region(long double x, long double y, long double len, long double rho) {
    // y >= -(rho-3)/(rho-2) x + L/2  <=>  2(rho-2) y + 2(rho-3) x >= (rho-2) L
    const bool above_1 = 2 * (rho - 2) * y + 2 * (rho - 3) * x >= (rho - 2) * len;
    // y >= 2/rho x + (rho-2)/(2 rho) L  <=>  2 rho y >= 4 x + (rho-2) L
    const bool above_2 = 2 * rho * y >= 4 * x + (rho - 2) * len;
    // y <= (rho-1)/2 x  <=>  2 y <= (rho-1) x
    const bool below_3 = 2 * y <= (rho - 1) * x;
    // y >= rho/(rho-2) (L/2 - x)  <=>  2(rho-2) y >= rho (L - 2x)
    const bool above_4 = 2 * (rho - 2) * y >= rho * (len - 2 * x);
    if (above_1 && above_2) return Region::D;
    if (below_3 && above_4) return Region::E;
    return Region::F;
}

}  // namespace ringmig::oracle
