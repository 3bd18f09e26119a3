#include "ringmig/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace ringmig {

double ratio_quartic(double r) noexcept {
    return (((-r + 4.0) * r + 1.0) * r - 18.0) * r + 24.0;
}

double ratio_quartic_derivative(double r) noexcept {
    return ((-4.0 * r + 12.0) * r + 2.0) * r - 18.0;
}

Rho solve_rho() {
    constexpr double kResidualTol = 1e-12;
    double lo = 3.0;
    double hi = 3.5;
    // f(3) > 0 > f(3.5); narrow the bracket before handing over to Newton.
    if (!(ratio_quartic(lo) > 0.0 && ratio_quartic(hi) < 0.0)) {
        throw std::runtime_error("solve_rho: quartic root is not bracketed by (3, 3.5)");
    }
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ratio_quartic(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double r = 0.5 * (lo + hi);
    for (int i = 0; i < 50 && std::abs(ratio_quartic(r)) > kResidualTol; ++i) {
        r -= ratio_quartic(r) / ratio_quartic_derivative(r);
    }
    if (std::abs(ratio_quartic(r)) > kResidualTol || !(r > 3.0 && r < 3.5)) {
        throw std::runtime_error("solve_rho: residual tolerance 1e-12 not reached");
    }
    return Rho{r};
}

double closed_form_lambda() {
    return 2.0 * std::sqrt(13438.0) / 3.0 - 1999.0 / 27.0;
}

double closed_form_rho() {
    const double lambda = closed_form_lambda();
    const double cbrt = std::cbrt(lambda);
    const double sixth = std::sqrt(cbrt);
    const double inner = 9.0 * cbrt * cbrt + 42.0 * cbrt - 71.0;
    const double root_inner = std::sqrt(inner);
    const double outer = -cbrt + 48.0 * sixth / root_inner + 71.0 / (9.0 * cbrt) + 28.0 / 3.0;
    return 1.0 - root_inner / (6.0 * sixth) + std::sqrt(outer) / 2.0;
}

Point intersect(const Line& a, const Line& b) {
    const double ds = a.slope - b.slope;
    if (ds == 0.0) throw std::invalid_argument("intersect: parallel lines");
    const double x = (b.intercept - a.intercept) / ds;
    return Point{x, a.slope * x + a.intercept};
}

DerivedConstants derive_constants(Rho rho) {
    const double r = rho.value;
    DerivedConstants c{};
    c.rho = r;
    c.y1 = Line{-(r - 3.0) / (r - 2.0), 0.5};
    c.y2 = Line{2.0 / r, (r - 2.0) / (2.0 * r)};
    c.y3 = Line{(r - 1.0) / 2.0, 0.0};
    c.y4 = Line{-r / (r - 2.0), r / (2.0 * r - 4.0)};
    c.y5 = Line{-1.0 / r, 0.5};
    c.p = intersect(c.y1, c.y3);
    c.q = intersect(c.y5, c.y3);
    c.adv_sa = (r - 2.0) / (r * r - r - 4.0);
    c.adv_sb = (r * r - 3.0 * r + 2.0) / (2.0 * r * r - 2.0 * r - 8.0);
    return c;
}

const DerivedConstants& canonical_constants() {
    static const DerivedConstants constants = derive_constants(solve_rho());
    return constants;
}

}  // namespace ringmig
