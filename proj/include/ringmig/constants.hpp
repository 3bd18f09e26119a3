#pragma once

#include <cstdint>

namespace ringmig {

/// Quartic whose positive root is the competitive ratio:
/// -r^4 + 4r^3 + r^2 - 18r + 24.
double ratio_quartic(double r) noexcept;
double ratio_quartic_derivative(double r) noexcept;

/// Competitive ratio of TriAct, the root of ratio_quartic in (3, 3.5).
struct Rho {
    double value;
};

/// Bisection on (3, 3.5) followed by Newton polishing to |f| <= 1e-12.
/// Throws std::runtime_error if the residual tolerance cannot be reached.
Rho solve_rho();

/// The cube-root parameter of the closed-form expression for rho:
/// 2*sqrt(13438)/3 - 1999/27.
double closed_form_lambda();

/// Closed-form radical expression for rho, built from closed_form_lambda().
double closed_form_rho();

/// A threshold line y = slope*x + intercept*L. Intercepts are stored as
/// fractions of L so one table serves every ring size.
struct Line {
    double slope;
    double intercept;

    double at(double x, double ring_length) const noexcept {
        return slope * x + intercept * ring_length;
    }
};

struct Point {
    double x;
    double y;
};

/// Every constant the policy and the analysis derive from rho. Coordinates
/// are fractions of L.
struct DerivedConstants {
    double rho;
    Line y1;  // Case D, first condition
    Line y2;  // Case D, second condition
    Line y3;  // Case E, first condition
    Line y4;  // Case E, second condition
    Line y5;  // zero line of the Case F single-event bound
    Point p;  // y1 ∩ y3
    Point q;  // y5 ∩ y3
    double adv_sa;  // adversary d(s, a) = d(b, c)
    double adv_sb;  // adversary d(s, b)
};

DerivedConstants derive_constants(Rho rho);

/// Constants for the canonical rho, computed once.
const DerivedConstants& canonical_constants();

/// Intersection of two non-parallel lines (in fraction-of-L units).
Point intersect(const Line& a, const Line& b);

}  // namespace ringmig
