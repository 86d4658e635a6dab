#pragma once
// Higher ramification arithmetic: Herbrand transition functions between
// lower and upper numbering, upper breaks of a filtration, conductor-style
// discriminant valuation bounds, and the two exact exclusion computations
// (root-discriminant enclosure, class-field-theory degree count).

#include <vector>

#include "fs19/rational.hpp"

namespace fs19 {

// Lower-numbering ramification filtration: orders[i] = |G_i| for
// i = 0..m (trailing groups of order 1 may be included or omitted).
// Validated: positive, non-increasing, each dividing the previous.
struct RamificationFiltration {
    std::vector<long> orders;
};

void validate_filtration(const RamificationFiltration& fil);

// phi(u): piecewise-linear with slope |G_{k+1}|/|G_0| on [k, k+1].
Rational herbrand_phi(const RamificationFiltration& fil, const Rational& u);

// psi = phi^{-1} (exact piecewise-linear inverse).
Rational herbrand_psi(const RamificationFiltration& fil, const Rational& v);

struct UpperBreak {
    Rational u;  // break position in upper numbering
    long order;  // |G^u| at the break
    bool operator==(const UpperBreak& o) const { return u == o.u && order == o.order; }
};

// Breaks of the upper-numbering filtration: (phi(i), |G_i|) at every i with
// |G_i| > |G_{i+1}|, in increasing position order. A ramified filtration
// always reports the inertia boundary at 0, even when no drop happens there.
std::vector<UpperBreak> upper_breaks(const RamificationFiltration& fil);

// e * (n + 1/(l-1)) - 1: the upper bound on upper-numbering breaks for the
// generic fiber of a finite flat l^n-group scheme over a base with
// absolute ramification index e.
Rational fontaine_bound(long e, long n, long ell);

// Tame part of the discriminant valuation: (l-1) * degree / l.
Rational tame_disc_valuation(long ell, long degree);

// Wild upper bound on the discriminant valuation: l * degree / (l-1).
Rational wild_disc_valuation_bound(long ell, long degree);

struct RationalEnclosure {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Enclosure of (p^((l-1)^2) * l^(l^2))^(1/(l(l-1))), the root-discriminant
// bound p^((l-1)/l) * l^(l/(l-1)), to 7 decimal digits.
RationalEnclosure root_disc_bound(long p, long ell);

struct CftExclusion {
    Rational lower_exponent;  // certified lower bound (5/2) d - 2
    Rational upper_exponent;  // available budget 2 d
    bool excluded = false;    // lower > upper
};

// Degree must be 12 m with m >= 2 (throws otherwise).
CftExclusion cft_exclusion_check(long degree);

}  // namespace fs19
