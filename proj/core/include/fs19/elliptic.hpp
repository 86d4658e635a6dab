#pragma once
// Weierstrass invariants b2, b4, b6, b8 and the discriminant, exactly from
// the a-invariants; the two-division cubic; and the field-of-2-torsion
// verification against a certified number field.

#include "fs19/number_field.hpp"
#include "fs19/poly.hpp"
#include "fs19/rational.hpp"

namespace fs19 {

struct EllipticCurveQ {
    Rational a1, a2, a3, a4, a6;

    Rational b2() const { return a1 * a1 + Rational(4) * a2; }
    Rational b4() const { return Rational(2) * a4 + a1 * a3; }
    Rational b6() const { return a3 * a3 + Rational(4) * a6; }
    Rational b8() const {
        return a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 -
               a4 * a4;
    }
    Rational discriminant() const {
        Rational B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -B2 * B2 * B8 - Rational(8) * B4 * B4 * B4 - Rational(27) * B6 * B6 +
               Rational(9) * B2 * B4 * B6;
    }
    // 4x^3 + b2 x^2 + 2 b4 x + b6: roots are the x-coordinates of the
    // nontrivial 2-torsion.
    Poly two_division_cubic() const {
        return Poly(QVec{b6(), Rational(2) * b4(), b2(), Rational(4)});
    }
};

struct TwoTorsionFieldCheck {
    bool cubic_irreducible = false;   // no rational 2-torsion x-coordinate
    bool disc_class_matches = false;  // sqfree class of cubic disc == that of
                                      // the certified quadratic generator
    bool quadratic_in_field = false;  // the quadratic generator has a root
    bool cubic_in_field = false;      // the cubic splits a root in the field
    bool ok() const {
        return cubic_irreducible && disc_class_matches && quadratic_in_field &&
               cubic_in_field;
    }
};

// Does the 2-torsion of E live in nf? The quadratic generator presents the
// resolvent subfield (for a Galois sextic with group S3 acting on the three
// roots); all three conditions are recomputed exactly.
TwoTorsionFieldCheck verify_two_torsion_field(const EllipticCurveQ& e,
                                              const NumberField& nf,
                                              const Poly& quadratic_generator);

}  // namespace fs19
