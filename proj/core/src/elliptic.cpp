#include "fs19/elliptic.hpp"

namespace fs19 {

TwoTorsionFieldCheck verify_two_torsion_field(const EllipticCurveQ& e,
                                              const NumberField& nf,
                                              const Poly& quadratic_generator) {
    TwoTorsionFieldCheck out;
    Poly cubic = e.two_division_cubic();
    out.cubic_irreducible = cubic_is_irreducible(cubic);
    Rational dc = poly_discriminant(cubic);
    Rational dq = poly_discriminant(quadratic_generator);
    out.disc_class_matches = (squarefree_class(dc) == squarefree_class(dq));
    out.quadratic_in_field = has_root(nf, quadratic_generator);
    out.cubic_in_field = has_root(nf, cubic);
    return out;
}

}  // namespace fs19
