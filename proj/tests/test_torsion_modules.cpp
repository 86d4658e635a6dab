// F_2 group modules (irreducibility, endomorphisms, invariant-subspace
// lattices, composition series), the Z/n unipotent-exponent check, and the
// Weierstrass / two-division-cubic arithmetic they feed on.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "field_fixtures.hpp"
#include "fs19/elliptic.hpp"
#include "fs19/modules.hpp"

using namespace fs19;
using fs19::testing::field;

namespace {

// The standard 2-dimensional module of S3 = <s, c>: s swaps e0, e1 and c
// cycles e0 -> e1 -> e0 + e1.
F2Module standard_module() {
    F2Module m;
    m.dim = 2;
    m.gens = {F2Matrix{2, 1}, F2Matrix{2, 3}};
    m.gen_names = {"s", "c"};
    return m;
}

// Two diagonal copies of the standard module.
F2Module double_module() {
    F2Module m;
    m.dim = 4;
    m.gens = {F2Matrix{2, 1, 8, 4}, F2Matrix{2, 3, 8, 12}};
    m.gen_names = {"s", "c"};
    return m;
}

F2Module trivial_module(int dim) {
    F2Module m;
    m.dim = dim;
    m.gens = {f2_identity(dim)};
    m.gen_names = {"e"};
    return m;
}

}  // namespace

TEST_CASE("F_2 matrix action conventions") {
    F2Matrix s{2, 1};  // swap
    CHECK(f2_apply(s, 0b01, 2) == 0b10);
    CHECK(f2_apply(s, 0b10, 2) == 0b01);
    CHECK(f2_apply(s, 0b11, 2) == 0b11);
    CHECK(f2_mat_mul(s, s, 2) == f2_identity(2));

    F2Matrix c{2, 3};  // order 3: e0 -> e1 -> e0 + e1 -> e0
    CHECK(f2_apply(c, 0b01, 2) == 0b10);
    CHECK(f2_apply(c, 0b10, 2) == 0b11);
    CHECK(f2_mat_mul(c, f2_mat_mul(c, c, 2), 2) == f2_identity(2));

    CHECK(f2_identity(3) == F2Matrix{1, 2, 4});
}

TEST_CASE("the standard module is irreducible with scalar endomorphisms") {
    F2Module m = standard_module();
    CHECK(module_is_irreducible(m));
    CHECK(module_end_dim(m) == 1);

    auto lattice = invariant_subspaces(m);
    REQUIRE(lattice.size() == 2);  // only 0 and the whole space
    CHECK(lattice.front().empty());
    CHECK(lattice.back().size() == 2);

    // Any nonzero vector generates everything.
    for (uint8_t v = 1; v < 4; ++v) CHECK(f2_cyclic_submodule(m, v).size() == 2);

    CompositionReport rep = composition_report(m);
    CHECK(rep.lattice_size == 2);
    CHECK(rep.num_maximal_chains == 1);
    CHECK(rep.factor_dims == std::vector<int>{2});
    CHECK(rep.jh_unique);
}

TEST_CASE("the doubled module has the expected lattice and endomorphisms") {
    F2Module dbl = double_module();
    CHECK(!module_is_irreducible(dbl));
    CHECK(module_end_dim(dbl) == 4);  // M_2(End(simple)) for isotypic square

    CompositionReport rep = composition_report(dbl);
    CHECK(rep.lattice_size == 5);  // 0, two coordinate copies, the diagonal, all
    CHECK(rep.num_maximal_chains == 3);
    CHECK(rep.factor_dims == std::vector<int>{2, 2});
    CHECK(rep.jh_unique);
}

TEST_CASE("reducible controls") {
    F2Module triv = trivial_module(2);
    CHECK(!module_is_irreducible(triv));
    CHECK(module_end_dim(triv) == 4);
    CHECK(invariant_subspaces(triv).size() == 5);  // all subspaces of F_2^2
}

TEST_CASE("module isomorphism by intertwiner search") {
    F2Module m = standard_module();
    CHECK(modules_isomorphic(m, m));
    F2Module t2 = trivial_module(2);
    t2.gens = {f2_identity(2), f2_identity(2)};
    t2.gen_names = {"s", "c"};
    CHECK(!modules_isomorphic(m, t2));
}

TEST_CASE("unipotent exponent check over Z/n") {
    ZnModule m;
    m.n = 4;
    m.dim = 2;
    m.actions = {{{1, 1}, {0, 1}}};
    m.flagged = {0};
    UnipotentCheck ok = unipotent_exponent_check(m);
    CHECK(ok.precondition_ok);
    CHECK(ok.square_zero_ok);
    CHECK(ok.exponent_ok);
    CHECK(ok.ok());

    // Flagging the wrong coordinate breaks the precondition.
    m.flagged = {1};
    UnipotentCheck bad = unipotent_exponent_check(m);
    CHECK(!bad.precondition_ok);
    CHECK(!bad.ok());

    // Dimension-3 shape with two flagged coordinates, mod 2.
    ZnModule m3;
    m3.n = 2;
    m3.dim = 3;
    m3.actions = {{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}};
    m3.flagged = {0, 1};
    CHECK(unipotent_exponent_check(m3).ok());
}

TEST_CASE("Weierstrass invariants of the conductor-19 curve") {
    EllipticCurveQ e{Rational(0), Rational(1), Rational(1), Rational(-9), Rational(-15)};
    CHECK(e.b2() == 4);
    CHECK(e.b4() == -18);
    CHECK(e.b6() == -59);
    CHECK(e.b8() == -140);
    CHECK(e.discriminant() == -6859);  // -19^3

    // 4 b8 = b2 b6 - b4^2 holds identically.
    CHECK(Rational(4) * e.b8() == e.b2() * e.b6() - e.b4() * e.b4());

    CHECK(e.two_division_cubic().coeffs() ==
          QVec{Rational(-59), Rational(-36), Rational(4), Rational(4)});

    EllipticCurveQ split{Rational(0), Rational(0), Rational(0), Rational(-1), Rational(0)};
    CHECK(split.discriminant() == 64);
    CHECK(Rational(4) * split.b8() == split.b2() * split.b6() - split.b4() * split.b4());
}

TEST_CASE("two-torsion field verification") {
    EllipticCurveQ e{Rational(0), Rational(1), Rational(1), Rational(-9), Rational(-15)};
    Poly quad = Poly::from_ints({19, 0, 1});  // x^2 + 19

    TwoTorsionFieldCheck sextic = verify_two_torsion_field(e, field("sextic_splitting.json"), quad);
    CHECK(sextic.cubic_irreducible);
    CHECK(sextic.disc_class_matches);
    CHECK(sextic.quadratic_in_field);
    CHECK(sextic.cubic_in_field);
    CHECK(sextic.ok());

    // The quartic contains sqrt(-19) but no root of the two-division cubic.
    TwoTorsionFieldCheck quartic = verify_two_torsion_field(e, field("quartic_cm.json"), quad);
    CHECK(quartic.cubic_irreducible);
    CHECK(quartic.disc_class_matches);
    CHECK(quartic.quadratic_in_field);
    CHECK(!quartic.cubic_in_field);
    CHECK(!quartic.ok());

    // Q and Q(i) contain neither.
    for (const char* f : {"rationals.json", "gaussian.json"}) {
        CAPTURE(f);
        TwoTorsionFieldCheck chk = verify_two_torsion_field(e, field(f), quad);
        CHECK(chk.cubic_irreducible);
        CHECK(chk.disc_class_matches);
        CHECK(!chk.quadratic_in_field);
        CHECK(!chk.cubic_in_field);
    }

    // A curve with rational 2-torsion fails irreducibility and the
    // discriminant-class comparison against the sextic.
    EllipticCurveQ split{Rational(0), Rational(0), Rational(0), Rational(-1), Rational(0)};
    TwoTorsionFieldCheck sp = verify_two_torsion_field(split, field("sextic_splitting.json"), quad);
    CHECK(!sp.cubic_irreducible);
    CHECK(!sp.disc_class_matches);
    CHECK(sp.quadratic_in_field);
    CHECK(sp.cubic_in_field);
}
