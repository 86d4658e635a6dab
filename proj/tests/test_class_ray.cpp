// Residue unit groups (O/m)^*, unit images, and ray class groups in the
// class-number-one case.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "field_fixtures.hpp"
#include "fs19/abelian.hpp"

using namespace fs19;
using fs19::testing::field;

TEST_CASE("invariant-factor rendering") {
    CHECK(to_string(FiniteAbelianGroup{}) == "[]");
    CHECK(to_string(FiniteAbelianGroup{{Int(2), Int(6)}}) == "[2,6]");
    CHECK(FiniteAbelianGroup{{Int(2), Int(6)}}.order() == 12);
    CHECK(FiniteAbelianGroup{}.order() == 1);
}

TEST_CASE("residue units of the quartic field mod 2") {
    const NumberField& q4 = field("quartic_cm.json");
    ResidueUnitGroup r(q4, rational_ideal(q4, Rational(2)));

    CHECK(r.size() == 12);
    CHECK(to_string(r.structure()) == "[2,6]");

    // Exponent and the group axioms on the enumerated table.
    unsigned long exponent = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        exponent = std::lcm(exponent, r.element_order(i));
        CHECK(r.mul(i, r.identity()) == i);
    }
    CHECK(exponent == 6);
    CHECK(r.element_order(r.identity()) == 1);

    CHECK(r.index_of(q4.one()) == r.identity());

    // Trivial subgroup and full quotient behave as expected.
    CHECK(r.subgroup({r.identity()}).size() == 1);
    std::vector<size_t> all(r.size());
    for (size_t i = 0; i < r.size(); ++i) all[i] = i;
    CHECK(to_string(r.quotient_structure(all)) == "[]");
    CHECK(r.quotient_structure(r.subgroup({r.identity()})).order() == 12);
}

TEST_CASE("residue unit structures across the shipped fields") {
    const NumberField& gauss = field("gaussian.json");
    CHECK(to_string(unit_quotient_structure(gauss, rational_ideal(gauss, Rational(2)))) == "[2]");

    const NumberField& q6 = field("sextic_splitting.json");
    CHECK(to_string(unit_quotient_structure(q6, rational_ideal(q6, Rational(2)))) == "[4,12]");

    const NumberField& q = field("rationals.json");
    CHECK(to_string(unit_quotient_structure(q, rational_ideal(q, Rational(5)))) == "[4]");
}

TEST_CASE("unit images inside (O/2)^*") {
    const NumberField& q4 = field("quartic_cm.json");
    CHECK(unit_image_order(q4, rational_ideal(q4, Rational(2))) == 4);

    const NumberField& gauss = field("gaussian.json");
    CHECK(unit_image_order(gauss, rational_ideal(gauss, Rational(2))) == 2);

    const NumberField& q6 = field("sextic_splitting.json");
    CHECK(unit_image_order(q6, rational_ideal(q6, Rational(2))) == 48);
}

TEST_CASE("ray class groups (class number one)") {
    const NumberField& q4 = field("quartic_cm.json");
    CHECK(to_string(ray_class_group(q4, rational_ideal(q4, Rational(2)), {})) == "[3]");

    const NumberField& gauss = field("gaussian.json");
    CHECK(to_string(ray_class_group(gauss, rational_ideal(gauss, Rational(2)), {})) == "[]");

    const NumberField& q6 = field("sextic_splitting.json");
    CHECK(to_string(ray_class_group(q6, rational_ideal(q6, Rational(2)), {})) == "[]");

    // Over Q the ray class group of m * infinity is (Z/m)^* / {1}; without
    // the infinite place the image of -1 is divided out.
    const NumberField& q = field("rationals.json");
    CHECK(to_string(ray_class_group(q, rational_ideal(q, Rational(4)), {0})) == "[2]");
    CHECK(to_string(ray_class_group(q, rational_ideal(q, Rational(4)), {})) == "[]");
    CHECK(to_string(ray_class_group(q, rational_ideal(q, Rational(5)), {})) == "[2]");

    // Sign conditions are only supported where real embeddings exist.
    CHECK_THROWS(ray_class_group(gauss, rational_ideal(gauss, Rational(2)), {0}));
}
