// Ramification filtrations, the Herbrand transition functions, break-bound
// and discriminant-valuation arithmetic, root-discriminant enclosures, and
// the degree-bound table lookups.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "field_fixtures.hpp"
#include "fs19/disc_table.hpp"
#include "fs19/ramification.hpp"

using namespace fs19;
using fs19::testing::data_path;

namespace {

std::string breaks_str(const std::vector<UpperBreak>& bs) {
    std::string s = "[";
    for (size_t i = 0; i < bs.size(); ++i) {
        if (i) s += ", ";
        s += "(" + to_string(bs[i].u) + "," + std::to_string(bs[i].order) + ")";
    }
    return s + "]";
}

}  // namespace

TEST_CASE("filtration validation") {
    CHECK_NOTHROW(validate_filtration(RamificationFiltration{{4, 2}}));
    CHECK_NOTHROW(validate_filtration(RamificationFiltration{{1}}));
    CHECK_THROWS(validate_filtration(RamificationFiltration{{2, 4}}));
    CHECK_THROWS(validate_filtration(RamificationFiltration{{}}));
    CHECK_THROWS(validate_filtration(RamificationFiltration{{4, 0}}));
}

TEST_CASE("Herbrand phi/psi on explicit filtrations") {
    // Unramified: phi is the identity.
    RamificationFiltration triv{{1}};
    CHECK(herbrand_phi(triv, Rational(5)) == 5);

    // Orders (4, 2): slope 1/2 on [0,1], slope 1/4 afterwards.
    RamificationFiltration f{{4, 2}};
    CHECK(herbrand_phi(f, Rational(1, 2)) == Rational(1, 4));
    CHECK(herbrand_phi(f, Rational(1)) == Rational(1, 2));
    CHECK(herbrand_phi(f, Rational(2)) == Rational(3, 4));
    CHECK(herbrand_psi(f, herbrand_phi(f, Rational(3, 2))) == Rational(3, 2));
    CHECK(herbrand_psi(f, herbrand_phi(f, Rational(7, 3))) == Rational(7, 3));
}

TEST_CASE("upper-numbering breaks") {
    CHECK(breaks_str(upper_breaks(RamificationFiltration{{1}})) == "[]");
    CHECK(breaks_str(upper_breaks(RamificationFiltration{{2}})) == "[(0,2)]");
    CHECK(breaks_str(upper_breaks(RamificationFiltration{{2, 2}})) == "[(0,2), (1,2)]");
    CHECK(breaks_str(upper_breaks(RamificationFiltration{{4, 2}})) == "[(0,4), (1/2,2)]");
    // Trailing trivial groups do not change the breaks.
    CHECK(breaks_str(upper_breaks(RamificationFiltration{{4, 2, 1}})) == "[(0,4), (1/2,2)]");
}

TEST_CASE("break bounds and discriminant valuations") {
    CHECK(fontaine_bound(1, 1, 2) == 1);
    CHECK(fontaine_bound(1, 1, 3) == Rational(1, 2));
    CHECK(fontaine_bound(2, 2, 2) == 5);

    CHECK(tame_disc_valuation(2, 4) == 2);
    CHECK(tame_disc_valuation(2, 12) == 6);
    CHECK(tame_disc_valuation(3, 6) == 4);

    CHECK(wild_disc_valuation_bound(2, 1) == 2);
    CHECK(wild_disc_valuation_bound(2, 12) == 24);
    CHECK(wild_disc_valuation_bound(3, 6) == 9);
}

TEST_CASE("rational enclosures") {
    RationalEnclosure e{Rational(3, 2), Rational(5, 2)};
    CHECK(e.width() == 1);
    CHECK(e.contains(Rational(2)));
    CHECK(!e.contains(Rational(3)));
}

TEST_CASE("root-discriminant enclosure at (p, l) = (19, 2)") {
    RationalEnclosure e = root_disc_bound(19, 2);
    // The bound is sqrt(304): certified by squaring the endpoints.
    CHECK(e.lo > 0);
    CHECK(e.lo * e.lo <= 304);
    CHECK(e.hi * e.hi >= 304);
    CHECK(e.width() <= Rational(1, 1000000));

    CHECK_THROWS(root_disc_bound(2, 2));  // the two primes must differ
}

TEST_CASE("degree-24+ exclusion arithmetic") {
    CftExclusion e24 = cft_exclusion_check(24);
    CHECK(e24.lower_exponent == 58);
    CHECK(e24.upper_exponent == 48);
    CHECK(e24.excluded);

    CftExclusion e36 = cft_exclusion_check(36);
    CHECK(e36.lower_exponent == 88);
    CHECK(e36.upper_exponent == 72);
    CHECK(e36.excluded);

    CHECK_THROWS(cft_exclusion_check(12));  // the check starts at 12 m, m >= 2
    CHECK_THROWS(cft_exclusion_check(25));
}

TEST_CASE("discriminant table parsing and degree bounds") {
    DiscriminantTable t = parse_disc_table(
        "# source: test\n# flavor: totally imaginary\n# limit: 21.78\n"
        "10, 1.5\n12, 3.25\n");
    CHECK(t.source == "test");
    CHECK(t.flavor == "totally imaginary");
    CHECK(t.asymptotic_limit == parse_rational("21.78"));
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].degree == 10);
    CHECK(t.rows[0].min_root_disc == Rational(3, 2));

    // Below the first row everything from the first tabulated degree on is
    // excluded; between rows the last row at or below applies; at or above
    // the last value (or the limit) no degree bound follows.
    CHECK(degree_bound_from_table(parse_rational("1.4"), t).degree == 9);
    CHECK(!degree_bound_from_table(parse_rational("1.4"), t).unbounded);
    CHECK(degree_bound_from_table(parse_rational("1.5"), t).degree == 11);
    CHECK(degree_bound_from_table(parse_rational("3.25"), t).unbounded);
    CHECK(degree_bound_from_table(parse_rational("21.9"), t).unbounded);
}

TEST_CASE("the shipped table turns the (19, 2) enclosure into degree 137") {
    DiscriminantTable t = load_disc_table(data_path("tables/root_disc_totally_imaginary.csv"));
    REQUIRE(!t.rows.empty());
    CHECK(t.rows[0].degree == 10);

    RationalEnclosure e = root_disc_bound(19, 2);
    DegreeBound b = degree_bound_from_table(e.hi, t);
    CHECK(!b.unbounded);
    CHECK(b.degree == 137);

    CHECK(degree_bound_from_table(t.asymptotic_limit, t).unbounded);
}
