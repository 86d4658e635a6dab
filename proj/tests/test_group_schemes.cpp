// Order-4 group-law families: catalog parsing, axiom checks by exact normal
// forms, annihilation orders, point fields, the sub/quotient sequence maps,
// the Ext dimension rule, and the finite-group scans backing the descent
// lemma.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "field_fixtures.hpp"
#include "fs19/hopf.hpp"
#include "fs19/small_group.hpp"

using namespace fs19;
using fs19::testing::data_path;
using fs19::testing::slurp_file;

namespace {

std::vector<HopfFamily> catalog() {
    return load_hopf_catalog(data_path("hopf/catalog.json"));
}

}  // namespace

TEST_CASE("catalog parsing") {
    auto fams = catalog();
    REQUIRE(fams.size() == 3);
    CHECK(fams[0].name == "(Z/2 x mu2)^chi");
    CHECK(fams[1].name == "(Z/2 x Z/2)^chi");
    CHECK(fams[2].name == "(Z/4)^chi");
    CHECK(fams[0].expected_annihilation == 2);
    CHECK(fams[1].expected_annihilation == 2);
    CHECK(fams[2].expected_annihilation == 4);

    CHECK_THROWS(parse_hopf_catalog("{ not json"));
}

TEST_CASE("linear expression evaluation") {
    CHECK(eval_linear_expr("8n+1", 2) == 17);
    CHECK(eval_linear_expr("-2", 5) == -2);
    CHECK(eval_linear_expr("n", 7) == 7);
    CHECK(eval_linear_expr("n/(8n+1)", 2) == Rational(2, 17));
    CHECK(eval_linear_expr("2n/(4n+1)", 1) == Rational(2, 5));
}

TEST_CASE("all axioms hold for every family at small n") {
    for (const auto& fam : catalog()) {
        for (long n = 1; n <= 3; ++n) {
            CAPTURE(fam.name);
            CAPTURE(n);
            ConcreteHopf h = instantiate_hopf(fam, n);
            CHECK(check_counit(h));
            CHECK(check_commutativity(h));
            CHECK(check_relations(h));
            CHECK(check_coassociativity(h));
            CHECK(coefficients_in_localization(h));
            CHECK(annihilation_order(h) == fam.expected_annihilation);
            PointFieldResult pf = point_field_class(h);
            CHECK(pf.squarefree == squarefree_class(Rational(h.modulus)));
        }
    }
}

TEST_CASE("normal forms reduce exactly") {
    ConcreteHopf h = instantiate_hopf(catalog()[0], 2);  // modulus 17, x^2 = x - 2y
    CHECK(h.modulus == 17);

    // (x + y)^2 = x^2 + 2xy + y^2 = x - 4y + 2xy under the two relations.
    LawPoly x = LawPoly::var(VX), y = LawPoly::var(VY);
    LawPoly nf = hopf_normal_form(h, (x + y) * (x + y));
    LawPoly expect = x + (x * y).scaled(Rational(2)) - y.scaled(Rational(4));
    CHECK(nf == expect);

    // Idempotence: a normal form is its own normal form.
    CHECK(hopf_normal_form(h, nf) == nf);
}

TEST_CASE("perturbed laws fail the axioms they should fail") {
    ConcreteHopf h = instantiate_hopf(catalog()[0], 2);

    ConcreteHopf perturbed = h;  // +yz: still symmetric, breaks the ring map
    perturbed.Sx = perturbed.Sx + LawPoly::var(VY) * LawPoly::var(VZ);
    CHECK(check_counit(perturbed));
    CHECK(check_commutativity(perturbed));
    CHECK(!check_relations(perturbed));

    ConcreteHopf asym = h;  // +xz is not symmetric in the two factors
    asym.Sx = asym.Sx + LawPoly::var(VX) * LawPoly::var(VZ);
    CHECK(check_counit(asym));
    CHECK(!check_commutativity(asym));

    HopfFamily wrong = catalog()[0];  // integer law coefficient: no longer a ring map
    wrong.law_coeff = "n";
    ConcreteHopf hw = instantiate_hopf(wrong, 2);
    CHECK(check_counit(hw));
    CHECK(check_commutativity(hw));
    CHECK(!check_relations(hw));

    ConcreteHopf far = h;  // structure constants must live in Z[1/N]
    far.modulus = 3;
    CHECK(!coefficients_in_localization(far));
}

TEST_CASE("sequence maps: sub and quotient of the canonical short sequence") {
    ConcreteHopf h = instantiate_hopf(catalog()[0], 2);

    SequenceMapCheck good = check_sequence_maps(h);
    CHECK(good.sub_ring_map);
    CHECK(good.sub_law);
    CHECK(good.quotient_ring_map);
    CHECK(good.quotient_law);
    CHECK(good.ok());

    SequenceMapCheck bad = check_sequence_maps(h, /*wrong_target=*/true);
    CHECK(bad.sub_ring_map);
    CHECK(bad.sub_law);
    CHECK(!bad.quotient_ring_map);
    CHECK(!bad.quotient_law);
    CHECK(!bad.ok());
}

TEST_CASE("Ext dimension rule over Z[1/p]") {
    CHECK(ext_mu_dimension(19, 2) == 0);
    CHECK(ext_mu_dimension(7, 2) == 1);
    CHECK(ext_mu_dimension(23, 2) == 1);
    CHECK(ext_mu_dimension(5, 2) == 0);
    CHECK(ext_mu_dimension(17, 2) == 1);
    CHECK(ext_mu_dimension(17, 3) == 1);
    CHECK(ext_mu_dimension(19, 3) == 1);
    CHECK(ext_mu_dimension(19, 5) == 1);

    // l = 2: dimension 1 exactly when p = +-1 mod 8.
    for (long p = 5; p < 60; ++p) {
        if (!is_prime(Int(p))) continue;
        CAPTURE(p);
        bool expect = (p % 8 == 1) || (p % 8 == 7);
        CHECK(ext_mu_dimension(p, 2) == (expect ? 1 : 0));
    }

    CHECK_THROWS(ext_mu_dimension(9, 2));
    CHECK_THROWS(ext_mu_dimension(3, 2));
    CHECK_THROWS(ext_mu_dimension(19, 4));
}

TEST_CASE("small-group constructions and their invariants") {
    SmallGroup c6 = SmallGroup::cyclic(6);
    CHECK(c6.order() == 6);
    CHECK(c6.is_abelian());
    CHECK(c6.is_cyclic());
    CHECK(c6.table_is_group());
    CHECK(c6.three_saturation().size() == 3);
    CHECK(c6.closure({1}).size() == 6);

    SmallGroup d4 = SmallGroup::dihedral(4);
    CHECK(d4.order() == 8);
    CHECK(!d4.is_abelian());
    CHECK(d4.is_p_group(2));
    std::vector<unsigned long> orders;
    for (size_t i = 0; i < d4.order(); ++i) orders.push_back(d4.element_order(i));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<unsigned long>{1, 2, 2, 2, 2, 2, 4, 4});
    CHECK(d4.derived_subgroup().size() == 2);
    CHECK(to_string(d4.abelianization()) == "[2,2]");

    SmallGroup s3 = SmallGroup::dihedral(3);
    CHECK(s3.derived_subgroup().size() == 3);
    CHECK(to_string(s3.abelianization()) == "[2]");
    SmallGroup q = s3.quotient(s3.derived_subgroup(), "S3/A3");
    CHECK(q.order() == 2);
    CHECK(q.is_cyclic());

    SmallGroup q8 = SmallGroup::quaternion8();
    int o2 = 0, o4 = 0;
    for (size_t i = 1; i < q8.order(); ++i) {
        if (q8.element_order(i) == 2) ++o2;
        if (q8.element_order(i) == 4) ++o4;
    }
    CHECK(o2 == 1);  // the unique involution -1
    CHECK(o4 == 6);

    // The two nonabelian groups of order 27, told apart by exponent.
    SmallGroup heis = SmallGroup::heisenberg27();
    SmallGroup m27 = SmallGroup::modular27();
    CHECK(!heis.is_abelian());
    CHECK(!m27.is_abelian());
    unsigned long heis_max = 0, m27_max = 0;
    for (size_t i = 0; i < 27; ++i) {
        heis_max = std::max(heis_max, heis.element_order(i));
        m27_max = std::max(m27_max, m27.element_order(i));
    }
    CHECK(heis_max == 3);
    CHECK(m27_max == 9);
    CHECK(to_string(heis.abelianization()) == "[3,3]");
    CHECK(to_string(m27.abelianization()) == "[3,3]");
}

TEST_CASE("catalog integrity and the descent scans") {
    auto small = catalog_order_le_11();
    auto threes = catalog_three_groups_le_27();
    CHECK(small.size() == 19);
    CHECK(threes.size() == 8);
    for (const auto& g : small) {
        CAPTURE(g.name());
        CHECK(g.table_is_group());
    }
    for (const auto& g : threes) {
        CAPTURE(g.name());
        CHECK(g.table_is_group());
    }

    auto rows = lemma_scan_order_le_11();
    REQUIRE(rows.size() == 19);
    std::vector<std::string> viable;
    for (const auto& row : rows) {
        CAPTURE(row.name);
        CHECK(row.conclusion_ok);
        if (row.viable) viable.push_back(row.name);
    }
    CHECK(viable == std::vector<std::string>{"C1", "C3", "C2xC2", "C4xC2", "C2xC2xC2", "D4",
                                             "Q8", "C9", "C3xC3"});

    auto [abrows, unique_c3] = three_group_abelianization_scan();
    REQUIRE(abrows.size() == 8);
    CHECK(unique_c3);
    int order3 = 0;
    for (const auto& row : abrows)
        if (row.ab.order() == 3) ++order3;
    CHECK(order3 == 1);
}

TEST_CASE("p-group generation via the abelianization") {
    SmallGroup c9 = SmallGroup::cyclic(9);
    PGroupGenCheck a = pgroup_generation_check(c9, 3, {1});
    CHECK(a.precondition_ok);
    CHECK(a.generates);
    PGroupGenCheck b = pgroup_generation_check(c9, 3, {3});  // lands in the C3 subgroup
    CHECK(b.precondition_ok);
    CHECK(!b.generates);

    PGroupGenCheck s = pgroup_generation_check(SmallGroup::dihedral(3), 2, {1});
    CHECK(!s.precondition_ok);  // S3 is not a 2-group

    SmallGroup d4 = SmallGroup::dihedral(4);
    PGroupGenCheck d = pgroup_generation_check(d4, 2, {4, 5});  // two reflections
    CHECK(d.precondition_ok);
    CHECK(d.generates);

    SmallGroup q8 = SmallGroup::quaternion8();
    PGroupGenCheck qq = pgroup_generation_check(q8, 2, {2, 4});
    CHECK(qq.precondition_ok);
    CHECK(qq.generates);
}
