// Exact arithmetic foundations: rationals and integer utilities, polynomials
// over Q and over F_p, HNF row lattices, and the SHA-256 used for digests.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fs19/linalg.hpp"
#include "fs19/modp.hpp"
#include "fs19/poly.hpp"
#include "fs19/rational.hpp"
#include "fs19/sha256.hpp"

using namespace fs19;

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("17.4356") == Rational(43589, 2500));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(make_rational(6, 4) == Rational(3, 2));
    CHECK(is_integer(make_rational(8, 4)));
    CHECK(!is_integer(Rational(1, 2)));
}

TEST_CASE("integer utilities") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);

    auto fac = factor_integer(Int(4332));  // 2^2 * 3 * 19^2
    REQUIRE(fac.size() == 3);
    CHECK(fac[0] == std::pair<Int, unsigned>(Int(2), 2));
    CHECK(fac[1] == std::pair<Int, unsigned>(Int(3), 1));
    CHECK(fac[2] == std::pair<Int, unsigned>(Int(19), 2));

    CHECK(is_prime(Int(19)));
    CHECK(!is_prime(Int(20)));
    CHECK(next_prime(Int(19)) == 23);

    CHECK(squarefree_class(Rational(-76)) == -19);
    CHECK(squarefree_class(Rational(8)) == 2);
    CHECK(squarefree_class(Rational(1, 2)) == 2);  // 1/2 = 2 * (1/2)^2

    CHECK(is_rational_square(Rational(49, 4)));
    CHECK(!is_rational_square(Rational(2)));

    CHECK(valuation(Int(48), Int(2)) == 4);
    CHECK(divides_power_of(Int(1), Int(19)));
    CHECK(divides_power_of(Int(19), Int(19)));
    CHECK(!divides_power_of(Int(3), Int(19)));

    CHECK(iroot_floor(Int(26), 3) == 2);
    CHECK(iroot_floor(Int(27), 3) == 3);
}

TEST_CASE("nth_root_enclosure brackets the root to the requested width") {
    auto [lo, hi] = nth_root_enclosure(Int(2), 2, 6);
    CHECK(lo > 0);
    CHECK(lo * lo <= 2);
    CHECK(hi * hi >= 2);
    CHECK(hi - lo <= Rational(1, 1000000));

    // Perfect powers collapse to the exact degenerate enclosure.
    auto [a, b] = nth_root_enclosure(Int(9), 2, 6);
    CHECK(a == 3);
    CHECK(b == 3);
    auto [c, d] = nth_root_enclosure(Int(27), 3, 6);
    CHECK(c == 3);
    CHECK(d == 3);

    CHECK_THROWS(nth_root_enclosure(Int(-2), 2, 6));
}

TEST_CASE("polynomial division, gcd, resultant, discriminant") {
    // (x^3 - 1) = (x - 1)(x^2 + x + 1)
    auto [q, r] = poly_divrem(Poly::from_ints({-1, 0, 0, 1}), Poly::from_ints({-1, 1}));
    CHECK(q.coeffs() == QVec{Rational(1), Rational(1), Rational(1)});
    CHECK(r.coeffs().empty());

    // gcd is monic whatever the input scaling.
    Poly g1 = poly_gcd(Poly::from_ints({-1, 0, 1}), Poly::from_ints({1, -2, 1}));
    CHECK(g1.coeffs() == QVec{Rational(-1), Rational(1)});
    Poly g2 = poly_gcd(Poly::from_ints({-2, 0, 2}), Poly::from_ints({2, -4, 2}));
    CHECK(g2.coeffs() == QVec{Rational(-1), Rational(1)});

    CHECK(poly_resultant(Poly::from_ints({1, 0, 1}), Poly::from_ints({1, 1})) == 2);
    CHECK(poly_discriminant(Poly::from_ints({1, 0, 1})) == -4);
    CHECK(poly_discriminant(Poly::from_ints({-1, -3, 0, 1})) == 81);
    CHECK(poly_discriminant(Poly::from_ints({-2, -2, 0, 1})) == -76);
    CHECK(poly_discriminant(Poly::from_ints({324, 0, 40, 0, 1})) == 479084544);
}

TEST_CASE("rational roots and cubic Galois groups") {
    // 6x^3 - 5x^2 - 2x + 1 = (x - 1)(3x - 1)(2x + 1), roots sorted ascending.
    auto roots = rational_roots(Poly::from_ints({1, -2, -5, 6}));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-1, 2));
    CHECK(roots[1] == Rational(1, 3));
    CHECK(roots[2] == Rational(1));

    CHECK(cubic_is_irreducible(Poly::from_ints({-1, -3, 0, 1})));
    CHECK(!cubic_is_irreducible(Poly::from_ints({-1, 0, 0, 1})));

    CHECK(cubic_galois_group(Poly::from_ints({-1, -3, 0, 1})) == CubicGaloisGroup::C3);
    CHECK(cubic_galois_group(Poly::from_ints({-2, -2, 0, 1})) == CubicGaloisGroup::S3);
    CHECK_THROWS(cubic_galois_group(Poly::from_ints({-1, 0, 0, 1})));
}

TEST_CASE("factorization over F_p") {
    // x^4 + 1 = (x + 1)^4 over F_2 and a product of two quadratics over F_5.
    auto f2 = factor_mod_p(Poly::from_ints({1, 0, 0, 0, 1}), 2);
    CHECK(f2.p == 2);
    CHECK(f2.unit == 1);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].factor.coeffs() == std::vector<uint64_t>{1, 1});
    CHECK(f2.factors[0].multiplicity == 4);

    auto f5 = factor_mod_p(Poly::from_ints({1, 0, 0, 0, 1}), 5);
    REQUIRE(f5.factors.size() == 2);
    for (const auto& fac : f5.factors) {
        CHECK(fac.factor.coeffs().size() == 3);
        CHECK(fac.multiplicity == 1);
    }

    // Expanding the factorization reproduces the reduction of the input.
    Poly f = Poly::from_ints({3, -7, 0, 2, 11, 1});
    for (uint64_t p : {2, 3, 5, 19, 101}) {
        auto fx = factor_mod_p(f, p);
        CHECK(factorization_product(fx).coeffs() == reduce_mod_p(f, p).coeffs());
    }

    // The algorithm is deterministic: repeated runs agree factor-by-factor.
    auto a = factor_mod_p(f, 19), b = factor_mod_p(f, 19);
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].factor.coeffs() == b.factors[i].factor.coeffs());
        CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
    }

    CHECK(polyp_is_irreducible(reduce_mod_p(Poly::from_ints({1, 1, 1}), 2)));
    CHECK(!polyp_is_irreducible(reduce_mod_p(Poly::from_ints({1, 0, 1}), 2)));

    // Negative coefficients land in the canonical residue range.
    CHECK(reduce_mod_p(Poly::from_ints({-5, 0, 1}), 3).coeffs() ==
          std::vector<uint64_t>{1, 0, 1});
}

TEST_CASE("HNF row lattices") {
    ZMat rows = {{Int(2), Int(4), Int(4)}, {Int(-6), Int(6), Int(12)}, {Int(10), Int(4), Int(16)}};
    ZMat h = hnf_row_lattice(rows);
    ZMat expect = {{Int(2), Int(0), Int(120)}, {Int(0), Int(2), Int(20)}, {Int(0), Int(0), Int(156)}};
    CHECK(h == expect);
    CHECK(diag_product(h) == 624);  // |det| of the generating rows

    // Membership against a basis with a nonzero above-diagonal entry: the
    // triangular solve must run from the top coordinate down.
    ZMat hh = {{Int(1), Int(1)}, {Int(0), Int(2)}};
    CHECK(hnf_contains(hh, {Int(-1), Int(1)}));
    CHECK(!hnf_contains(hh, {Int(1), Int(0)}));

    CHECK(hnf_reduce(hh, {Int(-1), Int(1)}) == ZVec{Int(0), Int(0)});
    CHECK(hnf_reduce(hh, {Int(4), Int(5)}) == ZVec{Int(0), Int(1)});
    // Reduction is idempotent.
    ZVec v = {Int(-37), Int(12)};
    CHECK(hnf_reduce(hh, hnf_reduce(hh, v)) == hnf_reduce(hh, v));
}

TEST_CASE("kernels over F_p") {
    auto ker = fp_kernel({{1, 1}, {1, 1}}, 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<uint64_t>{1, 1});

    CHECK(fp_kernel({{1, 0}, {0, 1}}, 5).empty());
}

TEST_CASE("sha256 matches the reference vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

    std::string path = "/tmp/fs19_sha_test.bin";
    {
        std::ofstream out(path, std::ios::binary);
        out << "abc";
    }
    CHECK(sha256_file_hex(path) == sha256_hex("abc"));
    std::remove(path.c_str());
}
