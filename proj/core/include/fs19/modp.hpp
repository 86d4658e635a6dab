#pragma once
// Polynomial arithmetic and factorization over F_p for word-sized primes.
// Every prime exercised by the verification suite is <= 19; the code stays
// correct for any odd word prime and for p = 2.

#include <cstdint>
#include <string>
#include <vector>

#include "fs19/poly.hpp"

namespace fs19 {

// Dense coefficients ascending, reduced mod p, no trailing zeros.
class PolyP {
  public:
    PolyP() : p_(2) {}
    PolyP(uint64_t p, std::vector<uint64_t> coeffs);

    uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t operator[](size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool operator==(const PolyP& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator<(const PolyP& o) const;  // by degree, then coeffs; for sorting

    PolyP add(const PolyP& o) const;
    PolyP sub(const PolyP& o) const;
    PolyP mul(const PolyP& o) const;
    PolyP scale(uint64_t s) const;
    PolyP monic() const;
    PolyP derivative() const;
    uint64_t eval(uint64_t x) const;
    std::string to_string(const std::string& var = "x") const;

    static PolyP x(uint64_t p);
    static PolyP constant(uint64_t p, uint64_t a);

  private:
    void trim();
    uint64_t p_;
    std::vector<uint64_t> c_;
};

std::pair<PolyP, PolyP> polyp_divrem(const PolyP& a, const PolyP& b);
PolyP polyp_gcd(PolyP a, PolyP b);
PolyP polyp_powmod(const PolyP& base, const Int& e, const PolyP& mod);

// Reduce a rational polynomial mod p; denominators must be prime to p.
PolyP reduce_mod_p(const Poly& f, uint64_t p);

struct ModPFactor {
    PolyP factor;  // monic irreducible
    unsigned multiplicity;
};

struct ModPFactorization {
    uint64_t p;
    uint64_t unit;  // leading coefficient of the input
    std::vector<ModPFactor> factors;  // sorted (degree, coeffs lex)
};

// Complete factorization into monic irreducibles (squarefree decomposition,
// distinct-degree splitting, then equal-degree splitting). Deterministic:
// the equal-degree stage derandomizes by scanning a fixed sequence of
// splitting candidates.
ModPFactorization factor_mod_p(const Poly& f, uint64_t p);
ModPFactorization factor_mod_p(const PolyP& f);

// Multiplies the factorization back together (for round-trip checks).
PolyP factorization_product(const ModPFactorization& fac);

bool polyp_is_irreducible(const PolyP& f);

}  // namespace fs19
