#pragma once
// Fractional ideals as integer HNF lattices (w.r.t. the integral basis)
// with a denominator, and rational-prime factorization. Two factorization
// paths: defining-polynomial factorization mod p when p does not divide the
// index [O : Z[theta]], and the radical/idealizer (round-2 style) path on
// the certified basis otherwise.

#include <vector>

#include "fs19/number_field.hpp"

namespace fs19 {

struct FractionalIdeal {
    ZMat basis;  // n x n upper-triangular HNF rows, coords w.r.t. integral basis
    Int den = 1;
    bool operator==(const FractionalIdeal& o) const {
        return basis == o.basis && den == o.den;
    }
};

FractionalIdeal ideal_whole_ring(const NumberField& nf);
FractionalIdeal ideal_from_elements(const NumberField& nf,
                                    const std::vector<FieldElement>& gens);
FractionalIdeal principal_ideal(const NumberField& nf, const FieldElement& x);
FractionalIdeal rational_ideal(const NumberField& nf, const Rational& a);

FractionalIdeal ideal_mul(const NumberField& nf, const FractionalIdeal& a,
                          const FractionalIdeal& b);
FractionalIdeal ideal_add(const NumberField& nf, const FractionalIdeal& a,
                          const FractionalIdeal& b);
FractionalIdeal ideal_pow(const NumberField& nf, FractionalIdeal a, unsigned e);

Rational ideal_norm(const NumberField& nf, const FractionalIdeal& a);
bool ideal_contains(const NumberField& nf, const FractionalIdeal& a,
                    const FieldElement& x);
bool ideal_subset(const NumberField& nf, const FractionalIdeal& inner,
                  const FractionalIdeal& outer);
bool ideal_is_whole_ring(const NumberField& nf, const FractionalIdeal& a);

struct PrimeFactor {
    FractionalIdeal ideal;
    unsigned e = 0;  // ramification index
    unsigned f = 0;  // residue degree
};

// Factorization of pO into primes, sorted deterministically by HNF rows.
// Every (e, f) is recomputed (e by power membership, f from the norm) and
// sum e_i f_i == degree is asserted.
std::vector<PrimeFactor> factor_rational_prime(const NumberField& nf, const Int& p);

// Index [O : Z[theta]] derived from disc(f) / disc(O).
Int order_index(const NumberField& nf);

// p-radical of O: the ideal R with pO <= R <= O whose image in O/pO is the
// nilradical (computed via the Frobenius kernel).
FractionalIdeal p_radical(const NumberField& nf, const Int& p);

// Pohst-Zassenhaus q-maximality: O is q-maximal iff the idealizer of the
// q-radical does not enlarge O, i.e. {y in O : yR <= qR} = qO.
bool q_maximality_check(const NumberField& nf, const Int& q);

}  // namespace fs19
