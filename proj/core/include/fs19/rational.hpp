#pragma once
// Exact integer/rational layer. All arithmetic is exact (GMP-backed); no
// floating point enters any verdict. Rationals are kept canonical
// (denominator > 0, gcd(num, den) = 1) by mpq_class itself.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fs19 {

using Int = mpz_class;
using Rational = mpq_class;

// "17.4356", "-3/4", "12" -> exact rational. Rejects anything else.
Rational parse_rational(const std::string& s);

// Decimal rendering with exact semantics is not possible in general; reports
// render rationals as "num/den" (or "num" when integral).
std::string to_string(const Rational& q);
std::string to_string(const Int& z);

inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q);

// Floor of num/den for positive den.
Int floor_div(const Int& a, const Int& b);

// Prime factorization by trial division (intended for the small integers that
// appear in discriminants and norms; values beyond ~1e14 would be slow).
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);

bool is_prime(const Int& n);

// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

// Signed squarefree part of a nonzero rational: the unique squarefree integer
// d with q = d * (square of a rational). squarefree_class(-76) = -19.
Int squarefree_class(const Rational& q);

// q == r^2 for some rational r?
bool is_rational_square(const Rational& q);

// Largest e with p^e | n (n != 0).
unsigned valuation(Int n, const Int& p);

// Does every prime factor of `den` divide `base`? (Z[1/N]-membership test.)
bool divides_power_of(const Int& den, const Int& base);

// Floor of the k-th root of n >= 0.
Int iroot_floor(const Int& n, unsigned long k);

// [lo, hi] with lo <= n^(1/k) <= hi and hi - lo <= 10^-digits, computed by
// integer root bracketing of n * 10^(k*digits). Exact k-th powers give
// the degenerate enclosure [r, r].
std::pair<Rational, Rational> nth_root_enclosure(const Int& n, unsigned long k,
                                                 unsigned digits);

}  // namespace fs19
