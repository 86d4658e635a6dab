#pragma once
// Dense univariate polynomials over Q, coefficients ascending. The zero
// polynomial is the empty coefficient vector (degree -1). Ample for the
// degrees in scope (<= 12); no sparse or asymptotically fast paths.

#include <string>
#include <vector>

#include "fs19/rational.hpp"

namespace fs19 {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rational& a);
    static Poly x();
    // {c0, c1, ...} ascending, long-int convenience.
    static Poly from_ints(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Rational& s) const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;

    // All coefficients integral?
    bool is_integral() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient/remainder with deg r < deg b; b nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

// Monic gcd (zero polynomial if both zero).
Poly poly_gcd(Poly a, Poly b);

// Resultant via the Sylvester matrix (exact rational elimination).
Rational poly_resultant(const Poly& a, const Poly& b);

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f); deg f >= 1.
Rational poly_discriminant(const Poly& f);

// Rational roots of a nonzero polynomial with rational coefficients.
std::vector<Rational> rational_roots(const Poly& f);

bool cubic_is_irreducible(const Poly& f);

enum class CubicGaloisGroup { C3, S3 };

// Galois group of the splitting field of an irreducible cubic over Q:
// C3 iff the discriminant is a rational square. Throws if reducible.
CubicGaloisGroup cubic_galois_group(const Poly& f);

}  // namespace fs19
