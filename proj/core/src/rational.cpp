#include "fs19/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fs19 {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: bad fraction: " + s);
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw std::invalid_argument("parse_rational: zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty())
            throw std::invalid_argument("parse_rational: bad decimal: " + s);
        for (size_t i = 0; i < digits.size(); ++i) {
            char c = digits[i];
            if (i == 0 && (c == '+' || c == '-')) continue;
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("parse_rational: bad decimal: " + s);
        }
        Int num(digits);
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad integer: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    std::vector<std::pair<Int, unsigned>> out;
    if (n < 0) n = -n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    Int p = 3;
    while (p * p <= n) {
        strip(p);
        p += 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime(const Int& n) {
    Int out;
    mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

Int squarefree_class(const Rational& q) {
    if (q == 0) throw std::invalid_argument("squarefree_class: zero");
    // q = num/den differs from num*den by the square den^2.
    Int n = q.get_num() * q.get_den();
    Int d = (n < 0) ? Int(-1) : Int(1);
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2) d *= p;
    return d;
}

bool is_rational_square(const Rational& q) {
    if (q < 0) return false;
    if (q == 0) return true;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

unsigned valuation(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation: zero");
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

bool divides_power_of(const Int& den, const Int& base) {
    Int d = abs(den);
    if (d == 1) return true;
    if (base == 0) return false;
    Int b = abs(base);
    while (d != 1) {
        Int g = gcd(d, b);
        if (g == 1) return false;
        while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t())) d /= g;
    }
    return true;
}

Int iroot_floor(const Int& n, unsigned long k) {
    if (n < 0) throw std::invalid_argument("iroot_floor: negative");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

std::pair<Rational, Rational> nth_root_enclosure(const Int& n, unsigned long k,
                                                 unsigned digits) {
    if (n < 0) throw std::invalid_argument("nth_root_enclosure: negative");
    Int exact;
    if (mpz_root(exact.get_mpz_t(), n.get_mpz_t(), k) != 0)
        return {Rational(exact), Rational(exact)};
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Int scaled;
    mpz_pow_ui(scaled.get_mpz_t(), scale.get_mpz_t(), k);
    scaled *= n;
    Int r = iroot_floor(scaled, k);
    Rational lo(r, scale), hi(r + 1, scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

}  // namespace fs19
