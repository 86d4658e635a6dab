#include "fs19/ramification.hpp"

#include <stdexcept>

namespace fs19 {

void validate_filtration(const RamificationFiltration& fil) {
    if (fil.orders.empty()) throw std::invalid_argument("filtration: empty");
    for (size_t i = 0; i < fil.orders.size(); ++i) {
        if (fil.orders[i] < 1) throw std::invalid_argument("filtration: order < 1");
        if (i && fil.orders[i] > fil.orders[i - 1])
            throw std::invalid_argument("filtration: not non-increasing");
        if (i && fil.orders[i - 1] % fil.orders[i] != 0)
            throw std::invalid_argument("filtration: orders must divide");
    }
}

namespace {

long order_at(const RamificationFiltration& fil, long i) {
    if (i < 0) throw std::invalid_argument("filtration index < 0");
    if (static_cast<size_t>(i) >= fil.orders.size()) return 1;
    return fil.orders[static_cast<size_t>(i)];
}

}  // namespace

Rational herbrand_phi(const RamificationFiltration& fil, const Rational& u) {
    validate_filtration(fil);
    if (u < -1) throw std::invalid_argument("herbrand_phi: u < -1");
    if (u <= 0) return u;  // identity on [-1, 0]
    Rational g0(fil.orders[0]);
    // k = floor(u)
    Int k = floor_div(u.get_num(), u.get_den());
    long kl = k.get_si();
    Rational sum(0);
    for (long i = 1; i <= kl; ++i) sum += order_at(fil, i);
    Rational frac = u - Rational(k);
    Rational out = (sum + frac * Rational(order_at(fil, kl + 1))) / g0;
    out.canonicalize();
    return out;
}

Rational herbrand_psi(const RamificationFiltration& fil, const Rational& v) {
    validate_filtration(fil);
    if (v < -1) throw std::invalid_argument("herbrand_psi: v < -1");
    if (v <= 0) return v;  // inverse of the identity segment
    Rational g0(fil.orders[0]);
    // Walk segments [k, k+1] until phi(k+1) >= v; the tail has slope 1/g0.
    Rational phik(0);
    long k = 0;
    while (true) {
        Rational slope = Rational(order_at(fil, k + 1)) / g0;
        Rational phinext = phik + slope;
        if (phinext >= v || order_at(fil, k + 1) == 1) {
            Rational out = Rational(k) + (v - phik) / slope;
            out.canonicalize();
            return out;
        }
        phik = phinext;
        ++k;
    }
}

std::vector<UpperBreak> upper_breaks(const RamificationFiltration& fil) {
    validate_filtration(fil);
    std::vector<UpperBreak> out;
    long m = static_cast<long>(fil.orders.size()) - 1;
    // The inertia/wild boundary at 0 is always a break of a ramified
    // filtration, even when the order persists past it.
    if (fil.orders[0] > 1 && order_at(fil, 1) == fil.orders[0])
        out.push_back(UpperBreak{Rational(0), fil.orders[0]});
    for (long i = 0; i <= m; ++i) {
        if (order_at(fil, i) > order_at(fil, i + 1)) {
            UpperBreak b;
            b.u = herbrand_phi(fil, Rational(i));
            b.order = order_at(fil, i);
            out.push_back(std::move(b));
        }
    }
    return out;
}

Rational fontaine_bound(long e, long n, long ell) {
    if (e < 1 || n < 1) throw std::invalid_argument("fontaine_bound: e, n >= 1 required");
    if (!is_prime(Int(ell))) throw std::invalid_argument("fontaine_bound: ell not prime");
    Rational out = Rational(e) * (Rational(n) + Rational(1, ell - 1)) - 1;
    out.canonicalize();
    return out;
}

Rational tame_disc_valuation(long ell, long degree) {
    if (degree % ell != 0)
        throw std::invalid_argument("tame_disc_valuation: ell must divide degree");
    Rational out = Rational((ell - 1) * degree, ell);
    out.canonicalize();
    return out;
}

Rational wild_disc_valuation_bound(long ell, long degree) {
    Rational out = Rational(ell * degree, ell - 1);
    out.canonicalize();
    return out;
}

RationalEnclosure root_disc_bound(long p, long ell) {
    if (!is_prime(Int(p)) || !is_prime(Int(ell)))
        throw std::invalid_argument("root_disc_bound: arguments must be prime");
    if (p == ell) throw std::invalid_argument("root_disc_bound: p and ell must differ");
    // (p^((l-1)^2) * l^(l^2))^(1/k) with k = l(l-1).
    unsigned long k = static_cast<unsigned long>(ell * (ell - 1));
    Int base(1);
    for (long i = 0; i < (ell - 1) * (ell - 1); ++i) base *= p;
    for (long i = 0; i < ell * ell; ++i) base *= ell;
    auto [lo, hi] = nth_root_enclosure(base, k, 7);
    return RationalEnclosure{lo, hi};
}

CftExclusion cft_exclusion_check(long degree) {
    if (degree % 12 != 0 || degree / 12 < 2)
        throw std::invalid_argument("cft_exclusion_check: degree must be 12m, m >= 2");
    CftExclusion out;
    out.lower_exponent = Rational(5 * degree, 2) - 2;
    out.lower_exponent.canonicalize();
    out.upper_exponent = Rational(2 * degree);
    out.excluded = out.lower_exponent > out.upper_exponent;
    return out;
}

}  // namespace fs19
