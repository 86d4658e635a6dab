#include "fs19/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace fs19 {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
    if (a % p == 0) throw std::invalid_argument("invmod: not invertible");
    return powmod_u(a, p - 2, p);  // p prime
}

}  // namespace

PolyP::PolyP(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw std::invalid_argument("PolyP: modulus < 2");
    for (auto& v : c_) v %= p_;
    trim();
}

void PolyP::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool PolyP::operator<(const PolyP& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return c_ < o.c_;
}

PolyP PolyP::x(uint64_t p) { return PolyP(p, {0, 1}); }
PolyP PolyP::constant(uint64_t p, uint64_t a) { return PolyP(p, {a}); }

PolyP PolyP::add(const PolyP& o) const {
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % p_;
    return PolyP(p_, std::move(r));
}

PolyP PolyP::sub(const PolyP& o) const {
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + p_ - o.c_[i]) % p_;
    return PolyP(p_, std::move(r));
}

PolyP PolyP::mul(const PolyP& o) const {
    if (is_zero() || o.is_zero()) return PolyP(p_, {});
    std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
    }
    return PolyP(p_, std::move(r));
}

PolyP PolyP::scale(uint64_t s) const {
    std::vector<uint64_t> r(c_);
    for (auto& v : r) v = mulmod(v, s % p_, p_);
    return PolyP(p_, std::move(r));
}

PolyP PolyP::monic() const {
    if (is_zero()) return *this;
    return scale(invmod(c_.back(), p_));
}

PolyP PolyP::derivative() const {
    if (c_.size() <= 1) return PolyP(p_, {});
    std::vector<uint64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
    return PolyP(p_, std::move(r));
}

uint64_t PolyP::eval(uint64_t x) const {
    uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x % p_, p_) + *it) % p_;
    return acc;
}

std::string PolyP::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        uint64_t a = c_[i];
        if (a == 0) continue;
        if (!s.empty()) s += " + ";
        if (a != 1 || i == 0) s += std::to_string(a);
        if (i > 0) {
            if (a != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<PolyP, PolyP> polyp_divrem(const PolyP& a, const PolyP& b) {
    if (b.is_zero()) throw std::invalid_argument("polyp_divrem: division by zero");
    uint64_t p = a.p();
    std::vector<uint64_t> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {PolyP(p, {}), a};
    std::vector<uint64_t> quo(a.degree() - db + 1, 0);
    uint64_t inv_lead = invmod(b.coeffs().back(), p);
    for (int i = a.degree(); i >= db; --i) {
        uint64_t coef = mulmod(rem[i], inv_lead, p);
        if (coef == 0) continue;
        quo[i - db] = coef;
        for (int j = 0; j <= db; ++j) {
            uint64_t sub = mulmod(coef, b[j], p);
            rem[i - db + j] = (rem[i - db + j] + p - sub) % p;
        }
    }
    return {PolyP(p, std::move(quo)), PolyP(p, std::move(rem))};
}

PolyP polyp_gcd(PolyP a, PolyP b) {
    while (!b.is_zero()) {
        PolyP r = polyp_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyP polyp_powmod(const PolyP& base, const Int& e, const PolyP& mod) {
    if (e < 0) throw std::invalid_argument("polyp_powmod: negative exponent");
    PolyP result = PolyP::constant(base.p(), 1);
    PolyP b = polyp_divrem(base, mod).second;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = polyp_divrem(result.mul(b), mod).second;
        b = polyp_divrem(b.mul(b), mod).second;
        k >>= 1;
    }
    return result;
}

PolyP reduce_mod_p(const Poly& f, uint64_t p) {
    std::vector<uint64_t> c;
    c.reserve(f.coeffs().size());
    Int pz(static_cast<unsigned long>(p));
    for (const auto& q : f.coeffs()) {
        Int den = q.get_den();
        if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
            throw std::invalid_argument("reduce_mod_p: denominator divisible by p");
        Int num_m = q.get_num() % pz;
        if (num_m < 0) num_m += pz;
        Int den_m = den % pz;
        uint64_t n = num_m.get_ui();
        uint64_t d = den_m.get_ui();
        c.push_back(mulmod(n, invmod(d, p), p));
    }
    return PolyP(p, std::move(c));
}

namespace {

// Candidate generator for equal-degree splitting: polynomials whose
// coefficient vectors are the base-p digits of 1, 2, 3, ... (fixed order,
// hence deterministic output).
PolyP nth_candidate(uint64_t p, uint64_t k) {
    std::vector<uint64_t> c;
    while (k) {
        c.push_back(k % p);
        k /= p;
    }
    return PolyP(p, std::move(c));
}

// f monic squarefree, all irreducible factors of degree d. Splits completely.
void equal_degree_split(const PolyP& f, int d, std::vector<PolyP>& out) {
    uint64_t p = f.p();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    Int q = 1;
    for (int i = 0; i < d; ++i) q *= static_cast<unsigned long>(p);
    for (uint64_t k = p; ; ++k) {  // start past the constants
        PolyP u = nth_candidate(p, k);
        PolyP g;
        if (p == 2) {
            // Trace map: T(u) = u + u^2 + ... + u^(2^(d-1)) mod f.
            PolyP t = polyp_divrem(u, f).second;
            PolyP acc = t;
            for (int i = 1; i < d; ++i) {
                t = polyp_divrem(t.mul(t), f).second;
                acc = acc.add(t);
            }
            g = polyp_gcd(f, acc);
        } else {
            Int e = (q - 1) / 2;
            PolyP w = polyp_powmod(u, e, f);
            g = polyp_gcd(f, w.sub(PolyP::constant(p, 1)));
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, out);
            equal_degree_split(polyp_divrem(f, g).first.monic(), d, out);
            return;
        }
    }
}

// Squarefree part decomposition of monic f: pairs (g_i, m_i) with
// f = prod g_i^(m_i), g_i squarefree pairwise coprime.
void squarefree_decompose(const PolyP& f, unsigned mult,
                          std::vector<std::pair<PolyP, unsigned>>& out) {
    uint64_t p = f.p();
    if (f.degree() <= 0) return;
    PolyP df = f.derivative();
    if (df.is_zero()) {
        // f is a p-th power: f(x) = h(x^p) with the same coefficients
        // (Frobenius fixes F_p), so h picks every p-th coefficient.
        std::vector<uint64_t> h;
        for (size_t i = 0; i < f.coeffs().size(); i += p) h.push_back(f.coeffs()[i]);
        squarefree_decompose(PolyP(p, std::move(h)), mult * static_cast<unsigned>(p), out);
        return;
    }
    PolyP c = polyp_gcd(f, df);
    PolyP w = polyp_divrem(f, c).first.monic();
    unsigned i = 1;
    while (w.degree() > 0) {
        PolyP y = polyp_gcd(w, c);
        PolyP fac = polyp_divrem(w, y).first.monic();
        if (fac.degree() > 0) out.emplace_back(fac, mult * i);
        w = y;
        c = polyp_divrem(c, y).first.monic();
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(c, mult, out);
}

}  // namespace

ModPFactorization factor_mod_p(const PolyP& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    uint64_t p = f.p();
    ModPFactorization result;
    result.p = p;
    result.unit = f.coeffs().empty() ? 1 : f.coeffs().back();
    PolyP g = f.monic();
    if (g.degree() == 0) return result;

    std::vector<std::pair<PolyP, unsigned>> squarefree;
    squarefree_decompose(g, 1, squarefree);

    for (const auto& [sf, mult] : squarefree) {
        // Distinct-degree: strip factors of degree 1, 2, ... via x^(p^d) - x.
        PolyP rem = sf;
        PolyP h = polyp_divrem(PolyP::x(p), rem).second;
        int d = 0;
        while (rem.degree() > 0) {
            ++d;
            if (2 * d > rem.degree()) {
                // What's left is a single irreducible factor.
                result.factors.push_back({rem, mult});
                break;
            }
            h = polyp_powmod(h, Int(static_cast<unsigned long>(p)), rem);
            PolyP gd = polyp_gcd(rem, h.sub(PolyP::x(p)));
            if (gd.degree() > 0) {
                std::vector<PolyP> irr;
                equal_degree_split(gd, d, irr);
                for (auto& fac : irr) result.factors.push_back({fac, mult});
                rem = polyp_divrem(rem, gd).first.monic();
                h = polyp_divrem(h, rem).second;
            }
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const ModPFactor& a, const ModPFactor& b) { return a.factor < b.factor; });
    return result;
}

ModPFactorization factor_mod_p(const Poly& f, uint64_t p) {
    return factor_mod_p(reduce_mod_p(f, p));
}

PolyP factorization_product(const ModPFactorization& fac) {
    PolyP acc = PolyP::constant(fac.p, fac.unit);
    for (const auto& [f, m] : fac.factors)
        for (unsigned i = 0; i < m; ++i) acc = acc.mul(f);
    return acc;
}

bool polyp_is_irreducible(const PolyP& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_mod_p(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace fs19
