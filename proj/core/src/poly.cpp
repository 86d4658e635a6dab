#include "fs19/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fs19 {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& a) {
    if (a == 0) return Poly();
    return Poly({a});
}

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
}

bool Poly::is_integral() const {
    for (const auto& v : c_)
        if (!is_integer(v)) return false;
    return true;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        if (!s.empty()) s += (a > 0) ? " + " : " - ";
        else if (a < 0) s += "-";
        Rational mag = abs(a);
        bool unit_coeff = (mag == 1) && i > 0;
        if (!unit_coeff) s += fs19::to_string(mag);
        if (i > 0) {
            if (!unit_coeff) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divrem: division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational coef = rem[i] / b.leading();
        if (coef == 0) continue;
        quo[i - db] = coef;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= coef * b[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

Rational poly_resultant(const Poly& a, const Poly& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= a[0];
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= b[0];
        return r;
    }
    // Sylvester matrix, size (m+n); determinant by fraction-free-enough
    // rational Gaussian elimination.
    int sz = m + n;
    std::vector<std::vector<Rational>> s(sz, std::vector<Rational>(sz, Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[row][row + (m - i)] = a[i];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[n + row][row + (n - i)] = b[i];
    Rational det(1);
    for (int col = 0; col < sz; ++col) {
        int pivot = -1;
        for (int r = col; r < sz; ++r)
            if (s[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        Rational inv = Rational(1) / s[col][col];
        for (int r = col + 1; r < sz; ++r) {
            if (s[r][col] == 0) continue;
            Rational f = s[r][col] * inv;
            for (int cc = col; cc < sz; ++cc) s[r][cc] -= f * s[col][cc];
        }
    }
    return det;
}

Rational poly_discriminant(const Poly& f) {
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("poly_discriminant: degree < 1");
    Rational res = poly_resultant(f, f.derivative());
    Rational d = res / f.leading();
    int sign_exp = (n * (n - 1) / 2) % 2;
    return sign_exp ? -d : d;
}

std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    // Clear denominators: g = c*f integral; roots p/q have p | g0', q | lead,
    // after stripping the x^k factor.
    Int den(1);
    for (const auto& v : f.coeffs()) den = lcm(den, v.get_den());
    std::vector<Int> g;
    for (const auto& v : f.coeffs()) g.push_back(Int(v.get_num() * (den / v.get_den())));
    size_t low = 0;
    while (low < g.size() && g[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low + 1 >= g.size()) return roots;
    Int a0 = abs(g[low]), an = abs(g.back());
    std::vector<Int> ps = {1}, qs = {1};
    for (const auto& [p, e] : factor_integer(a0)) {
        std::vector<Int> next;
        Int pk(1);
        for (unsigned i = 0; i <= e; ++i, pk *= p)
            for (const auto& v : ps) next.push_back(v * pk);
        ps = std::move(next);
    }
    for (const auto& [p, e] : factor_integer(an)) {
        std::vector<Int> next;
        Int pk(1);
        for (unsigned i = 0; i <= e; ++i, pk *= p)
            for (const auto& v : qs) next.push_back(v * pk);
        qs = std::move(next);
    }
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                cand.canonicalize();
                if (f.eval(cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool cubic_is_irreducible(const Poly& f) {
    if (f.degree() != 3) throw std::invalid_argument("cubic_is_irreducible: degree != 3");
    // A cubic over Q is reducible iff it has a rational root.
    return rational_roots(f).empty();
}

CubicGaloisGroup cubic_galois_group(const Poly& f) {
    if (!cubic_is_irreducible(f))
        throw std::invalid_argument("cubic_galois_group: reducible cubic");
    Rational d = poly_discriminant(f);
    return is_rational_square(d) ? CubicGaloisGroup::C3 : CubicGaloisGroup::S3;
}

}  // namespace fs19
