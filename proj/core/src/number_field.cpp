#include "fs19/number_field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fs19/ideal.hpp"
#include "json.hpp"

namespace fs19 {

namespace {

Rational json_rational(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<int64_t>()));
    throw std::invalid_argument("certificate: expected integer or rational string");
}

QVec json_vector(const nlohmann::json& arr) {
    QVec out;
    for (const auto& v : arr) out.push_back(json_rational(v));
    return out;
}

}  // namespace

std::string to_string(const FieldElement& x) {
    std::string s = "[";
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (i) s += ", ";
        s += to_string(x.c[i]);
    }
    return s + "]";
}

FieldCertificate parse_field_certificate(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    FieldCertificate cert;
    cert.name = j.value("name", std::string());
    {
        QVec c = json_vector(j.at("defining_poly"));
        cert.defining_poly = Poly(std::move(c));
    }
    for (const auto& row : j.at("integral_basis"))
        cert.integral_basis.push_back(json_vector(row));
    Rational d = json_rational(j.at("field_disc"));
    if (!is_integer(d)) throw std::invalid_argument("certificate: field_disc not an integer");
    cert.field_disc = d.get_num();
    cert.r1 = j.at("signature").at(0).get<int>();
    cert.r2 = j.at("signature").at(1).get<int>();
    cert.torsion = json_vector(j.at("torsion"));
    for (const auto& u : j.at("units")) cert.units.push_back(json_vector(u));
    return cert;
}

FieldCertificate load_field_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field certificate: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_field_certificate(ss.str());
}

NumberField::NumberField(FieldCertificate cert) : cert_(std::move(cert)) {
    const Poly& f = cert_.defining_poly;
    n_ = f.degree();
    if (n_ < 1) throw std::invalid_argument("number field: degree < 1");
    if (!f.is_monic() || !f.is_integral())
        throw std::invalid_argument("number field: defining polynomial must be monic integral");
    if (cert_.integral_basis.size() != static_cast<size_t>(n_))
        throw std::invalid_argument("number field: basis size != degree");
    for (const auto& row : cert_.integral_basis)
        if (row.size() != static_cast<size_t>(n_))
            throw std::invalid_argument("number field: basis row size != degree");

    // basis rows b_i = sum_j B[i][j] theta^j; column convention below uses the
    // transpose so that power_coords = B^T * basis_coords.
    QMat bt(n_, QVec(n_, Rational(0)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) bt[j][i] = cert_.integral_basis[i][j];
    auto inv = qmat_inverse(bt);
    if (!inv) throw std::invalid_argument("number field: integral basis is singular");
    basis_inv_ = std::move(*inv);  // power coords -> basis coords

    // Multiplication table via polynomial arithmetic mod f.
    std::vector<Poly> bpoly(n_);
    for (int i = 0; i < n_; ++i) bpoly[i] = Poly(QVec(cert_.integral_basis[i]));
    mt_.assign(n_, std::vector<QVec>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            Poly prod = poly_divrem(bpoly[i] * bpoly[j], f).second;
            QVec power(n_, Rational(0));
            for (int k = 0; k <= prod.degree(); ++k) power[k] = prod[k];
            QVec coords = qmat_mul_vec(basis_inv_, power);
            mt_[i][j] = coords;
            mt_[j][i] = std::move(coords);
        }
    mt_integral_ = true;
    for (int i = 0; i < n_ && mt_integral_; ++i)
        for (int j = 0; j < n_ && mt_integral_; ++j)
            for (const auto& v : mt_[i][j])
                if (!is_integer(v)) {
                    mt_integral_ = false;
                    break;
                }
    if (mt_integral_) {
        mt_int_.assign(n_, std::vector<ZVec>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                ZVec row;
                for (const auto& v : mt_[i][j]) row.push_back(v.get_num());
                mt_int_[i][j] = std::move(row);
            }
    }

    // Complex embeddings of the basis (search prefilters only).
    auto roots = complex_roots(f);
    emb_.assign(n_, std::vector<std::complex<double>>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::complex<double> acc(0.0, 0.0);
            for (int k = n_ - 1; k >= 0; --k)
                acc = acc * roots[j] + std::complex<double>(cert_.integral_basis[i][k].get_d(), 0.0);
            emb_[i][j] = acc;
        }
}

FieldElement NumberField::zero() const { return FieldElement{QVec(n_, Rational(0))}; }

FieldElement NumberField::one() const {
    QVec power(n_, Rational(0));
    power[0] = 1;
    return FieldElement{qmat_mul_vec(basis_inv_, power)};
}

FieldElement NumberField::theta() const {
    QVec power(n_, Rational(0));
    if (n_ > 1) power[1] = 1;  // degree-1 field: theta = root of f = linear
    else power[0] = -cert_.defining_poly[0];
    return FieldElement{qmat_mul_vec(basis_inv_, power)};
}

FieldElement NumberField::from_int_coords(const std::vector<long>& v) const {
    QVec c(n_, Rational(0));
    for (size_t i = 0; i < v.size() && i < static_cast<size_t>(n_); ++i) c[i] = Rational(v[i]);
    return FieldElement{std::move(c)};
}

FieldElement NumberField::from_power_coords(QVec v) const {
    v.resize(n_, Rational(0));
    return FieldElement{qmat_mul_vec(basis_inv_, v)};
}

QVec NumberField::to_power_coords(const FieldElement& x) const {
    QVec power(n_, Rational(0));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) power[j] += x.c[i] * cert_.integral_basis[i][j];
    return power;
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
    QVec c(n_);
    for (int i = 0; i < n_; ++i) c[i] = a.c[i] + b.c[i];
    return FieldElement{std::move(c)};
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
    QVec c(n_);
    for (int i = 0; i < n_; ++i) c[i] = a.c[i] - b.c[i];
    return FieldElement{std::move(c)};
}

FieldElement NumberField::neg(const FieldElement& a) const {
    QVec c(n_);
    for (int i = 0; i < n_; ++i) c[i] = -a.c[i];
    return FieldElement{std::move(c)};
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
    QVec out(n_, Rational(0));
    for (int i = 0; i < n_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (b.c[j] == 0) continue;
            Rational s = a.c[i] * b.c[j];
            const QVec& row = mt_[i][j];
            for (int k = 0; k < n_; ++k)
                if (row[k] != 0) out[k] += s * row[k];
        }
    }
    return FieldElement{std::move(out)};
}

FieldElement NumberField::mul_scalar(const FieldElement& a, const Rational& s) const {
    QVec c(n_);
    for (int i = 0; i < n_; ++i) c[i] = a.c[i] * s;
    return FieldElement{std::move(c)};
}

std::optional<FieldElement> NumberField::inverse(const FieldElement& a) const {
    QMat m = mult_matrix(a);
    auto sol = qmat_solve(std::move(m), one().c);
    if (!sol) return std::nullopt;
    return FieldElement{std::move(*sol)};
}

FieldElement NumberField::pow(const FieldElement& a, unsigned long e) const {
    FieldElement result = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool NumberField::is_integral(const FieldElement& x) const {
    for (const auto& v : x.c)
        if (!is_integer(v)) return false;
    return true;
}

QMat NumberField::mult_matrix(const FieldElement& x) const {
    QMat m(n_, QVec(n_, Rational(0)));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) {
            if (x.c[i] == 0) continue;
            const QVec& row = mt_[i][j];
            for (int k = 0; k < n_; ++k)
                if (row[k] != 0) m[k][j] += x.c[i] * row[k];
        }
    return m;
}

Rational NumberField::norm(const FieldElement& x) const { return qmat_det(mult_matrix(x)); }

Rational NumberField::trace(const FieldElement& x) const {
    Rational t(0);
    for (int i = 0; i < n_; ++i) {
        if (x.c[i] == 0) continue;
        Rational ti(0);
        for (int j = 0; j < n_; ++j) ti += mt_[i][j][j];
        t += x.c[i] * ti;
    }
    return t;
}

Poly NumberField::min_poly(const FieldElement& x) const {
    // Stack powers of x until linearly dependent; the first dependency gives
    // the (monic) minimal polynomial.
    std::vector<QVec> powers;
    FieldElement cur = one();
    for (int k = 0; k <= n_; ++k) {
        powers.push_back(cur.c);
        // Try to express cur as a combination of the previous powers.
        if (k >= 1) {
            QMat m(n_, QVec(k, Rational(0)));
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < k; ++c) m[r][c] = powers[c][r];
            // Solve m * a = powers[k] in the least-squares-free exact sense:
            // row reduce the augmented system.
            QMat aug = m;
            for (int r = 0; r < n_; ++r) aug[r].push_back(powers[k][r]);
            // Gaussian elimination.
            int row = 0;
            std::vector<int> pivots;
            for (int col = 0; col < k && row < n_; ++col) {
                int pr = row;
                while (pr < n_ && aug[pr][col] == 0) ++pr;
                if (pr == n_) continue;
                std::swap(aug[pr], aug[row]);
                Rational d = Rational(1) / aug[row][col];
                for (int c = col; c <= k; ++c) aug[row][c] *= d;
                for (int r = 0; r < n_; ++r) {
                    if (r == row || aug[r][col] == 0) continue;
                    Rational fm = aug[r][col];
                    for (int c = col; c <= k; ++c) aug[r][c] -= fm * aug[row][c];
                }
                pivots.push_back(col);
                ++row;
            }
            bool consistent = true;
            for (int r = row; r < n_; ++r)
                if (aug[r][k] != 0) consistent = false;
            if (consistent) {
                QVec coeffs(k + 1, Rational(0));
                for (size_t pi = 0; pi < pivots.size(); ++pi)
                    coeffs[pivots[pi]] = -aug[pi][k];
                coeffs[k] = 1;
                return Poly(std::move(coeffs));
            }
        }
        cur = mul(cur, x);
    }
    throw std::logic_error("min_poly: no dependency up to the field degree");
}

FieldElement NumberField::eval_poly(const Poly& g) const {
    Poly r = poly_divrem(g, cert_.defining_poly).second;
    QVec power(n_, Rational(0));
    for (int k = 0; k <= r.degree(); ++k) power[k] = r[k];
    return FieldElement{qmat_mul_vec(basis_inv_, power)};
}

FieldElement NumberField::eval_poly_at(const Poly& g, const FieldElement& x) const {
    FieldElement acc = zero();
    for (int i = g.degree(); i >= 0; --i) {
        acc = mul(acc, x);
        if (g[i] != 0) acc = add(acc, mul_scalar(one(), g[i]));
    }
    return acc;
}

const std::vector<std::vector<ZVec>>& NumberField::mult_table_int() const {
    if (!mt_integral_)
        throw std::logic_error("mult_table_int: basis is not closed under multiplication");
    return mt_int_;
}

const std::vector<std::vector<std::complex<double>>>& NumberField::embeddings() const {
    return emb_;
}

std::vector<std::complex<double>> complex_roots(const Poly& f) {
    int n = f.degree();
    if (n < 1) return {};
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = f[i].get_d();
    for (int i = 0; i <= n; ++i) c[i] /= f[n].get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc(0, 0);
        for (int i = n; i >= 0; --i) acc = acc * z + c[i];
        return acc;
    };
    // Durand-Kerner with the standard deterministic start.
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> pw = seed;
    for (int i = 0; i < n; ++i) {
        z[i] = pw;
        pw *= seed;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom(1, 0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            std::complex<double> d = eval(z[i]) / denom;
            z[i] -= d;
            worst = std::max(worst, std::abs(d));
        }
        if (worst < 1e-14) break;
    }
    // Deterministic ordering: by (real, imag).
    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

namespace {

std::optional<Rational> reconstruct_rational(double x, long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    // Continued fraction expansion.
    double v = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) return std::nullopt;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = v - fl;
        if (frac < 1e-12) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rational r(p1, q1);
    r.canonicalize();
    if (std::abs(r.get_d() - x) > 1e-6 * (1.0 + std::abs(x))) return std::nullopt;
    return r;
}

}  // namespace

std::vector<FieldElement> field_roots(const NumberField& nf, const Poly& g) {
    if (g.degree() < 1) return {};
    int n = nf.degree();
    // Rational roots first (exact, no numerics).
    std::vector<FieldElement> found;
    auto push_unique = [&](const FieldElement& e) {
        for (const auto& f : found)
            if (f == e) return;
        found.push_back(e);
    };
    for (const auto& r : rational_roots(g))
        push_unique(nf.mul_scalar(nf.one(), r));

    auto groots = complex_roots(g);
    int dg = static_cast<int>(groots.size());
    const auto& emb = nf.embeddings();
    // Try every assignment of an embedding to a root of g: solve
    // sum_i x_i emb[i][j] = root(a_j) and reconstruct rational coordinates.
    long total = 1;
    for (int j = 0; j < n; ++j) {
        total *= dg;
        if (total > 2000000) return found;  // out of intended scope
    }
    std::vector<int> assign(n, 0);
    std::vector<std::complex<double>> mat(n * n), rhs(n);
    for (long idx = 0; idx < total; ++idx) {
        long t = idx;
        for (int j = 0; j < n; ++j) {
            assign[j] = static_cast<int>(t % dg);
            t /= dg;
        }
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) mat[j * n + i] = emb[i][j];
            rhs[j] = groots[assign[j]];
        }
        // Gaussian elimination on the n x n complex system.
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int pr = col;
            double best = std::abs(mat[col * n + col]);
            for (int r = col + 1; r < n; ++r) {
                double mag = std::abs(mat[r * n + col]);
                if (mag > best) {
                    best = mag;
                    pr = r;
                }
            }
            if (best < 1e-12) {
                singular = true;
                break;
            }
            if (pr != col) {
                for (int cc = 0; cc < n; ++cc) std::swap(mat[pr * n + cc], mat[col * n + cc]);
                std::swap(rhs[pr], rhs[col]);
            }
            std::complex<double> inv = 1.0 / mat[col * n + col];
            for (int cc = col; cc < n; ++cc) mat[col * n + cc] *= inv;
            rhs[col] *= inv;
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                std::complex<double> fmul = mat[r * n + col];
                if (std::abs(fmul) == 0.0) continue;
                for (int cc = col; cc < n; ++cc) mat[r * n + cc] -= fmul * mat[col * n + cc];
                rhs[r] -= fmul * rhs[col];
            }
        }
        if (singular) continue;
        bool real_ok = true;
        QVec coords(n);
        for (int i = 0; i < n && real_ok; ++i) {
            if (std::abs(rhs[i].imag()) > 1e-6) {
                real_ok = false;
                break;
            }
            auto rec = reconstruct_rational(rhs[i].real(), 1000000);
            if (!rec) {
                real_ok = false;
                break;
            }
            coords[i] = *rec;
        }
        if (!real_ok) continue;
        FieldElement cand{coords};
        FieldElement val = nf.eval_poly_at(g, cand);
        if (val == nf.zero()) push_unique(cand);
    }
    return found;
}

bool has_root(const NumberField& nf, const Poly& g) { return !field_roots(nf, g).empty(); }

CertificateCheck verify_field_certificate(const NumberField& nf) {
    CertificateCheck out;
    const auto& cert = nf.cert();
    const Poly& f = cert.defining_poly;
    int n = nf.degree();

    // Defining polynomial sanity: monic integral (enforced at construction),
    // squarefree over Q, and no linear factor beyond degree 1. Full
    // Q-irreducibility is certified at data-generation time; the unit tests
    // re-derive it for the shipped polynomials by exact special-case
    // arguments.
    Rational disc_f = poly_discriminant(f);
    out.poly_ok = (disc_f != 0) && (n == 1 || rational_roots(f).empty());
    if (!out.poly_ok) out.notes.push_back("defining polynomial not squarefree or has a rational root");

    out.closure_ok = nf.mult_table_is_integral();
    if (out.closure_ok) {
        // 1 and theta must lie in the lattice with integral coordinates.
        QVec one_p(n, Rational(0));
        one_p[0] = 1;
        FieldElement one_e = nf.from_power_coords(one_p);
        FieldElement th = nf.theta();
        out.closure_ok = nf.is_integral(one_e) && nf.is_integral(th);
        if (!out.closure_ok) out.notes.push_back("1 or theta not in the basis lattice");
    } else {
        out.notes.push_back("basis not multiplicatively closed");
    }

    // Trace-form Gram determinant must equal the certified discriminant.
    {
        QMat gram(n, QVec(n, Rational(0)));
        std::vector<FieldElement> b(n);
        for (int i = 0; i < n; ++i) {
            std::vector<long> e(n, 0);
            e[i] = 1;
            b[i] = nf.from_int_coords(e);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rational t = nf.trace(nf.mul(b[i], b[j]));
                gram[i][j] = t;
                gram[j][i] = t;
            }
        Rational det = qmat_det(std::move(gram));
        out.disc_ok = (det == Rational(cert.field_disc));
        if (!out.disc_ok)
            out.notes.push_back("trace-form discriminant " + to_string(det) +
                                " != certified " + to_string(cert.field_disc));
    }

    // Signature: r1 + 2 r2 = n and sign(disc) = (-1)^r2.
    {
        bool count_ok = (cert.r1 >= 0 && cert.r2 >= 0 && cert.r1 + 2 * cert.r2 == n);
        int expected_sign = (cert.r2 % 2 == 0) ? 1 : -1;
        bool sign_ok = (sgn(cert.field_disc) == expected_sign);
        out.signature_ok = count_ok && sign_ok;
        if (!out.signature_ok) out.notes.push_back("signature inconsistent with discriminant");
    }

    // q-maximality at every prime q with q^2 | disc(f).
    out.maximality_ok = out.closure_ok;
    if (out.closure_ok && disc_f != 0) {
        Int d = disc_f.get_num();
        for (const auto& [q, e] : factor_integer(d)) {
            if (e < 2) continue;
            if (!q_maximality_check(nf, q)) {
                out.maximality_ok = false;
                out.notes.push_back("order not maximal at " + to_string(q));
            }
        }
    }

    // Units: torsion generator integral of finite multiplicative order, the
    // listed units integral with norm +-1, count = r1 + r2 - 1.
    {
        bool ok = true;
        FieldElement t{cert.torsion};
        if (t.c.size() != static_cast<size_t>(n) || !nf.is_integral(t)) ok = false;
        if (ok) {
            auto ord = multiplicative_order(nf, t);
            if (!ord) {
                ok = false;
            } else {
                out.notes.push_back("torsion generator has order " + std::to_string(*ord));
            }
        }
        int expected_units = nf.unit_rank();
        if (static_cast<int>(cert.units.size()) != expected_units) ok = false;
        for (const auto& uc : cert.units) {
            FieldElement u{uc};
            if (uc.size() != static_cast<size_t>(n) || !nf.is_integral(u)) {
                ok = false;
                continue;
            }
            Rational nr = nf.norm(u);
            if (!(nr == 1 || nr == -1)) ok = false;
        }
        out.units_ok = ok;
        if (!ok) out.notes.push_back("unit certificate failed (integrality/norm/order/count)");
    }
    return out;
}

std::optional<unsigned> multiplicative_order(const NumberField& nf, const FieldElement& x,
                                             unsigned cap) {
    FieldElement acc = x;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc == nf.one()) return k;
        acc = nf.mul(acc, x);
    }
    return std::nullopt;
}

}  // namespace fs19
