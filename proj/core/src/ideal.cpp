#include "fs19/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "fs19/modp.hpp"

namespace fs19 {

namespace {

// Scale rational coordinate rows to a common denominator; returns (rows, den).
std::pair<ZMat, Int> clear_denominators(const std::vector<QVec>& rows) {
    Int den = 1;
    for (const auto& r : rows)
        for (const auto& v : r) den = lcm(den, v.get_den());
    ZMat out;
    for (const auto& r : rows) {
        ZVec z;
        for (const auto& v : r) z.push_back(v.get_num() * (den / v.get_den()));
        out.push_back(std::move(z));
    }
    return {out, den};
}

FractionalIdeal normalized(ZMat rows, Int den) {
    ZMat h = hnf_row_lattice(std::move(rows));
    Int g = den;
    for (const auto& r : h)
        for (const auto& v : r) g = gcd(g, v);
    if (g > 1) {
        for (auto& r : h)
            for (auto& v : r) v /= g;
        den /= g;
    }
    return FractionalIdeal{std::move(h), den};
}

}  // namespace

FractionalIdeal ideal_whole_ring(const NumberField& nf) {
    int n = nf.degree();
    ZMat rows(n, ZVec(n, 0));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return FractionalIdeal{std::move(rows), 1};
}

FractionalIdeal ideal_from_elements(const NumberField& nf,
                                    const std::vector<FieldElement>& gens) {
    int n = nf.degree();
    std::vector<QVec> rows;
    for (const auto& g : gens)
        for (int j = 0; j < n; ++j) {
            std::vector<long> e(n, 0);
            e[j] = 1;
            rows.push_back(nf.mul(g, nf.from_int_coords(e)).c);
        }
    auto [z, den] = clear_denominators(rows);
    return normalized(std::move(z), den);
}

FractionalIdeal principal_ideal(const NumberField& nf, const FieldElement& g) {
    return ideal_from_elements(nf, {g});
}

FractionalIdeal rational_ideal(const NumberField& nf, const Rational& r) {
    return principal_ideal(nf, nf.mul_scalar(nf.one(), r));
}

FractionalIdeal ideal_mul(const NumberField& nf, const FractionalIdeal& a,
                          const FractionalIdeal& b) {
    int n = nf.degree();
    ZMat rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QVec ac(n), bc(n);
            for (int k = 0; k < n; ++k) {
                ac[k] = Rational(a.basis[i][k]);
                bc[k] = Rational(b.basis[j][k]);
            }
            FieldElement prod = nf.mul(FieldElement{ac}, FieldElement{bc});
            ZVec z;
            for (const auto& v : prod.c) {
                if (!is_integer(v))
                    throw std::logic_error("ideal_mul: basis not multiplicatively closed");
                z.push_back(v.get_num());
            }
            rows.push_back(std::move(z));
        }
    return normalized(std::move(rows), a.den * b.den);
}

FractionalIdeal ideal_add(const NumberField&, const FractionalIdeal& a,
                          const FractionalIdeal& b) {
    Int den = lcm(a.den, b.den);
    Int sa = den / a.den, sb = den / b.den;
    ZMat rows;
    for (const auto& r : a.basis) {
        ZVec z;
        for (const auto& v : r) z.push_back(v * sa);
        rows.push_back(std::move(z));
    }
    for (const auto& r : b.basis) {
        ZVec z;
        for (const auto& v : r) z.push_back(v * sb);
        rows.push_back(std::move(z));
    }
    return normalized(std::move(rows), den);
}

FractionalIdeal ideal_pow(const NumberField& nf, FractionalIdeal a, unsigned e) {
    FractionalIdeal out = ideal_whole_ring(nf);
    for (unsigned i = 0; i < e; ++i) out = ideal_mul(nf, out, a);
    return out;
}

Rational ideal_norm(const NumberField&, const FractionalIdeal& a) {
    Rational det(diag_product(a.basis));
    Rational d(a.den);
    int n = static_cast<int>(a.basis.size());
    Rational dn(1);
    for (int i = 0; i < n; ++i) dn *= d;
    Rational out = det / dn;
    out.canonicalize();
    return out;
}

bool ideal_contains(const NumberField& nf, const FractionalIdeal& a, const FieldElement& x) {
    int n = nf.degree();
    ZVec v(n);
    for (int i = 0; i < n; ++i) {
        Rational s = x.c[i] * Rational(a.den);
        if (!is_integer(s)) return false;
        v[i] = s.get_num();
    }
    return hnf_contains(a.basis, v);
}

bool ideal_subset(const NumberField& nf, const FractionalIdeal& inner,
                  const FractionalIdeal& outer) {
    int n = nf.degree();
    for (int i = 0; i < n; ++i) {
        QVec c(n);
        for (int k = 0; k < n; ++k) c[k] = Rational(inner.basis[i][k], inner.den);
        if (!ideal_contains(nf, outer, FieldElement{std::move(c)})) return false;
    }
    return true;
}

bool ideal_is_whole_ring(const NumberField& nf, const FractionalIdeal& a) {
    return a.den == 1 && diag_product(a.basis) == 1 && nf.degree() > 0;
}

Int order_index(const NumberField& nf) {
    Rational disc_f = poly_discriminant(nf.defining_poly());
    Rational ratio = disc_f / Rational(nf.disc());
    ratio.canonicalize();
    if (!is_integer(ratio)) throw std::logic_error("order_index: disc ratio not integral");
    Int sq = ratio.get_num();
    Int root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    if (root * root != sq) throw std::logic_error("order_index: disc ratio not a square");
    return root;
}

namespace {

// Multiplication of coordinate vectors mod p via the integral table.
struct AlgebraModP {
    const NumberField& nf;
    long p;
    int n;
    const std::vector<std::vector<ZVec>>& mt;

    AlgebraModP(const NumberField& f, long pp)
        : nf(f), p(pp), n(f.degree()), mt(f.mult_table_int()) {}

    std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> out(n, 0);
        for (int i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!b[j]) continue;
                long s = (a[i] * b[j]) % p;
                if (!s) continue;
                const ZVec& row = mt[i][j];
                for (int k = 0; k < n; ++k) {
                    if (row[k] == 0) continue;
                    long m = static_cast<long>(mpz_fdiv_ui(row[k].get_mpz_t(), p));
                    out[k] = (out[k] + s * m) % p;
                }
            }
        }
        return out;
    }

    std::vector<long> pow_p(std::vector<long> a) const {
        // a^p via square-and-multiply on the exponent p.
        std::vector<long> result(n, 0);
        std::vector<long> one_c(n, 0);
        {
            FieldElement e1 = nf.one();
            for (int i = 0; i < n; ++i)
                one_c[i] = static_cast<long>(mpz_fdiv_ui(e1.c[i].get_num().get_mpz_t(), p));
        }
        result = one_c;
        long e = p;
        while (e) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }
};

// Basis vectors of the radical of O/pO, as F_p coordinate vectors.
std::vector<std::vector<uint64_t>> radical_basis(const NumberField& nf, long p) {
    AlgebraModP A(nf, p);
    int n = A.n;
    // Frobenius matrix: column i = coords of (b_i)^p.
    std::vector<std::vector<uint64_t>> frob(n, std::vector<uint64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        auto img = A.pow_p(e);
        for (int k = 0; k < n; ++k) frob[k][i] = static_cast<uint64_t>(img[k]);
    }
    // Iterate until p^m >= n.
    auto matmul = [&](const std::vector<std::vector<uint64_t>>& X,
                      const std::vector<std::vector<uint64_t>>& Y) {
        std::vector<std::vector<uint64_t>> Z(n, std::vector<uint64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!X[i][k]) continue;
                for (int j = 0; j < n; ++j)
                    Z[i][j] = (Z[i][j] + X[i][k] * Y[k][j]) % static_cast<uint64_t>(p);
            }
        return Z;
    };
    auto M = frob;
    long q = p;
    while (q < n) {
        M = matmul(M, frob);
        q *= p;
    }
    return fp_kernel(M, static_cast<uint64_t>(p));
}

}  // namespace

FractionalIdeal p_radical(const NumberField& nf, const Int& p) {
    long pl = p.get_si();
    int n = nf.degree();
    auto rad = radical_basis(nf, pl);
    ZMat rows;
    for (int i = 0; i < n; ++i) {
        ZVec r(n, 0);
        r[i] = p;
        rows.push_back(std::move(r));
    }
    for (const auto& v : rad) {
        ZVec r(n);
        for (int i = 0; i < n; ++i) r[i] = Int(static_cast<unsigned long>(v[i]));
        rows.push_back(std::move(r));
    }
    return normalized(std::move(rows), 1);
}

bool q_maximality_check(const NumberField& nf, const Int& q) {
    // Pohst-Zassenhaus criterion: O is maximal at q iff the multiplier ring
    // of the q-radical R, {y in O : y R <= q R} computed mod q, is exactly qO.
    long ql = q.get_si();
    int n = nf.degree();
    FractionalIdeal R = p_radical(nf, q);
    const ZMat& H = R.basis;
    const auto& mt = nf.mult_table_int();

    // Express an integral vector in the (upper triangular) basis H.
    auto coords_in_R = [&](const ZVec& v) {
        ZVec t(n, 0);
        ZVec rem = v;
        // Rows are upper triangular with pivot i in column i, so solve from
        // the top: only row i touches column i once rows 0..i-1 are removed.
        for (int i = 0; i < n; ++i) {
            if (rem[i] % H[i][i] != 0)
                throw std::logic_error("q_maximality_check: product escaped the radical");
            t[i] = rem[i] / H[i][i];
            for (int c = 0; c < n; ++c) rem[c] -= t[i] * H[i][c];
        }
        return t;
    };

    // Constraint matrix over F_q: y = sum y_j b_j with y_j in F_q must satisfy
    // (y * r_k) in qR for every basis row r_k of R.
    std::vector<std::vector<uint64_t>> M;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            // products b_j * r_k for all j: row of constraints per R-coordinate i.
            std::vector<uint64_t> row(n, 0);
            for (int j = 0; j < n; ++j) {
                ZVec prod(n, 0);
                for (int a = 0; a < n; ++a) {
                    if (H[k][a] == 0) continue;
                    const ZVec& mrow = mt[j][a];
                    for (int c = 0; c < n; ++c) prod[c] += H[k][a] * mrow[c];
                }
                ZVec t = coords_in_R(prod);
                row[j] = mpz_fdiv_ui(t[i].get_mpz_t(), static_cast<unsigned long>(ql));
            }
            M.push_back(std::move(row));
        }
    }
    auto ker = fp_kernel(M, static_cast<uint64_t>(ql));
    return ker.empty();
}

namespace {

// Split the etale quotient B = (O/pO)/rad into its field components.
// Vectors are F_p coordinate vectors in B (dimension nb).
struct EtaleAlgebra {
    int nb;
    long p;
    std::vector<int> free_cols;               // B coordinates = these A-columns
    std::vector<std::vector<uint64_t>> rad_ech;  // echelonized radical basis (A coords)
    std::vector<int> rad_pivots;
    const AlgebraModP& A;

    std::vector<long> lift(const std::vector<uint64_t>& v) const {
        std::vector<long> out(A.n, 0);
        for (int i = 0; i < nb; ++i) out[free_cols[i]] = static_cast<long>(v[i]);
        return out;
    }

    std::vector<uint64_t> project(std::vector<long> v) const {
        // Reduce by the echelonized radical basis, then read free coordinates.
        int n = A.n;
        std::vector<uint64_t> w(n);
        for (int i = 0; i < n; ++i)
            w[i] = static_cast<uint64_t>(((v[i] % p) + p) % p);
        uint64_t up = static_cast<uint64_t>(p);
        for (size_t r = 0; r < rad_ech.size(); ++r) {
            int piv = rad_pivots[r];
            if (w[piv]) {
                uint64_t c = w[piv];  // echelon rows have pivot 1
                for (int i = 0; i < n; ++i)
                    w[i] = (w[i] + (up - c * rad_ech[r][i] % up) ) % up;
            }
        }
        std::vector<uint64_t> out(nb);
        for (int i = 0; i < nb; ++i) out[i] = w[free_cols[i]];
        return out;
    }

    std::vector<uint64_t> mul(const std::vector<uint64_t>& a,
                              const std::vector<uint64_t>& b) const {
        return project(A.mul(lift(a), lift(b)));
    }

    std::vector<uint64_t> pow_p(const std::vector<uint64_t>& a) const {
        return project(A.pow_p(lift(a)));
    }
};

}  // namespace

std::vector<PrimeFactor> factor_rational_prime(const NumberField& nf, const Int& p) {
    int n = nf.degree();
    if (!is_prime(p)) throw std::invalid_argument("factor_rational_prime: p not prime");
    Int idx = order_index(nf);
    std::vector<PrimeFactor> out;

    if (idx % p != 0) {
        // The equation order is p-maximal: factor f mod p directly.
        auto fac = factor_mod_p(nf.defining_poly(), p.get_ui());
        for (const auto& g : fac.factors) {
            QVec lift;
            for (auto c : g.factor.coeffs()) lift.push_back(Rational(static_cast<long>(c)));
            Poly gl{std::move(lift)};
            FieldElement gen = nf.eval_poly(gl);
            FractionalIdeal P =
                ideal_from_elements(nf, {nf.mul_scalar(nf.one(), Rational(p)), gen});
            PrimeFactor pf;
            pf.ideal = std::move(P);
            pf.e = static_cast<unsigned>(g.multiplicity);
            pf.f = static_cast<unsigned>(g.factor.degree());
            out.push_back(std::move(pf));
        }
    } else {
        // p divides the index: work in O/pO via the integral basis.
        long pl = p.get_si();
        AlgebraModP A(nf, pl);
        auto rad = radical_basis(nf, pl);
        // Echelonize the radical basis for projection.
        std::vector<std::vector<uint64_t>> ech = rad;
        std::vector<int> pivots;
        {
            uint64_t up = static_cast<uint64_t>(pl);
            size_t row = 0;
            for (int col = 0; col < n && row < ech.size(); ++col) {
                size_t pr = row;
                while (pr < ech.size() && ech[pr][col] == 0) ++pr;
                if (pr == ech.size()) continue;
                std::swap(ech[pr], ech[row]);
                uint64_t inv = fp_inv(ech[row][col], up);
                for (int c = 0; c < n; ++c) ech[row][c] = ech[row][c] * inv % up;
                for (size_t r = 0; r < ech.size(); ++r) {
                    if (r == row || ech[r][col] == 0) continue;
                    uint64_t fm = ech[r][col];
                    for (int c = 0; c < n; ++c)
                        ech[r][c] = (ech[r][c] + (up - fm) * ech[row][c]) % up;
                }
                pivots.push_back(col);
                ++row;
            }
        }
        std::vector<int> free_cols;
        for (int c = 0; c < n; ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                free_cols.push_back(c);
        EtaleAlgebra B{static_cast<int>(free_cols.size()), pl, free_cols, ech, pivots, A};
        int nb = B.nb;

        // Identity of B.
        std::vector<uint64_t> idB;
        {
            FieldElement e1 = nf.one();
            std::vector<long> v(n);
            for (int i = 0; i < n; ++i)
                v[i] = static_cast<long>(mpz_fdiv_ui(e1.c[i].get_num().get_mpz_t(),
                                                     static_cast<unsigned long>(pl)));
            idB = B.project(v);
        }

        // Recursive Frobenius splitting. Components are bases (lists of
        // B-vectors) of the minimal ideals of B.
        std::vector<std::vector<std::vector<uint64_t>>> components;
        std::vector<std::vector<std::vector<uint64_t>>> work;
        {
            std::vector<std::vector<uint64_t>> full;
            for (int i = 0; i < nb; ++i) {
                std::vector<uint64_t> e(nb, 0);
                e[i] = 1;
                full.push_back(std::move(e));
            }
            work.push_back(std::move(full));
        }
        uint64_t up = static_cast<uint64_t>(pl);
        auto solve_in_span = [&](const std::vector<std::vector<uint64_t>>& basis,
                                 const std::vector<uint64_t>& target) {
            // Express target in the span; returns coefficient vector.
            size_t k = basis.size();
            std::vector<std::vector<uint64_t>> aug(nb, std::vector<uint64_t>(k + 1, 0));
            for (int r = 0; r < nb; ++r) {
                for (size_t c = 0; c < k; ++c) aug[r][c] = basis[c][r];
                aug[r][k] = target[r];
            }
            std::vector<uint64_t> sol(k, 0);
            size_t row = 0;
            std::vector<std::pair<size_t, size_t>> piv;
            for (size_t col = 0; col < k && row < static_cast<size_t>(nb); ++col) {
                size_t pr = row;
                while (pr < static_cast<size_t>(nb) && aug[pr][col] == 0) ++pr;
                if (pr == static_cast<size_t>(nb)) continue;
                std::swap(aug[pr], aug[row]);
                uint64_t inv = fp_inv(aug[row][col], up);
                for (size_t c = col; c <= k; ++c) aug[row][c] = aug[row][c] * inv % up;
                for (size_t r = 0; r < static_cast<size_t>(nb); ++r) {
                    if (r == row || aug[r][col] == 0) continue;
                    uint64_t fm = aug[r][col];
                    for (size_t c = col; c <= k; ++c)
                        aug[r][c] = (aug[r][c] + (up - fm) * aug[row][c]) % up;
                }
                piv.emplace_back(row, col);
                ++row;
            }
            for (auto [r, c] : piv) sol[c] = aug[r][k];
            return sol;
        };

        while (!work.empty()) {
            auto comp = std::move(work.back());
            work.pop_back();
            size_t dim = comp.size();
            // Identity of the component: solve sum c_k (v_k * w_l) = w_l.
            // Frobenius restricted to the component.
            std::vector<std::vector<uint64_t>> frobC(dim, std::vector<uint64_t>(dim, 0));
            for (size_t i = 0; i < dim; ++i) {
                auto img = B.pow_p(comp[i]);
                auto c = solve_in_span(comp, img);
                for (size_t k = 0; k < dim; ++k) frobC[k][i] = c[k];
            }
            // Fixed space of Frobenius on the component.
            auto fminus = frobC;
            for (size_t i = 0; i < dim; ++i)
                fminus[i][i] = (fminus[i][i] + up - 1) % up;
            auto fixed = fp_kernel(fminus, up);
            if (fixed.size() <= 1) {
                components.push_back(std::move(comp));
                continue;
            }
            // Component identity in component coordinates: solve
            // (sum c_k v_k) * v_l = v_l for all basis vectors v_l.
            std::vector<uint64_t> idc_coords(dim, 0);
            {
                std::vector<std::vector<uint64_t>> big(dim * static_cast<size_t>(nb),
                                                        std::vector<uint64_t>(dim + 1, 0));
                for (size_t l = 0; l < dim; ++l) {
                    for (size_t k = 0; k < dim; ++k) {
                        auto prod = B.mul(comp[k], comp[l]);
                        for (int r = 0; r < nb; ++r)
                            big[l * static_cast<size_t>(nb) + static_cast<size_t>(r)][k] =
                                prod[r];
                    }
                    for (int r = 0; r < nb; ++r)
                        big[l * static_cast<size_t>(nb) + static_cast<size_t>(r)][dim] =
                            comp[l][r];
                }
                size_t rows = big.size();
                size_t rr = 0;
                std::vector<std::pair<size_t, size_t>> piv;
                for (size_t col = 0; col < dim && rr < rows; ++col) {
                    size_t pr = rr;
                    while (pr < rows && big[pr][col] == 0) ++pr;
                    if (pr == rows) continue;
                    std::swap(big[pr], big[rr]);
                    uint64_t inv = fp_inv(big[rr][col], up);
                    for (size_t c = col; c <= dim; ++c) big[rr][c] = big[rr][c] * inv % up;
                    for (size_t r2 = 0; r2 < rows; ++r2) {
                        if (r2 == rr || big[r2][col] == 0) continue;
                        uint64_t fm = big[r2][col];
                        for (size_t c = col; c <= dim; ++c)
                            big[r2][c] = (big[r2][c] + (up - fm) * big[rr][c]) % up;
                    }
                    piv.emplace_back(rr, col);
                    ++rr;
                }
                for (auto [r2, c2] : piv) idc_coords[c2] = big[r2][dim];
            }
            // Pick a Frobenius-fixed element not proportional to the identity.
            std::vector<uint64_t> t;
            {
                for (const auto& fx : fixed) {
                    // fx is in component coordinates; check proportionality to idC.
                    bool prop = false;
                    for (uint64_t c = 0; c < up && !prop; ++c) {
                        bool eq = true;
                        for (size_t k = 0; k < dim; ++k)
                            if (fx[k] != c * idc_coords[k] % up) {
                                eq = false;
                                break;
                            }
                        if (eq) prop = true;
                    }
                    if (!prop) {
                        t.assign(nb, 0);
                        for (size_t k = 0; k < dim; ++k)
                            for (int r = 0; r < nb; ++r)
                                t[r] = (t[r] + fx[k] * comp[k][r]) % up;
                        break;
                    }
                }
            }
            if (t.empty()) throw std::logic_error("factor_rational_prime: splitting failed");
            // Eigenspaces of multiplication by t are proper ideals.
            bool split_done = false;
            for (uint64_t c = 0; c < up && !split_done; ++c) {
                // kernel of (t - c*id) restricted to the component.
                std::vector<std::vector<uint64_t>> m(dim, std::vector<uint64_t>(dim, 0));
                for (size_t i = 0; i < dim; ++i) {
                    auto prod = B.mul(t, comp[i]);
                    for (int r = 0; r < nb; ++r)
                        prod[static_cast<size_t>(r)] =
                            (prod[static_cast<size_t>(r)] + (up - c) * comp[i][static_cast<size_t>(r)]) % up;
                    auto cc = solve_in_span(comp, prod);
                    for (size_t k = 0; k < dim; ++k) m[k][i] = cc[k];
                }
                auto ker = fp_kernel(m, up);
                if (ker.empty() || ker.size() == dim) continue;
                // Two pieces: the kernel, and the image-complement obtained by
                // recursing on eigenspaces for other c values; simplest is to
                // collect all nonzero eigenspaces across c and recurse on each.
                std::vector<std::vector<uint64_t>> piece;
                for (const auto& kv : ker) {
                    std::vector<uint64_t> v(nb, 0);
                    for (size_t k = 0; k < dim; ++k)
                        for (int r = 0; r < nb; ++r)
                            v[static_cast<size_t>(r)] =
                                (v[static_cast<size_t>(r)] + kv[k] * comp[k][static_cast<size_t>(r)]) % up;
                    piece.push_back(std::move(v));
                }
                work.push_back(std::move(piece));
                // Remaining part: eigenspaces for other eigenvalues.
                std::vector<std::vector<uint64_t>> rest;
                for (uint64_t c2 = c + 1; c2 < up; ++c2) {
                    std::vector<std::vector<uint64_t>> m2(dim, std::vector<uint64_t>(dim, 0));
                    for (size_t i = 0; i < dim; ++i) {
                        auto prod = B.mul(t, comp[i]);
                        for (int r = 0; r < nb; ++r)
                            prod[static_cast<size_t>(r)] =
                                (prod[static_cast<size_t>(r)] +
                                 (up - c2) * comp[i][static_cast<size_t>(r)]) % up;
                        auto cc = solve_in_span(comp, prod);
                        for (size_t k = 0; k < dim; ++k) m2[k][i] = cc[k];
                    }
                    auto ker2 = fp_kernel(m2, up);
                    if (ker2.empty()) continue;
                    std::vector<std::vector<uint64_t>> piece2;
                    for (const auto& kv : ker2) {
                        std::vector<uint64_t> v(nb, 0);
                        for (size_t k = 0; k < dim; ++k)
                            for (int r = 0; r < nb; ++r)
                                v[static_cast<size_t>(r)] =
                                    (v[static_cast<size_t>(r)] +
                                     kv[k] * comp[k][static_cast<size_t>(r)]) % up;
                        piece2.push_back(std::move(v));
                    }
                    work.push_back(std::move(piece2));
                }
                split_done = true;
            }
            if (!split_done)
                throw std::logic_error("factor_rational_prime: no eigenvalue split found");
        }

        // Each component gives a maximal ideal: radical + all other components.
        for (size_t ci = 0; ci < components.size(); ++ci) {
            ZMat rows;
            for (int i = 0; i < n; ++i) {
                ZVec r(n, 0);
                r[i] = p;
                rows.push_back(std::move(r));
            }
            for (const auto& v : rad) {
                ZVec r(n);
                for (int i = 0; i < n; ++i) r[i] = Int(static_cast<unsigned long>(v[i]));
                rows.push_back(std::move(r));
            }
            for (size_t cj = 0; cj < components.size(); ++cj) {
                if (cj == ci) continue;
                for (const auto& v : components[cj]) {
                    auto lifted = B.lift(v);
                    ZVec r(n);
                    for (int i = 0; i < n; ++i) r[i] = Int(lifted[i]);
                    rows.push_back(std::move(r));
                }
            }
            PrimeFactor pf;
            pf.ideal = normalized(std::move(rows), 1);
            pf.f = static_cast<unsigned>(components[ci].size());
            pf.e = 0;  // filled below
            out.push_back(std::move(pf));
        }
        // Ramification indices: largest e with pO contained in P^e.
        FractionalIdeal pO = rational_ideal(nf, Rational(p));
        for (auto& pf : out) {
            unsigned e = 1;
            while (true) {
                FractionalIdeal pe = ideal_pow(nf, pf.ideal, e + 1);
                if (!ideal_subset(nf, pO, pe)) break;
                ++e;
                if (e > static_cast<unsigned>(n)) throw std::logic_error("e exceeded degree");
            }
            pf.e = e;
        }
    }

    // Deterministic order: sort by (f, HNF rows).
    std::sort(out.begin(), out.end(), [](const PrimeFactor& a, const PrimeFactor& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.ideal.basis < b.ideal.basis;
    });
    long total = 0;
    for (const auto& pf : out) total += pf.e * pf.f;
    if (total != n) throw std::logic_error("factor_rational_prime: sum e*f != degree");
    return out;
}

}  // namespace fs19
