#include "fs19/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fs19 {

QMat qmat_identity(size_t n) {
    QMat m(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Rational qmat_det(QMat a) {
    size_t n = a.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = Rational(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::optional<QMat> qmat_inverse(QMat a) {
    size_t n = a.size();
    QMat inv = qmat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational d = Rational(1) / a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] *= d;
            inv[col][c] *= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

QVec qmat_mul_vec(const QMat& a, const QVec& v) {
    QVec out(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    QMat out(m, QVec(n, Rational(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

std::optional<QVec> qmat_solve(QMat a, QVec b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Rational d = Rational(1) / a[col][col];
        for (size_t c = 0; c < n; ++c) a[col][c] *= d;
        b[col] *= d;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    return b;
}

std::vector<QVec> qmat_kernel(QMat a) {
    if (a.empty()) return {};
    size_t m = a.size(), n = a[0].size();
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = row;
        while (pr < m && a[pr][col] == 0) ++pr;
        if (pr == m) continue;
        std::swap(a[pr], a[row]);
        Rational d = Rational(1) / a[row][col];
        for (size_t c = 0; c < n; ++c) a[row][c] *= d;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < n; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(n, Rational(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

ZMat hnf_row_lattice(ZMat rows) {
    if (rows.empty()) throw std::invalid_argument("hnf: empty generator list");
    size_t n = rows[0].size();
    size_t m = rows.size();
    // Column-by-column: clear below the pivot with extended-gcd row moves.
    size_t top = 0;
    for (size_t col = 0; col < n; ++col) {
        // Find/create a pivot row for this column.
        for (size_t r = top + 1; r < m; ++r) {
            if (rows[r][col] == 0) continue;
            if (rows[top][col] == 0) {
                std::swap(rows[top], rows[r]);
                continue;
            }
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       rows[top][col].get_mpz_t(), rows[r][col].get_mpz_t());
            Int u = rows[top][col] / g, v = rows[r][col] / g;
            for (size_t c = 0; c < n; ++c) {
                Int a = rows[top][c], b = rows[r][c];
                rows[top][c] = s * a + t * b;
                rows[r][c] = u * b - v * a;
            }
        }
        if (rows[top][col] == 0)
            throw std::invalid_argument("hnf: generators not full rank");
        if (rows[top][col] < 0)
            for (size_t c = 0; c < n; ++c) rows[top][c] = -rows[top][c];
        ++top;
        if (top == m) {
            if (col + 1 < n) {
                // Need n pivots; fewer rows than columns remaining.
                bool ok = (col + 1 == n);
                if (!ok) throw std::invalid_argument("hnf: generators not full rank");
            }
            break;
        }
    }
    if (top < n) throw std::invalid_argument("hnf: generators not full rank");
    ZMat h(rows.begin(), rows.begin() + n);
    // Reduce entries above each pivot.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j) {
            Int q = floor_div(h[j][i], h[i][i]);
            if (q == 0) continue;
            for (size_t c = i; c < n; ++c) h[j][c] -= q * h[i][c];
        }
    return h;
}

Int diag_product(const ZMat& h) {
    Int d(1);
    for (size_t i = 0; i < h.size(); ++i) d *= h[i][i];
    return d;
}

bool hnf_contains(const ZMat& h, ZVec v) {
    // h upper triangular with pivot i in column i; rows below i have zeros at
    // column i, so eliminate from the first coordinate up.
    size_t n = h.size();
    for (size_t i = 0; i < n; ++i) {
        if (v[i] % h[i][i] != 0) return false;
        Int q = v[i] / h[i][i];
        if (q == 0) continue;
        for (size_t c = i; c < n; ++c) v[c] -= q * h[i][c];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

ZVec hnf_reduce(const ZMat& h, ZVec v) {
    // Canonical representative mod the row lattice: clearing coordinate i with
    // row i only perturbs later columns, so sweep upward once.
    size_t n = h.size();
    for (size_t i = 0; i < n; ++i) {
        Int q = floor_div(v[i], h[i][i]);
        if (q == 0) continue;
        for (size_t c = i; c < n; ++c) v[c] -= q * h[i][c];
    }
    return v;
}

std::vector<std::vector<uint64_t>> fp_kernel(std::vector<std::vector<uint64_t>> a, uint64_t p) {
    if (a.empty()) return {};
    size_t m = a.size(), n = a[0].size();
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pr = row;
        while (pr < m && a[pr][col] % p == 0) ++pr;
        if (pr == m) continue;
        std::swap(a[pr], a[row]);
        uint64_t inv = fp_inv(a[row][col] % p, p);
        for (size_t c = 0; c < n; ++c)
            a[row][c] = static_cast<uint64_t>((static_cast<unsigned __int128>(a[row][c]) * inv) % p);
        for (size_t r = 0; r < m; ++r) {
            if (r == row) continue;
            uint64_t f = a[r][col] % p;
            if (f == 0) continue;
            for (size_t c = 0; c < n; ++c) {
                uint64_t sub = static_cast<uint64_t>((static_cast<unsigned __int128>(f) * a[row][c]) % p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<uint64_t>> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint64_t> v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) {
            uint64_t val = a[r][free_col] % p;
            v[pivot_col[r]] = (p - val) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

uint64_t fp_inv(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("fp_inv: zero");
    uint64_t r = 1, e = p - 2, b = a;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
        b = static_cast<uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
        e >>= 1;
    }
    return r;
}

}  // namespace fs19
