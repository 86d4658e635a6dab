#include "fs19/modules.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace fs19 {

uint8_t f2_apply(const F2Matrix& m, uint8_t v, int dim) {
    uint8_t out = 0;
    for (int i = 0; i < dim; ++i)
        if (std::popcount(static_cast<unsigned>(m[static_cast<size_t>(i)] & v)) & 1)
            out |= static_cast<uint8_t>(1 << i);
    return out;
}

F2Matrix f2_mat_mul(const F2Matrix& a, const F2Matrix& b, int dim) {
    F2Matrix out{};
    for (int i = 0; i < dim; ++i) {
        uint8_t row = 0;
        for (int j = 0; j < dim; ++j) {
            unsigned acc = 0;
            for (int k = 0; k < dim; ++k)
                acc ^= ((a[static_cast<size_t>(i)] >> k) & 1u) &
                       ((b[static_cast<size_t>(k)] >> j) & 1u);
            if (acc) row |= static_cast<uint8_t>(1 << j);
        }
        out[static_cast<size_t>(i)] = row;
    }
    return out;
}

F2Matrix f2_identity(int dim) {
    F2Matrix out{};
    for (int i = 0; i < dim; ++i) out[static_cast<size_t>(i)] = static_cast<uint8_t>(1 << i);
    return out;
}

namespace {

int high_bit(uint8_t x) {
    int h = -1;
    for (int i = 0; i < 8; ++i)
        if (x & (1 << i)) h = i;
    return h;
}

// Reduced echelon basis kept sorted by decreasing leading bit; canonical per
// subspace. Returns true if the span grew.
bool span_insert(std::vector<uint8_t>& basis, uint8_t v) {
    for (uint8_t b : basis) {
        int hb = high_bit(b);
        if (hb >= 0 && (v & (1 << hb))) v ^= b;
    }
    if (!v) return false;
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(),
              [](uint8_t a, uint8_t b) { return high_bit(a) > high_bit(b); });
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            int hb = high_bit(basis[j]);
            if (basis[i] & (1 << hb)) basis[i] ^= basis[j];
        }
    std::sort(basis.begin(), basis.end(),
              [](uint8_t a, uint8_t b) { return high_bit(a) > high_bit(b); });
    return true;
}

bool span_contains(const std::vector<uint8_t>& basis, uint8_t v) {
    for (uint8_t b : basis) {
        int hb = high_bit(b);
        if (hb >= 0 && (v & (1 << hb))) v ^= b;
    }
    return v == 0;
}

bool subspace_leq(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    for (uint8_t v : a)
        if (!span_contains(b, v)) return false;
    return true;
}

}  // namespace

std::vector<uint8_t> f2_cyclic_submodule(const F2Module& m, uint8_t v) {
    std::vector<uint8_t> basis;
    span_insert(basis, v);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<uint8_t> cur = basis;
        for (uint8_t b : cur)
            for (const auto& g : m.gens)
                if (span_insert(basis, f2_apply(g, b, m.dim))) grew = true;
    }
    return basis;
}

bool module_is_irreducible(const F2Module& m) {
    if (m.dim == 0) return false;
    for (uint8_t v = 1; v < (1 << m.dim); ++v)
        if (f2_cyclic_submodule(m, v).size() != static_cast<size_t>(m.dim)) return false;
    return true;
}

int module_end_dim(const F2Module& m) {
    int d = m.dim;
    int vars = d * d;
    std::vector<uint64_t> rows;
    for (const auto& g : m.gens) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                uint64_t row = 0;
                // (TG)[i][j] = sum_k T[i][k] G[k][j]; (GT)[i][j] = sum_k G[i][k] T[k][j].
                for (int k = 0; k < d; ++k) {
                    if ((g[static_cast<size_t>(k)] >> j) & 1u)
                        row ^= 1ull << (i * d + k);
                    if ((g[static_cast<size_t>(i)] >> k) & 1u)
                        row ^= 1ull << (k * d + j);
                }
                if (row) rows.push_back(row);
            }
    }
    int rank = 0;
    for (int col = 0; col < vars; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
            if ((rows[r] >> col) & 1ull) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<size_t>(rank) && ((rows[r] >> col) & 1ull))
                rows[r] ^= rows[static_cast<size_t>(rank)];
        ++rank;
    }
    return vars - rank;
}

std::vector<std::vector<uint8_t>> invariant_subspaces(const F2Module& m) {
    int d = m.dim;
    if (d > 6) throw std::invalid_argument("invariant_subspaces: dimension > 6");
    std::set<std::vector<uint8_t>> seen;
    std::vector<std::vector<uint8_t>> frontier{{}};
    seen.insert(std::vector<uint8_t>{});
    while (!frontier.empty()) {
        std::vector<std::vector<uint8_t>> next;
        for (const auto& basis : frontier) {
            for (uint8_t v = 1; v < (1 << d); ++v) {
                if (span_contains(basis, v)) continue;
                std::vector<uint8_t> grown = basis;
                span_insert(grown, v);
                if (seen.insert(grown).second) next.push_back(grown);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<uint8_t>> out;
    for (const auto& basis : seen) {
        bool invariant = true;
        for (uint8_t b : basis) {
            for (const auto& g : m.gens)
                if (!span_contains(basis, f2_apply(g, b, d))) {
                    invariant = false;
                    break;
                }
            if (!invariant) break;
        }
        if (invariant) out.push_back(basis);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

// Subquotient module span(whole)/span(sub) with the induced action.
F2Module subquotient_module(const F2Module& m, const std::vector<uint8_t>& sub,
                            const std::vector<uint8_t>& whole) {
    std::vector<uint8_t> reps;
    std::vector<uint8_t> span = sub;
    for (uint8_t v : whole) {
        std::vector<uint8_t> grown = span;
        if (span_insert(grown, v)) {
            reps.push_back(v);
            span = std::move(grown);
        }
    }
    int q = static_cast<int>(reps.size());
    F2Module out;
    out.dim = q;
    out.gen_names = m.gen_names;
    // Express g * r_j in terms of the reps modulo span(sub): scan all 2^q
    // combinations (q <= 6 in scope).
    for (const auto& g : m.gens) {
        F2Matrix gm{};
        for (int j = 0; j < q; ++j) {
            uint8_t img = f2_apply(g, reps[static_cast<size_t>(j)], m.dim);
            bool found = false;
            for (uint8_t combo = 0; combo < (1 << q) && !found; ++combo) {
                uint8_t acc = img;
                for (int i = 0; i < q; ++i)
                    if (combo & (1 << i)) acc ^= reps[static_cast<size_t>(i)];
                if (span_contains(sub, acc)) {
                    for (int i = 0; i < q; ++i)
                        if (combo & (1 << i))
                            gm[static_cast<size_t>(i)] |= static_cast<uint8_t>(1 << j);
                    found = true;
                }
            }
            if (!found)
                throw std::logic_error("subquotient_module: image escaped the span");
        }
        out.gens.push_back(gm);
    }
    return out;
}

}  // namespace

bool modules_isomorphic(const F2Module& a, const F2Module& b) {
    if (a.dim != b.dim || a.gens.size() != b.gens.size()) return false;
    int d = a.dim;
    if (d == 0) return true;
    int vars = d * d;
    // T a_g = b_g T for all matched generators; T invertible.
    std::vector<uint64_t> rows;
    for (size_t gi = 0; gi < a.gens.size(); ++gi) {
        const F2Matrix& ga = a.gens[gi];
        const F2Matrix& gb = b.gens[gi];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                uint64_t row = 0;
                // (T ga)[i][j] = sum_k T[i][k] ga[k][j]
                for (int k = 0; k < d; ++k) {
                    if ((ga[static_cast<size_t>(k)] >> j) & 1u)
                        row ^= 1ull << (i * d + k);
                    if ((gb[static_cast<size_t>(i)] >> k) & 1u)
                        row ^= 1ull << (k * d + j);
                }
                if (row) rows.push_back(row);
            }
    }
    // Kernel basis of the constraint system.
    std::vector<int> pivot_col(static_cast<size_t>(vars), -1);
    int rank = 0;
    for (int col = 0; col < vars; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
            if ((rows[r] >> col) & 1ull) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<size_t>(rank) && ((rows[r] >> col) & 1ull))
                rows[r] ^= rows[static_cast<size_t>(rank)];
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    std::vector<uint64_t> kernel;
    for (int col = 0; col < vars; ++col) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r)
            if (pivot_col[static_cast<size_t>(r)] == col) is_pivot = true;
        if (is_pivot) continue;
        uint64_t v = 1ull << col;
        for (int r = 0; r < rank; ++r)
            if ((rows[static_cast<size_t>(r)] >> col) & 1ull)
                v |= 1ull << pivot_col[static_cast<size_t>(r)];
        kernel.push_back(v);
    }
    if (kernel.size() > 20)
        throw std::logic_error("modules_isomorphic: intertwiner space too large");
    // Scan the kernel space for an invertible T.
    for (uint64_t mask = 1; mask < (1ull << kernel.size()); ++mask) {
        uint64_t tv = 0;
        for (size_t i = 0; i < kernel.size(); ++i)
            if (mask & (1ull << i)) tv ^= kernel[i];
        F2Matrix T{};
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if ((tv >> (i * d + j)) & 1ull)
                    T[static_cast<size_t>(i)] |= static_cast<uint8_t>(1 << j);
        // Invertibility: columns span F_2^d.
        std::vector<uint8_t> colspan;
        for (int j = 0; j < d; ++j) {
            uint8_t col = 0;
            for (int i = 0; i < d; ++i)
                if ((T[static_cast<size_t>(i)] >> j) & 1u)
                    col |= static_cast<uint8_t>(1 << i);
            span_insert(colspan, col);
        }
        if (colspan.size() == static_cast<size_t>(d)) return true;
    }
    return false;
}

CompositionReport composition_report(const F2Module& m) {
    CompositionReport rep;
    auto subs = invariant_subspaces(m);
    rep.lattice_size = subs.size();

    // Covers: b covers a if a < b with nothing strictly between.
    auto covers = [&](size_t ai, size_t bi) {
        const auto& a = subs[ai];
        const auto& b = subs[bi];
        if (a.size() >= b.size() || !subspace_leq(a, b)) return false;
        for (size_t ci = 0; ci < subs.size(); ++ci) {
            if (ci == ai || ci == bi) continue;
            const auto& c = subs[ci];
            if (c.size() > a.size() && c.size() < b.size() && subspace_leq(a, c) &&
                subspace_leq(c, b))
                return false;
        }
        return true;
    };

    size_t zero_idx = SIZE_MAX, full_idx = SIZE_MAX;
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].empty()) zero_idx = i;
        if (subs[i].size() == static_cast<size_t>(m.dim)) full_idx = i;
    }
    if (zero_idx == SIZE_MAX || full_idx == SIZE_MAX)
        throw std::logic_error("composition_report: lattice missing 0 or M");

    // All maximal chains by DFS, with composition factors classified up to
    // isomorphism against a growing registry.
    std::vector<F2Module> registry;
    auto classify = [&](const F2Module& fac) {
        for (size_t i = 0; i < registry.size(); ++i)
            if (modules_isomorphic(registry[i], fac)) return i;
        registry.push_back(fac);
        return registry.size() - 1;
    };

    std::vector<std::multiset<std::pair<int, size_t>>> chain_factors;
    std::vector<size_t> path{zero_idx};
    std::vector<std::pair<int, size_t>> factors;
    std::function<void()> dfs = [&]() {
        size_t cur = path.back();
        if (cur == full_idx) {
            chain_factors.emplace_back(factors.begin(), factors.end());
            if (chain_factors.size() == 1)
                for (const auto& [dim, cls] : factors) rep.factor_dims.push_back(dim);
            return;
        }
        for (size_t next = 0; next < subs.size(); ++next) {
            if (!covers(cur, next)) continue;
            F2Module fac = subquotient_module(m, subs[cur], subs[next]);
            size_t cls = classify(fac);
            path.push_back(next);
            factors.emplace_back(fac.dim, cls);
            dfs();
            factors.pop_back();
            path.pop_back();
        }
        if (chain_factors.size() > 100000)
            throw std::logic_error("composition_report: too many chains");
    };
    dfs();
    rep.num_maximal_chains = chain_factors.size();
    rep.jh_unique = !chain_factors.empty();
    for (const auto& cf : chain_factors)
        if (!(cf == chain_factors.front())) rep.jh_unique = false;
    return rep;
}

UnipotentCheck unipotent_exponent_check(const ZnModule& m) {
    UnipotentCheck out;
    long n = m.n;
    int d = m.dim;
    if (n < 2 || d < 1 || m.actions.empty())
        throw std::invalid_argument("unipotent_exponent_check: bad module");
    std::vector<bool> is_flagged(static_cast<size_t>(d), false);
    for (int i : m.flagged) is_flagged[static_cast<size_t>(i)] = true;

    auto modn = [n](long x) { return ((x % n) + n) % n; };
    auto mat_mul = [&](const std::vector<std::vector<long>>& A,
                       const std::vector<std::vector<long>>& B) {
        std::vector<std::vector<long>> C(static_cast<size_t>(d),
                                         std::vector<long>(static_cast<size_t>(d), 0));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (!A[static_cast<size_t>(i)][static_cast<size_t>(k)]) continue;
                for (int j = 0; j < d; ++j)
                    C[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        modn(C[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                             A[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                 B[static_cast<size_t>(k)][static_cast<size_t>(j)]);
            }
        return C;
    };
    std::vector<std::vector<long>> I(static_cast<size_t>(d),
                                     std::vector<long>(static_cast<size_t>(d), 0));
    for (int i = 0; i < d; ++i) I[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;

    out.precondition_ok = true;
    out.square_zero_ok = true;
    out.exponent_ok = true;
    for (const auto& g : m.actions) {
        // N = g - I mod n.
        std::vector<std::vector<long>> N(static_cast<size_t>(d),
                                         std::vector<long>(static_cast<size_t>(d), 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                N[static_cast<size_t>(i)][static_cast<size_t>(j)] = modn(
                    g[static_cast<size_t>(i)][static_cast<size_t>(j)] - (i == j ? 1 : 0));
        // Columns of N (images of basis vectors) must lie in the flagged
        // span; flagged columns must vanish.
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) {
                long v = N[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (!v) continue;
                if (!is_flagged[static_cast<size_t>(i)]) out.precondition_ok = false;
                if (is_flagged[static_cast<size_t>(j)]) out.precondition_ok = false;
            }
        auto N2 = mat_mul(N, N);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (N2[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                    out.square_zero_ok = false;
        // g^n mod n.
        auto base = g;
        for (auto& row : base)
            for (auto& v : row) v = modn(v);
        auto acc = I;
        long e = n;
        while (e) {
            if (e & 1) acc = mat_mul(acc, base);
            base = mat_mul(base, base);
            e >>= 1;
        }
        if (!(acc == I)) out.exponent_ok = false;
    }
    return out;
}

}  // namespace fs19
