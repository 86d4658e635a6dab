#include "fs19/small_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fs19 {

SmallGroup::SmallGroup(std::string name, size_t n, std::vector<size_t> table)
    : name_(std::move(name)), n_(n), table_(std::move(table)) {
    if (table_.size() != n_ * n_) throw std::invalid_argument("SmallGroup: bad table");
}

SmallGroup SmallGroup::cyclic(int k) {
    if (k < 1) throw std::invalid_argument("cyclic: k >= 1");
    size_t n = static_cast<size_t>(k);
    std::vector<size_t> t(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
    return SmallGroup("C" + std::to_string(k), n, std::move(t));
}

SmallGroup SmallGroup::direct_product(const SmallGroup& a, const SmallGroup& b) {
    size_t n = a.order() * b.order();
    std::vector<size_t> t(n * n);
    size_t nb = b.order();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t ia = i / nb, ib = i % nb;
            size_t ja = j / nb, jb = j % nb;
            t[i * n + j] = a.mul(ia, ja) * nb + b.mul(ib, jb);
        }
    return SmallGroup(a.name() + "x" + b.name(), n, std::move(t));
}

SmallGroup SmallGroup::dihedral(int k) {
    if (k < 1) throw std::invalid_argument("dihedral: k >= 1");
    // Elements: r^i s^e encoded as i + k*e; s r s = r^{-1}.
    size_t ks = static_cast<size_t>(k);
    size_t n = 2 * ks;
    std::vector<size_t> t(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t ri = i % ks, ei = i / ks;
            size_t rj = j % ks, ej = j / ks;
            // (r^ri s^ei)(r^rj s^ej) = r^(ri + (-1)^ei rj) s^(ei+ej)
            size_t r = ei ? (ri + ks - rj % ks) % ks : (ri + rj) % ks;
            size_t e = (ei + ej) % 2;
            t[i * n + j] = r + ks * e;
        }
    return SmallGroup("D" + std::to_string(2 * k), n, std::move(t));
}

SmallGroup SmallGroup::quaternion8() {
    // {1,-1,i,-i,j,-j,k,-k} indexed 0..7 as 1,i,j,k with sign bit.
    // Encode: idx = unit*2 + sign (sign 1 = negative), unit in {0:1,1:i,2:j,3:k}.
    auto mul_unit = [](int a, int b, int& sign) {
        // returns unit index of product, accumulating sign.
        static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{+1, +1, +1, +1},
                                      {+1, -1, +1, -1},
                                      {+1, -1, -1, +1},
                                      {+1, +1, -1, -1}};
        sign *= sgn[a][b];
        return prod[a][b];
    };
    size_t n = 8;
    std::vector<size_t> t(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int ua = static_cast<int>(i / 2), sa = (i % 2) ? -1 : 1;
            int ub = static_cast<int>(j / 2), sb = (j % 2) ? -1 : 1;
            int sign = sa * sb;
            int u = mul_unit(ua, ub, sign);
            t[i * n + j] = static_cast<size_t>(u) * 2 + (sign < 0 ? 1 : 0);
        }
    return SmallGroup("Q8", n, std::move(t));
}

SmallGroup SmallGroup::heisenberg27() {
    // Upper unitriangular 3x3 over F_3: (a,b,c) with
    // (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a b').
    size_t n = 27;
    std::vector<size_t> t(n * n);
    auto enc = [](long a, long b, long c) {
        return static_cast<size_t>(a * 9 + b * 3 + c);
    };
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c)
                for (long a2 = 0; a2 < 3; ++a2)
                    for (long b2 = 0; b2 < 3; ++b2)
                        for (long c2 = 0; c2 < 3; ++c2)
                            t[enc(a, b, c) * n + enc(a2, b2, c2)] =
                                enc((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
    return SmallGroup("Heis27", n, std::move(t));
}

SmallGroup SmallGroup::modular27() {
    // <a,b | a^9 = b^3 = 1, b a b^{-1} = a^4>: elements a^i b^j, i mod 9,
    // j mod 3; (i,j)(i',j') = (i + 4^j i' mod 9, j + j' mod 3).
    size_t n = 27;
    std::vector<size_t> t(n * n);
    auto enc = [](long i, long j) { return static_cast<size_t>(i * 3 + j); };
    auto pow4 = [](long j) {
        long p = 1;
        for (long k = 0; k < j; ++k) p = (p * 4) % 9;
        return p;
    };
    for (long i = 0; i < 9; ++i)
        for (long j = 0; j < 3; ++j)
            for (long i2 = 0; i2 < 9; ++i2)
                for (long j2 = 0; j2 < 3; ++j2)
                    t[enc(i, j) * n + enc(i2, j2)] =
                        enc((i + pow4(j) * i2) % 9, (j + j2) % 3);
    return SmallGroup("M27", n, std::move(t));
}

size_t SmallGroup::inv(size_t i) const {
    for (size_t j = 0; j < n_; ++j)
        if (mul(i, j) == 0) return j;
    throw std::logic_error("SmallGroup: no inverse");
}

unsigned long SmallGroup::element_order(size_t i) const {
    unsigned long ord = 1;
    size_t cur = i;
    while (cur != 0) {
        cur = mul(cur, i);
        ++ord;
    }
    return ord;
}

bool SmallGroup::is_abelian() const {
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = i + 1; j < n_; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

bool SmallGroup::is_cyclic() const {
    for (size_t i = 0; i < n_; ++i)
        if (element_order(i) == n_) return true;
    return false;
}

bool SmallGroup::is_p_group(long p) const {
    size_t n = n_;
    while (n % static_cast<size_t>(p) == 0) n /= static_cast<size_t>(p);
    return n == 1;
}

bool SmallGroup::table_is_group() const {
    // Identity at 0.
    for (size_t i = 0; i < n_; ++i)
        if (mul(0, i) != i || mul(i, 0) != i) return false;
    // Latin square (cancellation) + inverses.
    for (size_t i = 0; i < n_; ++i) {
        std::vector<bool> seen(n_, false);
        bool has_inv = false;
        for (size_t j = 0; j < n_; ++j) {
            size_t p = mul(i, j);
            if (p >= n_ || seen[p]) return false;
            seen[p] = true;
            if (p == 0) has_inv = true;
        }
        if (!has_inv) return false;
    }
    // Associativity.
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            for (size_t k = 0; k < n_; ++k)
                if (mul(mul(i, j), k) != mul(i, mul(j, k))) return false;
    return true;
}

std::vector<size_t> SmallGroup::closure(std::vector<size_t> gens) const {
    std::set<size_t> seen{0};
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t e : frontier)
            for (size_t g : gens) {
                size_t p = mul(e, g);
                if (seen.insert(p).second) next.push_back(p);
                size_t q = mul(g, e);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return std::vector<size_t>(seen.begin(), seen.end());
}

std::vector<size_t> SmallGroup::derived_subgroup() const {
    std::vector<size_t> comms;
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            comms.push_back(mul(mul(i, j), mul(inv(i), inv(j))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return closure(comms);
}

std::vector<size_t> SmallGroup::three_saturation() const {
    std::vector<size_t> gens = derived_subgroup();
    for (size_t i = 0; i < n_; ++i) {
        unsigned long o = element_order(i);
        bool pow3 = true;
        while (o > 1) {
            if (o % 3) {
                pow3 = false;
                break;
            }
            o /= 3;
        }
        if (pow3) gens.push_back(i);
    }
    return closure(gens);
}

SmallGroup SmallGroup::quotient(const std::vector<size_t>& normal_subgroup,
                                const std::string& name) const {
    std::set<size_t> ns(normal_subgroup.begin(), normal_subgroup.end());
    // Normality check.
    for (size_t g = 0; g < n_; ++g)
        for (size_t h : normal_subgroup)
            if (!ns.count(mul(mul(g, h), inv(g))))
                throw std::invalid_argument("quotient: subgroup not normal");
    // Cosets with canonical (minimal) representatives.
    std::vector<size_t> rep(n_, SIZE_MAX);
    for (size_t e = 0; e < n_; ++e) {
        if (rep[e] != SIZE_MAX) continue;
        std::vector<size_t> coset;
        for (size_t h : normal_subgroup) coset.push_back(mul(e, h));
        size_t r = *std::min_element(coset.begin(), coset.end());
        for (size_t c : coset) rep[c] = r;
    }
    std::set<size_t> repset(rep.begin(), rep.end());
    std::vector<size_t> reps(repset.begin(), repset.end());
    std::vector<size_t> idx(n_, SIZE_MAX);
    for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = i;
    size_t qn = reps.size();
    std::vector<size_t> t(qn * qn);
    for (size_t i = 0; i < qn; ++i)
        for (size_t j = 0; j < qn; ++j) t[i * qn + j] = idx[rep[mul(reps[i], reps[j])]];
    // Representative of identity coset is 0 (minimal element of a subgroup
    // containing 0), so index 0 is the identity.
    return SmallGroup(name, qn, std::move(t));
}

FiniteAbelianGroup SmallGroup::abelianization() const {
    SmallGroup ab = quotient(derived_subgroup(), name_ + "^ab");
    // Invariant factors of an abelian table group: peel max-order cyclics.
    std::function<FiniteAbelianGroup(const SmallGroup&)> structure =
        [&](const SmallGroup& g) -> FiniteAbelianGroup {
        if (g.order() <= 1) return {};
        size_t best = 0;
        unsigned long best_ord = 1;
        for (size_t i = 0; i < g.order(); ++i) {
            unsigned long o = g.element_order(i);
            if (o > best_ord) {
                best_ord = o;
                best = i;
            }
        }
        if (best_ord == g.order())
            return FiniteAbelianGroup{{Int(best_ord)}};
        std::vector<size_t> cyc;
        size_t cur = 0;
        do {
            cyc.push_back(cur);
            cur = g.mul(cur, best);
        } while (cur != 0);
        FiniteAbelianGroup rest = structure(g.quotient(cyc, "q"));
        rest.invariant_factors.push_back(Int(best_ord));
        std::sort(rest.invariant_factors.begin(), rest.invariant_factors.end());
        return rest;
    };
    if (!ab.is_abelian()) throw std::logic_error("abelianization: quotient not abelian");
    return structure(ab);
}

SmallGroup SmallGroup::renamed(const std::string& name) const {
    return SmallGroup(name, n_, table_);
}

std::vector<SmallGroup> catalog_order_le_11() {
    std::vector<SmallGroup> out;
    out.push_back(SmallGroup::cyclic(1));
    out.push_back(SmallGroup::cyclic(2));
    out.push_back(SmallGroup::cyclic(3));
    out.push_back(SmallGroup::cyclic(4));
    out.push_back(
        SmallGroup::direct_product(SmallGroup::cyclic(2), SmallGroup::cyclic(2))
            .renamed("C2xC2"));
    out.push_back(SmallGroup::cyclic(5));
    out.push_back(SmallGroup::cyclic(6));
    out.push_back(SmallGroup::dihedral(3).renamed("S3"));
    out.push_back(SmallGroup::cyclic(7));
    out.push_back(SmallGroup::cyclic(8));
    out.push_back(
        SmallGroup::direct_product(SmallGroup::cyclic(4), SmallGroup::cyclic(2))
            .renamed("C4xC2"));
    out.push_back(SmallGroup::direct_product(
                      SmallGroup::direct_product(SmallGroup::cyclic(2), SmallGroup::cyclic(2)),
                      SmallGroup::cyclic(2))
                      .renamed("C2xC2xC2"));
    // Subscript-by-k dihedral names (D4 has order 8, D5 order 10).
    out.push_back(SmallGroup::dihedral(4).renamed("D4"));
    out.push_back(SmallGroup::quaternion8());
    out.push_back(SmallGroup::cyclic(9));
    out.push_back(
        SmallGroup::direct_product(SmallGroup::cyclic(3), SmallGroup::cyclic(3))
            .renamed("C3xC3"));
    out.push_back(SmallGroup::cyclic(10));
    out.push_back(SmallGroup::dihedral(5).renamed("D5"));
    out.push_back(SmallGroup::cyclic(11));
    return out;
}

std::vector<SmallGroup> catalog_three_groups_le_27() {
    std::vector<SmallGroup> out;
    out.push_back(SmallGroup::cyclic(3));
    out.push_back(SmallGroup::cyclic(9));
    out.push_back(
        SmallGroup::direct_product(SmallGroup::cyclic(3), SmallGroup::cyclic(3))
            .renamed("C3xC3"));
    out.push_back(SmallGroup::cyclic(27));
    out.push_back(
        SmallGroup::direct_product(SmallGroup::cyclic(9), SmallGroup::cyclic(3))
            .renamed("C9xC3"));
    out.push_back(SmallGroup::direct_product(
                      SmallGroup::direct_product(SmallGroup::cyclic(3), SmallGroup::cyclic(3)),
                      SmallGroup::cyclic(3))
                      .renamed("C3xC3xC3"));
    out.push_back(SmallGroup::heisenberg27());
    out.push_back(SmallGroup::modular27());
    return out;
}

std::vector<LemmaScanRow> lemma_scan_order_le_11() {
    std::vector<LemmaScanRow> out;
    for (const auto& g : catalog_order_le_11()) {
        LemmaScanRow row;
        row.name = g.name();
        row.order = g.order();
        auto psi = g.three_saturation();
        row.saturation_order = psi.size();
        if (psi.size() == g.order()) {
            row.viable = true;
        } else {
            SmallGroup q = g.quotient(psi, g.name() + "/Psi");
            row.viable = !q.is_cyclic();
        }
        // Conclusion: viable groups are exactly the non-cyclic 2-groups
        // (or trivial) and the 3-groups.
        bool conclusion = (g.is_p_group(2) && (g.order() == 1 || !g.is_cyclic())) ||
                          g.is_p_group(3);
        row.conclusion_ok = (row.viable == conclusion);
        out.push_back(std::move(row));
    }
    return out;
}

std::pair<std::vector<ThreeGroupScanRow>, bool> three_group_abelianization_scan() {
    std::vector<ThreeGroupScanRow> rows;
    size_t count_order3 = 0;
    bool c3_is_witness = false;
    for (const auto& g : catalog_three_groups_le_27()) {
        ThreeGroupScanRow row;
        row.name = g.name();
        row.ab = g.abelianization();
        if (row.ab.order() == 3) {
            ++count_order3;
            if (g.order() == 3) c3_is_witness = true;
        }
        rows.push_back(std::move(row));
    }
    return {rows, count_order3 == 1 && c3_is_witness};
}

PGroupGenCheck pgroup_generation_check(const SmallGroup& g, long p,
                                       const std::vector<size_t>& gens) {
    PGroupGenCheck out;
    out.precondition_ok = g.is_p_group(p) && g.order() > 1;
    if (!out.precondition_ok) return out;
    // Frattini-quotient style check, done directly on tables: gens generate
    // G iff their images generate G/(derived * p-th powers).
    std::vector<size_t> fr = g.derived_subgroup();
    for (size_t i = 0; i < g.order(); ++i) {
        size_t cur = i;
        for (long k = 1; k < p; ++k) cur = g.mul(cur, i);
        fr.push_back(cur);  // i^p
    }
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    std::vector<size_t> frsub = g.closure(fr);
    SmallGroup q = g.quotient(frsub, "frattini-q");
    // Images of gens in the quotient.
    // Rebuild the rep map the same way quotient() does.
    std::set<size_t> nsset(frsub.begin(), frsub.end());
    std::vector<size_t> rep(g.order(), SIZE_MAX);
    for (size_t e = 0; e < g.order(); ++e) {
        if (rep[e] != SIZE_MAX) continue;
        std::vector<size_t> coset;
        for (size_t h : frsub) coset.push_back(g.mul(e, h));
        size_t r = *std::min_element(coset.begin(), coset.end());
        for (size_t c : coset) rep[c] = r;
    }
    std::set<size_t> repset(rep.begin(), rep.end());
    std::vector<size_t> reps(repset.begin(), repset.end());
    std::vector<size_t> idx(g.order(), SIZE_MAX);
    for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = i;
    std::vector<size_t> img;
    for (size_t x : gens) img.push_back(idx[rep[x]]);
    bool quotient_generated = (q.closure(img).size() == q.order());
    bool directly_generated =
        (g.closure(std::vector<size_t>(gens)).size() == g.order());
    // The check verifies the equivalence AND reports whether they generate.
    out.generates = directly_generated;
    out.precondition_ok = out.precondition_ok && (quotient_generated == directly_generated);
    return out;
}

}  // namespace fs19
