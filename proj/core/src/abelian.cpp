#include "fs19/abelian.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace fs19 {

std::string to_string(const FiniteAbelianGroup& g) {
    std::string s = "[";
    for (size_t i = 0; i < g.invariant_factors.size(); ++i) {
        if (i) s += ",";
        s += to_string(g.invariant_factors[i]);
    }
    return s + "]";
}

namespace {

using MulFn = std::function<size_t(size_t, size_t)>;

unsigned long table_order(const MulFn& mul, size_t id, size_t g) {
    unsigned long ord = 1;
    size_t cur = g;
    while (cur != id) {
        cur = mul(cur, g);
        ++ord;
    }
    return ord;
}

// Invariant factors of a finite abelian group given as {0..n-1} with a
// multiplication law. A cyclic subgroup generated by an element of maximal
// order is a direct summand, so peel one off and recurse on the quotient.
FiniteAbelianGroup table_structure(size_t n, const MulFn& mul, size_t id) {
    if (n <= 1) return {};
    size_t best = id;
    unsigned long best_ord = 1;
    for (size_t i = 0; i < n; ++i) {
        unsigned long o = table_order(mul, id, i);
        if (o > best_ord) {
            best_ord = o;
            best = i;
        }
    }
    if (best_ord == n) return FiniteAbelianGroup{{Int(best_ord)}};

    // Cosets of <best>: canonical representative = smallest element index.
    std::vector<size_t> rep(n, SIZE_MAX);
    std::vector<size_t> reps;
    for (size_t e = 0; e < n; ++e) {
        if (rep[e] != SIZE_MAX) continue;
        // Collect the coset e * <best>.
        std::vector<size_t> coset;
        size_t cur = e;
        do {
            coset.push_back(cur);
            cur = mul(cur, best);
        } while (cur != e);
        size_t r = *std::min_element(coset.begin(), coset.end());
        for (size_t c : coset) rep[c] = r;
    }
    std::set<size_t> repset;
    for (size_t e = 0; e < n; ++e) repset.insert(rep[e]);
    reps.assign(repset.begin(), repset.end());
    std::vector<size_t> index_of(n, SIZE_MAX);
    for (size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = i;
    MulFn qmul = [&, reps](size_t a, size_t b) {
        return index_of[rep[mul(reps[a], reps[b])]];
    };
    FiniteAbelianGroup sub = table_structure(reps.size(), qmul, index_of[rep[id]]);
    sub.invariant_factors.push_back(Int(best_ord));
    std::sort(sub.invariant_factors.begin(), sub.invariant_factors.end());
    // Sanity: divisibility chain.
    for (size_t i = 0; i + 1 < sub.invariant_factors.size(); ++i)
        if (sub.invariant_factors[i + 1] % sub.invariant_factors[i] != 0)
            throw std::logic_error("table_structure: invariant factors not a chain");
    return sub;
}

}  // namespace

ResidueUnitGroup::ResidueUnitGroup(const NumberField& nf, const FractionalIdeal& modulus)
    : nf_(nf), hnf_(modulus.basis) {
    if (modulus.den != 1)
        throw std::invalid_argument("ResidueUnitGroup: modulus must be integral");
    int n = nf.degree();
    Int count = diag_product(hnf_);
    if (count > kEnumerationCap)
        throw std::runtime_error("ResidueUnitGroup: residue ring too large to enumerate");
    long total = count.get_si();

    // Basis elements of O for column products.
    std::vector<FieldElement> b(n);
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        b[i] = nf.from_int_coords(e);
    }

    // Odometer over the diagonal: every canonical representative.
    ZVec v(n, 0);
    for (long c = 0; c < total; ++c) {
        // v is already canonical (0 <= v[i] < hnf[i][i]).
        FieldElement x = FieldElement{QVec(n)};
        for (int i = 0; i < n; ++i) x.c[i] = Rational(v[i]);
        // x is a unit mod m iff xO + m = O.
        ZMat rows;
        for (int j = 0; j < n; ++j) {
            FieldElement prod = nf_.mul(x, b[j]);
            ZVec r(n);
            for (int k = 0; k < n; ++k) r[k] = prod.c[k].get_num();
            rows.push_back(std::move(r));
        }
        for (const auto& r : hnf_) rows.push_back(r);
        if (diag_product(hnf_row_lattice(std::move(rows))) == 1) {
            units_.push_back(v);
            index_[key_of(v)] = units_.size() - 1;
        }
        // Increment odometer.
        for (int i = 0; i < n; ++i) {
            v[i] += 1;
            if (v[i] < hnf_[i][i]) break;
            v[i] = 0;
        }
    }

    FieldElement one = nf_.one();
    ZVec onec(n);
    for (int i = 0; i < n; ++i) onec[i] = one.c[i].get_num();
    id_ = index_.at(key_of(reduce(onec)));
    structure_ = table_structure(
        units_.size(), [this](size_t i, size_t j) { return mul(i, j); }, id_);
}

ZVec ResidueUnitGroup::reduce(const ZVec& v) const { return hnf_reduce(hnf_, v); }

std::vector<long> ResidueUnitGroup::key_of(const ZVec& v) const {
    std::vector<long> k;
    for (const auto& x : v) k.push_back(x.get_si());
    return k;
}

size_t ResidueUnitGroup::index_of(const FieldElement& x) const {
    int n = nf_.degree();
    ZVec v(n);
    for (int i = 0; i < n; ++i) {
        if (!is_integer(x.c[i]))
            throw std::invalid_argument("index_of: element not integral");
        v[i] = x.c[i].get_num();
    }
    auto it = index_.find(key_of(reduce(v)));
    if (it == index_.end())
        throw std::invalid_argument("index_of: element is not a unit mod m");
    return it->second;
}

size_t ResidueUnitGroup::mul(size_t i, size_t j) const {
    int n = nf_.degree();
    FieldElement a{QVec(n)}, b{QVec(n)};
    for (int k = 0; k < n; ++k) {
        a.c[k] = Rational(units_[i][k]);
        b.c[k] = Rational(units_[j][k]);
    }
    FieldElement p = nf_.mul(a, b);
    ZVec v(n);
    for (int k = 0; k < n; ++k) v[k] = p.c[k].get_num();
    return index_.at(key_of(reduce(v)));
}

unsigned long ResidueUnitGroup::element_order(size_t i) const {
    return table_order([this](size_t a, size_t b) { return mul(a, b); }, id_, i);
}

std::vector<size_t> ResidueUnitGroup::subgroup(const std::vector<size_t>& gens) const {
    std::set<size_t> seen{id_};
    std::vector<size_t> frontier{id_};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t e : frontier)
            for (size_t g : gens) {
                size_t prod = mul(e, g);
                if (seen.insert(prod).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    return std::vector<size_t>(seen.begin(), seen.end());
}

FiniteAbelianGroup ResidueUnitGroup::quotient_structure(
    const std::vector<size_t>& subgroup_elems) const {
    size_t n = units_.size();
    std::vector<size_t> rep(n, SIZE_MAX);
    std::vector<size_t> reps;
    for (size_t e = 0; e < n; ++e) {
        if (rep[e] != SIZE_MAX) continue;
        std::vector<size_t> coset;
        for (size_t s : subgroup_elems) coset.push_back(mul(e, s));
        size_t r = *std::min_element(coset.begin(), coset.end());
        for (size_t c : coset) rep[c] = r;
    }
    std::set<size_t> repset;
    for (size_t e = 0; e < n; ++e) repset.insert(rep[e]);
    reps.assign(repset.begin(), repset.end());
    std::vector<size_t> index_of_rep(n, SIZE_MAX);
    for (size_t i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = i;
    auto qmul = [&](size_t a, size_t b) { return index_of_rep[rep[mul(reps[a], reps[b])]]; };
    return table_structure(reps.size(), qmul, index_of_rep[rep[id_]]);
}

FiniteAbelianGroup unit_quotient_structure(const NumberField& nf,
                                           const FractionalIdeal& m) {
    return ResidueUnitGroup(nf, m).structure();
}

namespace {

std::vector<size_t> certified_unit_image(const NumberField& nf,
                                         const ResidueUnitGroup& g) {
    std::vector<size_t> gens;
    gens.push_back(g.index_of(FieldElement{nf.cert().torsion}));
    for (const auto& uc : nf.cert().units) gens.push_back(g.index_of(FieldElement{uc}));
    return g.subgroup(gens);
}

}  // namespace

Int unit_image_order(const NumberField& nf, const FractionalIdeal& m) {
    ResidueUnitGroup g(nf, m);
    return Int(static_cast<unsigned long>(certified_unit_image(nf, g).size()));
}

FiniteAbelianGroup ray_class_group(const NumberField& nf, const FractionalIdeal& m,
                                   const std::vector<int>& infinite_part) {
    ResidueUnitGroup g(nf, m);
    size_t s = infinite_part.size();
    if (s > 0 && nf.degree() != 1)
        throw std::invalid_argument(
            "ray_class_group: sign conditions only supported for degree-1 fields");
    for (int v : infinite_part)
        if (v != 0) throw std::invalid_argument("ray_class_group: bad real place index");

    size_t nu = g.size();
    size_t total = nu << s;
    auto mul = [&](size_t a, size_t b) {
        size_t ia = a >> s, ib = b >> s;
        size_t ma = a & ((1u << s) - 1), mb = b & ((1u << s) - 1);
        if (s == 0) return g.mul(ia, ib);
        return (g.mul(ia, ib) << s) | (ma ^ mb);
    };
    size_t id = g.identity() << s;

    // Images of the certified units, with sign bits (degree-1: the element
    // is its first coordinate).
    auto sign_mask = [&](const FieldElement& u) -> size_t {
        if (s == 0) return 0;
        return u.c[0] < 0 ? 1 : 0;
    };
    std::vector<size_t> gens;
    {
        FieldElement t{nf.cert().torsion};
        gens.push_back((g.index_of(t) << s) | sign_mask(t));
        for (const auto& uc : nf.cert().units) {
            FieldElement u{uc};
            gens.push_back((g.index_of(u) << s) | sign_mask(u));
        }
    }
    // Closure of the unit image inside the product group.
    std::set<size_t> seen{id};
    std::vector<size_t> frontier{id};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t e : frontier)
            for (size_t gen : gens) {
                size_t prod = mul(e, gen);
                if (seen.insert(prod).second) next.push_back(prod);
            }
        frontier = std::move(next);
    }
    std::vector<size_t> sub(seen.begin(), seen.end());

    // Quotient structure.
    std::vector<size_t> rep(total, SIZE_MAX);
    for (size_t e = 0; e < total; ++e) {
        if (rep[e] != SIZE_MAX) continue;
        std::vector<size_t> coset;
        for (size_t x : sub) coset.push_back(mul(e, x));
        size_t r = *std::min_element(coset.begin(), coset.end());
        for (size_t c : coset) rep[c] = r;
    }
    std::set<size_t> repset;
    for (size_t e = 0; e < total; ++e) repset.insert(rep[e]);
    std::vector<size_t> reps(repset.begin(), repset.end());
    std::vector<size_t> index_of_rep(total, SIZE_MAX);
    for (size_t i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = i;
    auto qmul = [&](size_t a, size_t b) { return index_of_rep[rep[mul(reps[a], reps[b])]]; };
    return table_structure(reps.size(), qmul, index_of_rep[rep[id]]);
}

}  // namespace fs19
