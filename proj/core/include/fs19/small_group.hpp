#pragma once
// Finite groups as explicit multiplication tables (orders <= ~30): cyclic,
// direct products, dihedral, quaternion, and the two nonabelian groups of
// order 27. Subgroup closures, derived subgroups, quotients, and the two
// exhaustive scans used by the classification argument.

#include <string>
#include <vector>

#include "fs19/abelian.hpp"

namespace fs19 {

class SmallGroup {
  public:
    static SmallGroup cyclic(int k);
    static SmallGroup direct_product(const SmallGroup& a, const SmallGroup& b);
    static SmallGroup dihedral(int k);  // order 2k, k >= 1
    static SmallGroup quaternion8();
    static SmallGroup heisenberg27();  // exponent 3
    static SmallGroup modular27();     // exponent 9: <a,b | a^9, b^3, b a b^-1 = a^4>

    const std::string& name() const { return name_; }
    size_t order() const { return n_; }
    size_t mul(size_t i, size_t j) const { return table_[i * n_ + j]; }
    size_t id() const { return 0; }
    size_t inv(size_t i) const;
    unsigned long element_order(size_t i) const;
    bool is_abelian() const;
    bool is_cyclic() const;
    // p-group test: order is a power of p (order 1 counts for every p).
    bool is_p_group(long p) const;

    // Multiplication-table axioms (associativity, identity, inverses); used
    // by tests to validate the constructions themselves.
    bool table_is_group() const;

    std::vector<size_t> closure(std::vector<size_t> gens) const;
    std::vector<size_t> derived_subgroup() const;
    // Subgroup generated by the derived subgroup and all elements of
    // 3-power order.
    std::vector<size_t> three_saturation() const;

    SmallGroup quotient(const std::vector<size_t>& normal_subgroup,
                        const std::string& name) const;
    FiniteAbelianGroup abelianization() const;

    // Rename (for catalog labeling).
    SmallGroup renamed(const std::string& name) const;

  private:
    SmallGroup(std::string name, size_t n, std::vector<size_t> table);
    std::string name_;
    size_t n_ = 0;
    std::vector<size_t> table_;
};

// The 2-groups and 3-groups scan catalog: all groups of order <= 11
// (up to isomorphism).
std::vector<SmallGroup> catalog_order_le_11();

// All groups of 3-power order <= 27.
std::vector<SmallGroup> catalog_three_groups_le_27();

struct LemmaScanRow {
    std::string name;
    size_t order = 0;
    size_t saturation_order = 0;  // |Psi(H)| = |<D(H), 3-power elements>|
    bool viable = false;          // H == Psi(H) or H/Psi(H) non-cyclic
    bool conclusion_ok = false;   // viable => non-cyclic 2-group or 3-group
};

// For every group of order <= 11: viability under the descent criterion and
// whether the classification conclusion holds for it.
std::vector<LemmaScanRow> lemma_scan_order_le_11();

struct ThreeGroupScanRow {
    std::string name;
    FiniteAbelianGroup ab;
};

// Abelianizations of all 3-groups of order <= 27; second component: C3 is
// the unique one with abelianization of order 3.
std::pair<std::vector<ThreeGroupScanRow>, bool> three_group_abelianization_scan();

struct PGroupGenCheck {
    bool precondition_ok = false;  // group is a p-group
    bool generates = false;        // gens generate G iff they generate G/[G,G]G^p
};

// Burnside-basis style generation check: the given elements generate the
// p-group iff their images generate the abelianization (verified directly
// on the table both ways).
PGroupGenCheck pgroup_generation_check(const SmallGroup& g, long p,
                                       const std::vector<size_t>& gens);

}  // namespace fs19
