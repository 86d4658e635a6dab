#pragma once
// Finite abelian group structure (invariant factors), residue rings (O/m)^*
// by explicit enumeration, unit images, and ray class groups in the
// class-number-one case via the exact sequence
//   O^* -> (O/m)^* x {signs} -> Cl_m -> Cl -> 0.
// Sign conditions at real places are supported for degree-1 fields only
// (all shipped fields except Q are totally imaginary).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fs19/ideal.hpp"
#include "fs19/number_field.hpp"

namespace fs19 {

struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;  // d1 | d2 | ..., each > 1; empty = trivial
    Int order() const {
        Int o(1);
        for (const auto& d : invariant_factors) o *= d;
        return o;
    }
    bool operator==(const FiniteAbelianGroup& o) const {
        return invariant_factors == o.invariant_factors;
    }
};

std::string to_string(const FiniteAbelianGroup& g);

// Multiplicative group of O/m, fully enumerated (throws beyond the
// enumeration cap). Keeps the element table so later image/quotient
// computations can reuse it.
class ResidueUnitGroup {
  public:
    static constexpr long kEnumerationCap = 1000000;

    ResidueUnitGroup(const NumberField& nf, const FractionalIdeal& modulus);

    size_t size() const { return units_.size(); }
    const FiniteAbelianGroup& structure() const { return structure_; }

    // Index of the residue of an integral element (must be a unit mod m).
    size_t index_of(const FieldElement& x) const;
    size_t mul(size_t i, size_t j) const;
    size_t identity() const { return id_; }
    unsigned long element_order(size_t i) const;

    // Subgroup generated by the given unit indices (sorted element indices).
    std::vector<size_t> subgroup(const std::vector<size_t>& gens) const;

    // Invariant factors of the quotient by a subgroup (list of indices).
    FiniteAbelianGroup quotient_structure(const std::vector<size_t>& subgroup_elems) const;

  private:
    ZVec reduce(const ZVec& v) const;
    std::vector<long> key_of(const ZVec& v) const;

    const NumberField& nf_;
    ZMat hnf_;
    std::vector<ZVec> units_;            // canonical residue representatives
    std::map<std::vector<long>, size_t> index_;
    size_t id_ = 0;
    FiniteAbelianGroup structure_;
};

// Invariant factors of (O/m)^*. m integral.
FiniteAbelianGroup unit_quotient_structure(const NumberField& nf,
                                           const FractionalIdeal& m);

// Order of the image of the certified unit group (torsion generator and
// fundamental units) inside (O/m)^*.
Int unit_image_order(const NumberField& nf, const FractionalIdeal& m);

// Ray class group of modulus m (times the listed real places) for a field
// already verified to have class number one. infinite_part: indices of real
// places (only degree-1 fields supported; throws otherwise).
FiniteAbelianGroup ray_class_group(const NumberField& nf, const FractionalIdeal& m,
                                   const std::vector<int>& infinite_part);

}  // namespace fs19
