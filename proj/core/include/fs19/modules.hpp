#pragma once
// Finite group modules over F_2 as explicit matrix actions (dimension <= 8,
// rows as bitmasks): irreducibility, endomorphism dimension, the full
// invariant-subspace lattice, and uniqueness of composition factors across
// all maximal chains. Also the Z/n unipotent-action exponent check.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fs19 {

// A matrix over F_2: row i is a bitmask; (Mv) bit i = parity(row[i] & v).
using F2Matrix = std::array<uint8_t, 8>;

uint8_t f2_apply(const F2Matrix& m, uint8_t v, int dim);
F2Matrix f2_mat_mul(const F2Matrix& a, const F2Matrix& b, int dim);
F2Matrix f2_identity(int dim);

struct F2Module {
    int dim = 0;
    std::vector<F2Matrix> gens;
    std::vector<std::string> gen_names;
};

// Smallest submodule containing v (cyclic submodule), as an echelon basis.
std::vector<uint8_t> f2_cyclic_submodule(const F2Module& m, uint8_t v);

// No nonzero proper invariant subspace.
bool module_is_irreducible(const F2Module& m);

// F_2-dimension of the commutant {T : TG = GT for all generators}.
int module_end_dim(const F2Module& m);

// All invariant subspaces, each as a reduced echelon basis (canonical),
// sorted by (dimension, basis). Includes 0 (empty basis) and the whole space.
std::vector<std::vector<uint8_t>> invariant_subspaces(const F2Module& m);

// Intertwiner test: is there an invertible T with T g1 = g2 T (matched
// generator lists)?
bool modules_isomorphic(const F2Module& a, const F2Module& b);

struct CompositionReport {
    size_t lattice_size = 0;        // number of invariant subspaces
    size_t num_maximal_chains = 0;  // composition series counted
    std::vector<int> factor_dims;   // dims of the factors of one series
    bool jh_unique = false;         // same factor multiset along every chain
};

CompositionReport composition_report(const F2Module& m);

// Z/n modules with a distinguished coordinate subset ("flagged") spanning
// the fixed submodule. Checks the implication: if every generator g fixes
// the flagged coordinates and moves the rest into them (i.e. g - 1 maps
// everything into the flagged span and kills it), then (g-1)^2 = 0 and
// g^n = 1, so the action is unipotent of exponent dividing n.
struct ZnModule {
    long n = 0;  // modulus
    int dim = 0;
    std::vector<std::vector<std::vector<long>>> actions;  // matrices mod n
    std::vector<int> flagged;                             // coordinate indices
};

struct UnipotentCheck {
    bool precondition_ok = false;  // (g-1) image in flagged span, flagged fixed
    bool square_zero_ok = false;   // (g-1)^2 == 0 mod n
    bool exponent_ok = false;      // g^n == 1 mod n
    bool ok() const { return precondition_ok && square_zero_ok && exponent_ok; }
};

UnipotentCheck unipotent_exponent_check(const ZnModule& m);

}  // namespace fs19
