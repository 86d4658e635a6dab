#pragma once
// Minkowski bound (rigorous rational upper bound) and class-number-one
// verification: every prime ideal of norm below the bound is certified
// principal by exhibiting a generator, found by bounded box search inside
// the ideal lattice. A failed search within the radius is reported as
// "inconclusive", never as a failure.

#include <optional>
#include <string>
#include <vector>

#include "fs19/ideal.hpp"

namespace fs19 {

// (n!/n^n) (4/pi)^r2 sqrt|d|, rounded up (pi from below: 3.14159).
Rational minkowski_bound(const NumberField& nf);

struct PrincipalityCertificate {
    Int p;             // rational prime below
    unsigned f = 0;    // residue degree
    Int norm;          // ideal norm
    bool found = false;
    std::vector<long> generator_coords;  // w.r.t. the ideal HNF basis
    FieldElement generator;              // the certified generator
};

enum class ClassNumberStatus { Verified, Inconclusive };

struct ClassNumberOutcome {
    ClassNumberStatus status = ClassNumberStatus::Inconclusive;
    Rational bound;
    int radius_used = 0;
    std::vector<PrincipalityCertificate> primes;
    std::string detail;
};

// search_radius: max absolute coordinate (w.r.t. each ideal's HNF basis)
// explored, staged 1..radius with early exit on success.
ClassNumberOutcome verify_class_number_one(const NumberField& nf, int search_radius);

// Search for x in the lattice spanned by `rows` (elements of nf) with
// |N(x)| == target, |coords| <= radius. Exact verification of candidates;
// embeddings are used only to prefilter. First hit in the fixed iteration
// order is returned.
std::optional<std::pair<std::vector<long>, FieldElement>> search_norm_element(
    const NumberField& nf, const std::vector<FieldElement>& rows, const Rational& target,
    int radius);

}  // namespace fs19
