#pragma once
// Order-4 Hopf algebra families over Z' = Z[1/N]: two-generator presentations
//   x^2 = ca*x + cb*y + c0,   y^2 = db*y,
// with comultiplication
//   Sx = x + w - 2xw + c * yz(1-2x)(1-2w),   Sy = y + z + e*yz
// ((x,y) = first tensor factor, (w,z) = second, (u,v) = third). All axioms
// are checked by exact sparse polynomial arithmetic and reduction to normal
// form modulo the relations; no axiom is assumed.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fs19/rational.hpp"

namespace fs19 {

// Variable indices: x,y = first point, w,z = second, u,v = third.
enum HopfVar { VX = 0, VY = 1, VW = 2, VZ = 3, VU = 4, VV = 5 };

using Mono = std::array<uint8_t, 6>;

class LawPoly {
  public:
    LawPoly() = default;
    static LawPoly constant(const Rational& c);
    static LawPoly var(int v);

    LawPoly operator+(const LawPoly& o) const;
    LawPoly operator-(const LawPoly& o) const;
    LawPoly operator*(const LawPoly& o) const;
    LawPoly scaled(const Rational& s) const;
    bool operator==(const LawPoly& o) const { return t_ == o.t_; }
    bool is_zero() const { return t_.empty(); }

    // Substitute replacements for the listed variables (others unchanged).
    LawPoly subst(const std::map<int, LawPoly>& repl) const;

    const std::map<Mono, Rational>& terms() const { return t_; }
    void add_term(const Mono& m, const Rational& c);
    std::string to_string() const;

  private:
    std::map<Mono, Rational> t_;
};

struct HopfFamily {
    std::string name;
    std::string description;
    std::string modulus;     // linear expression in n, e.g. "8n+1"
    std::string xx_x, xx_y, xx_1;  // x^2 = xx_x*x + xx_y*y + xx_1
    std::string yy_y;              // y^2 = yy_y * y
    std::string law_coeff;         // c (may be a quotient of linear expressions)
    std::string sy_cross;          // e
    unsigned expected_annihilation = 0;  // exact 2-power order of the generic point
};

std::vector<HopfFamily> parse_hopf_catalog(const std::string& json_text);
std::vector<HopfFamily> load_hopf_catalog(const std::string& path);

// Linear-in-n expression "an+b" (either part optional) and quotients
// "lin/(lin)", evaluated exactly at n.
Rational eval_linear_expr(const std::string& expr, long n);

struct ConcreteHopf {
    std::string family;
    long n = 0;
    Int modulus;  // N = modulus expression at n
    Rational ca, cb, c0;  // x^2 = ca*x + cb*y + c0
    Rational db;          // y^2 = db*y
    Rational law_c;       // c
    Rational cross;       // e
    LawPoly Sx, Sy;
};

ConcreteHopf instantiate_hopf(const HopfFamily& fam, long n);

// Reduce modulo the pair relations in all three tensor factors.
LawPoly hopf_normal_form(const ConcreteHopf& h, LawPoly p);

// (eps x id) Delta = id = (id x eps) Delta.
bool check_counit(const ConcreteHopf& h);
// Invariance under swapping the two tensor factors.
bool check_commutativity(const ConcreteHopf& h);
// Delta is a ring map: both defining relations are respected.
bool check_relations(const ConcreteHopf& h);
// (Delta x id) Delta == (id x Delta) Delta on both generators; requires
// check_relations (the compositions are only well-defined on the quotient).
bool check_coassociativity(const ConcreteHopf& h);

// Exact 2-power order of the generic point under iterated doubling
// (substituting both arguments equal); 0 if not annihilated within the cap.
unsigned annihilation_order(const ConcreteHopf& h, unsigned max_doublings = 4);

// Discriminant of the x-coordinate quadratic on the fiber y = db, and its
// squarefree class: the field where the nonzero points live.
struct PointFieldResult {
    Rational disc;
    Int squarefree;
};
PointFieldResult point_field_class(const ConcreteHopf& h);

// All structure-constant denominators invertible in Z[1/N].
bool coefficients_in_localization(const ConcreteHopf& h);

// The closed-subgroup / quotient maps of the canonical short sequence:
// killing y presents the etale Z/2 piece, and u -> y embeds the
// one-generator quotient law. wrong_target = true maps u -> x instead
// (negative control: not a ring map).
struct SequenceMapCheck {
    bool sub_ring_map = false;   // x^2 - x lies in (y, z)
    bool sub_law = false;        // induced law is x + w - 2xw
    bool quotient_ring_map = false;  // t^2 - db*t == 0 for the chosen target t
    bool quotient_law = false;       // Delta(t) matches the one-generator law
    bool ok() const {
        return sub_ring_map && sub_law && quotient_ring_map && quotient_law;
    }
};
SequenceMapCheck check_sequence_maps(const ConcreteHopf& h, bool wrong_target = false);

// dim Ext over Z[1/p] of the multiplicative by the constant l-group:
// 1 if l divides (p^2 - 1)/24, else 0. Requires p > 3, both prime.
int ext_mu_dimension(const Int& p, const Int& ell);

}  // namespace fs19
