#pragma once
// Number fields presented as Q[t]/(f) with a certified integral basis.
// The certificate (defining polynomial, basis, discriminant, signature,
// units) is loaded from a JSON data file and re-verified here from first
// principles: ring closure, trace-form discriminant, q-maximality at every
// prime whose square divides disc(f), and unit norms/integrality/count.
// "Fundamental" for the listed units is certificate trust by design; every
// consequence drawn from them downstream is recomputed.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fs19/linalg.hpp"
#include "fs19/poly.hpp"

namespace fs19 {

struct FieldElement {
    QVec c;  // coordinates w.r.t. the certified integral basis
    bool operator==(const FieldElement& o) const { return c == o.c; }
};

std::string to_string(const FieldElement& x);

struct FieldCertificate {
    std::string name;     // optional label for reports
    Poly defining_poly;   // monic, integer coefficients
    QMat integral_basis;  // rows: basis elements in power coordinates
    Int field_disc;
    int r1 = 0, r2 = 0;
    QVec torsion;             // generator of the torsion unit group
    std::vector<QVec> units;  // independent units, r1 + r2 - 1 of them
};

FieldCertificate parse_field_certificate(const std::string& json_text);
FieldCertificate load_field_certificate(const std::string& path);

class NumberField {
  public:
    explicit NumberField(FieldCertificate cert);

    const std::string& name() const { return cert_.name; }
    int degree() const { return n_; }
    const Poly& defining_poly() const { return cert_.defining_poly; }
    const Int& disc() const { return cert_.field_disc; }
    int r1() const { return cert_.r1; }
    int r2() const { return cert_.r2; }
    int unit_rank() const { return cert_.r1 + cert_.r2 - 1; }
    const FieldCertificate& cert() const { return cert_; }
    const QMat& basis() const { return cert_.integral_basis; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement theta() const;  // class of t
    FieldElement from_int_coords(const std::vector<long>& v) const;
    FieldElement from_power_coords(QVec v) const;  // pads/truncates to degree
    QVec to_power_coords(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul_scalar(const FieldElement& a, const Rational& s) const;
    std::optional<FieldElement> inverse(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, unsigned long e) const;

    bool is_integral(const FieldElement& x) const;
    Rational norm(const FieldElement& x) const;
    Rational trace(const FieldElement& x) const;
    QMat mult_matrix(const FieldElement& x) const;  // column j = coords of x*b_j
    Poly min_poly(const FieldElement& x) const;     // monic, over Q

    // g(theta) and g evaluated at an arbitrary element.
    FieldElement eval_poly(const Poly& g) const;
    FieldElement eval_poly_at(const Poly& g, const FieldElement& x) const;

    // Integer multiplication table: entry [i][j] = coords of b_i * b_j.
    // Available once ring closure holds (throws otherwise).
    const std::vector<std::vector<ZVec>>& mult_table_int() const;
    bool mult_table_is_integral() const { return mt_integral_; }

    // emb[i][j]: j-th complex embedding of basis element b_i (ordering fixed
    // by the root-finding iteration; used only to accelerate searches, never
    // for verdicts).
    const std::vector<std::vector<std::complex<double>>>& embeddings() const;

  private:
    FieldCertificate cert_;
    int n_;
    QMat basis_inv_;                      // power coords -> basis coords
    std::vector<std::vector<QVec>> mt_;   // rational multiplication table
    std::vector<std::vector<ZVec>> mt_int_;
    bool mt_integral_ = false;
    std::vector<std::vector<std::complex<double>>> emb_;
};

struct CertificateCheck {
    bool poly_ok = false;        // monic, integral, squarefree, no rational root
    bool closure_ok = false;     // basis closed under multiplication, contains 1 and theta
    bool disc_ok = false;        // trace-form Gram determinant == field_disc
    bool signature_ok = false;   // r1 + 2 r2 == degree, sign(disc) == (-1)^r2
    bool maximality_ok = false;  // q-maximal at every q with q^2 | disc(defining poly)
    bool units_ok = false;       // torsion/fundamental units integral, norms +-1, count
    std::vector<std::string> notes;
    bool ok() const {
        return poly_ok && closure_ok && disc_ok && signature_ok && maximality_ok && units_ok;
    }
};

CertificateCheck verify_field_certificate(const NumberField& nf);

// Smallest k in [1, cap] with x^k = 1, if any.
std::optional<unsigned> multiplicative_order(const NumberField& nf, const FieldElement& x,
                                             unsigned cap = 24);

// Exact roots of g inside nf. Numerically guided (complex embeddings +
// rational reconstruction), but every returned root is verified exactly;
// an empty result means no embedding assignment reconstructed a root.
std::vector<FieldElement> field_roots(const NumberField& nf, const Poly& g);
bool has_root(const NumberField& nf, const Poly& g);

// Complex roots of a rational polynomial (Durand-Kerner; helper for
// embeddings and search prefilters only).
std::vector<std::complex<double>> complex_roots(const Poly& f);

}  // namespace fs19
