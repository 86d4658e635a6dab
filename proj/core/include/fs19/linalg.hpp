#pragma once
// Small exact linear algebra: rational matrices (Gaussian elimination),
// integer row-lattice HNF, and kernels over F_p. Dimensions in scope are
// tiny (<= ~40), so clarity wins over asymptotics.

#include <cstdint>
#include <optional>
#include <vector>

#include "fs19/rational.hpp"

namespace fs19 {

using QMat = std::vector<std::vector<Rational>>;
using QVec = std::vector<Rational>;
using ZMat = std::vector<std::vector<Int>>;
using ZVec = std::vector<Int>;

QMat qmat_identity(size_t n);
Rational qmat_det(QMat a);
std::optional<QMat> qmat_inverse(QMat a);
QVec qmat_mul_vec(const QMat& a, const QVec& v);
QMat qmat_mul(const QMat& a, const QMat& b);
// Solve a * x = b; nullopt when singular/inconsistent (square a only).
std::optional<QVec> qmat_solve(QMat a, QVec b);
// Basis of the right kernel of an m x n matrix.
std::vector<QVec> qmat_kernel(QMat a);

// Hermite normal form of the row lattice spanned by `rows` (m x n, m >= n,
// full rank required): returns n x n upper-triangular H with positive
// diagonal and entries above each pivot reduced into [0, pivot).
ZMat hnf_row_lattice(ZMat rows);

// Determinant of an upper-triangular square matrix (product of diagonal).
Int diag_product(const ZMat& h);

// Is v in the row lattice spanned by upper-triangular HNF basis h?
bool hnf_contains(const ZMat& h, ZVec v);

// Reduce v modulo the lattice: canonical representative with
// 0 <= v[i] < h[i][i].
ZVec hnf_reduce(const ZMat& h, ZVec v);

// Kernel basis over F_p of an m x n matrix (entries already reduced mod p).
std::vector<std::vector<uint64_t>> fp_kernel(std::vector<std::vector<uint64_t>> a, uint64_t p);

uint64_t fp_inv(uint64_t a, uint64_t p);

}  // namespace fs19
