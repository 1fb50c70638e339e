#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bergop {

using cplx = std::complex<double>;

/// Polynomial in the monomial basis: entry j is the coefficient of w^j.
/// Length fixes the truncation order N.
using CoeffVector = Eigen::VectorXcd;

/// N x N matrix of an operator in the normalized basis e_k = sqrt(k+1) w^k,
/// entry (p,q) = <Q e_q, e_p>.
using Operator = Eigen::MatrixXcd;

/// The disk involution that swaps 0 and z: phi_z(w) = (z - w) / (1 - conj(z) w).
struct MobiusMap {
  cplx z;
  explicit MobiusMap(cplx z_) : z(z_) {}
};

cplx mobius_eval(const MobiusMap& map, cplx w);

/// Truncated power series of phi_z and phi_z' to order N (N coefficients each).
std::pair<CoeffVector, CoeffVector> mobius_series(const MobiusMap& map, int n);

/// Bergman inner product: <w^n, w^m> = delta_nm / (n+1).
cplx inner_product(const CoeffVector& f, const CoeffVector& g);
double bergman_norm(const CoeffVector& f);

/// Basis element e_k = sqrt(k+1) w^k at truncation order n.
CoeffVector basis_e(int k, int n);

/// Truncated product of two power series, output length = max of inputs.
CoeffVector series_product(const CoeffVector& f, const CoeffVector& g);

/// U_z f = (f o phi_z) phi_z', truncated to the order of f.
CoeffVector u_transform(cplx z, const CoeffVector& f);

/// Columns j = 0..jmax of the matrix of U_z in the normalized basis:
/// column j holds <U_z e_j, e_p> for p = 0..n-1.
Eigen::MatrixXcd u_columns(cplx z, int jmax, int n);

/// Normalized coefficients of U_z e_k with one factor (1-|z|^2) divided out:
/// entry p = <U_z e_k, e_p> / (1-|z|^2).  This is the bounded kernel used in
/// Toeplitz assembly, where the invariant-measure weight cancels against the
/// two kernel factors.
Eigen::VectorXcd toeplitz_kernel_column(cplx z, int k, int n);

/// (f (x) g) h = <h,g> f, as a matrix in the normalized basis.
Operator rank_one(const CoeffVector& f, const CoeffVector& g);

/// Coefficients of K_z: entry j = (j+1) conj(z)^j.
CoeffVector reproducing_kernel(cplx z, int n);

}  // namespace bergop
