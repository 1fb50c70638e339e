#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "bergop/bipoly.hpp"
#include "bergop/measure.hpp"

namespace bergop {

using Rational = boost::rational<long long>;

double binomial(int n, int j);

/// n-Berezin transform of a truncated operator at z:
/// (n+1) sum_j C(n,j) (-1)^j/(j+1) <Q U_z e_j, U_z e_j>.
cplx berezin_op(const Operator& q, int n, cplx z);

/// B_n of a measure at z, with the invariant-measure weight fused into the
/// kernel: the integrand against dA is
/// (n+1) (1-|z|^2)^{n+2} (1-|zeta|^2)^n / |1 - conj(z) zeta|^{2(n+2)}.
cplx berezin_measure(const MeasureSpec& mu, int n, cplx z, const DiskQuadrature& quad);

/// B_n of a bounded function symbol: quadrature of a(phi_z(zeta)) against
/// the radial probability kernel (n+1)(1-|zeta|^2)^n dA.
cplx berezin_symbol(const MeasureSpec& a, int n, cplx z, const DiskQuadrature& quad);

/// Invariant Laplacian lifted to truncated operators via its exact action on
/// monomial rank-one operators.  Valid on the leading (N-1) block when the
/// input touches the last row/column; exact otherwise.
Operator delta_tilde_op(const Operator& q);

/// Same map restricted to operators diagonal in the normalized basis.
/// Entries past the ends are treated as zero.
Eigen::VectorXd delta_tilde_diag(const Eigen::VectorXd& d);

/// Lemma-style decomposition pair: first = T_{B_n(S)} assembled from the
/// exact polynomial density, second = the alternating binomial combination
/// (n+1) sum_j C(n,j)(-1)^j/(j+1) T^(j)_{B_0(S)}.
std::pair<Operator, Operator> decompose_T_Bn(const Operator& s, int n, int n_trunc,
                                             const DiskQuadrature& quad);

/// m-difference of a sequence: (-1)^m sum_j C(m,j)(-1)^j x_{n+j}.
cplx m_difference(std::span<const cplx> x, int m, int n);

/// Exact rational coefficients c_0..c_l with
/// T_a^(l) = c_0 T_a + c_1 dt T_a + ... + c_l dt^l T_a.
std::vector<Rational> lincom_coefficients(int l);

/// Sample grid for sup norms over the disk: hyperbolically equispaced radii
/// tanh(uniform on [0, atanh rmax]) crossed with uniform angles.
std::vector<cplx> hyperbolic_grid(int n_radii, int n_angles, double rmax);

/// CSV rows "re(z),im(z),re(val),im(val)".
void write_field_csv(std::ostream& out, std::span<const cplx> points,
                     std::span<const cplx> values);

}  // namespace bergop
