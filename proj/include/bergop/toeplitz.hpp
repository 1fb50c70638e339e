#pragma once

#include <iosfwd>

#include "bergop/measure.hpp"

namespace bergop {

struct ToeplitzRequest {
  const MeasureSpec& mu;
  int k = 0;             // generalization order
  int n_trunc = 64;      // matrix dimension N, must be >= k + 2
  const DiskQuadrature& quad;
};

/// N x N truncation of T_mu^(k).  Entry (p,q) is the integral of
/// h_p(z) conj(h_q(z)) against the measure, where h_p(z) = <U_z e_k, e_p> /
/// (1-|z|^2); the invariant-measure weight (1-|z|^2)^{-2} is cancelled
/// analytically against the two kernel factors and never evaluated alone.
/// Radial densities short-circuit to diagonal 1-D assembly; the dense path
/// is parallel over output rows with a fixed per-row summation order.
Operator assemble_toeplitz(const ToeplitzRequest& req);

/// Serial reference assembly: plain node loop with per-node kernel columns.
/// Kept for testing and benchmarking against the parallel kernel.
Operator assemble_toeplitz_serial(const ToeplitzRequest& req);

/// Largest singular value of the truncated matrix.
double operator_norm(const Operator& q);

/// Extreme eigenvalues of the Hermitian part (min, max).
std::pair<double, double> extreme_eigs(const Operator& q);

/// (|T_a^(k)| norm at truncation, sup|a|); throws if the Englis bound
/// norm <= sup|a| fails beyond tolerance.
std::pair<double, double> englis_bound_check(const MeasureSpec& a, int k, int n_trunc,
                                             const DiskQuadrature& quad);

/// Row-major CSV export, each entry as "re,im".
void write_matrix_csv(std::ostream& out, const Operator& m);

/// JSON envelope {N, k, measure, entries:[[re,im],...] row-major}.
void write_matrix_json(std::ostream& out, const Operator& m, int k,
                       const std::string& measure_descriptor);

}  // namespace bergop
