#pragma once

#include <iosfwd>
#include <map>
#include <span>

#include "bergop/measure.hpp"

namespace bergop {

/// D(v,r) = { |phi_v(z)| <= r }, a Euclidean disk with shifted center.
struct PseudoDisk {
  cplx v;
  double r = 0.0;
  cplx euclidean_center;
  double euclidean_radius = 0.0;
  double area = 0.0;  // normalized area = euclidean_radius^2
};

PseudoDisk pseudo_disk(cplx v, double r);

bool pseudo_disk_contains(const PseudoDisk& d, cplx z);

/// mu(D(v,r)) by quadrature-node membership (density) or atom membership.
double measure_of_disk(const DiskQuadrature& quad, const MeasureSpec& mu,
                       const PseudoDisk& d);

/// sup over the given centers of mu(D(v,r)) / |D(v,r)|.
double box_kernel_sup(const DiskQuadrature& quad, const MeasureSpec& mu, double r,
                      std::span<const cplx> centers);

/// Integral of (1-|z|^2)^{-2} over D(v,r) against mu.
double mu_tilde_disk(const DiskQuadrature& quad, const MeasureSpec& mu, cplx v, double r);

/// B_0(T_mu^(k))(w), computed directly from the measure with the weight fused:
/// the density-integrand against dA is (k+1)|phi_w(z)|^{2k} (1-|w|^2)^2 / |1-conj(w)z|^4.
double berezin0_of_toeplitz(const DiskQuadrature& quad, const MeasureSpec& mu, int k,
                            cplx w);

enum class CarlesonClass { carleson, vanishing_carleson_evidence, inconclusive };

struct KBound {
  int k = 0;
  double lower_diag = 0.0;  // grid sup of B_0(T_mu^(k)), certified lower bound
  double norm_trunc = 0.0;  // sigma_max of the truncation
  double upper = 0.0;       // 4(k+2) b0_sup
};

struct CarlesonReport {
  std::string measure;
  double b0_sup = 0.0;
  std::map<double, double> box_sup;  // radius -> box-kernel sup
  double mu_tilde_sup = 0.0;
  CarlesonClass classification = CarlesonClass::inconclusive;
  std::vector<KBound> bounds;
};

struct ClassifyConfig {
  int n_trunc = 48;
  int k_max = 4;
  int grid_radii = 20;
  int grid_angles = 64;
  double grid_rmax = 0.995;
};

/// Positive measures only.  Classification thresholds: "carleson" needs the
/// grid sup of B_0(mu) to move < 2% under radial grid refinement; vanishing
/// evidence additionally needs monotone decay over the outermost three radius
/// shells and an outer-shell sup at most a tenth of the global sup.
CarlesonReport carleson_classify(const DiskQuadrature& quad, const MeasureSpec& mu,
                                 const ClassifyConfig& cfg = {});

KBound norm_bounds(const DiskQuadrature& quad, const MeasureSpec& mu, int k,
                   int n_trunc, const ClassifyConfig& cfg = {});

/// (c1 estimate, r = 1/10 inclusion check) for the annulus lower-bound
/// argument behind the norm estimates.
std::pair<double, bool> annulus_constant_check(int k_max);

void write_report_json(std::ostream& out, const CarlesonReport& rep);

}  // namespace bergop
