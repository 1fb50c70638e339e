#pragma once

#include <functional>
#include <vector>

#include "bergop/bergman.hpp"

namespace bergop {

/// Tensor rule for the normalized area measure on the unit disk:
/// Gauss-Legendre in x = |z|^2 on [0,1] crossed with uniform angles.
/// Radial degree exactness: polynomials in x up to degree 2M-1.
struct DiskQuadrature {
  std::vector<double> radial_x;   // Gauss-Legendre nodes in x = |z|^2
  std::vector<double> radial_w;   // weights summing to 1
  int radial_order = 0;           // M
  int angular_order = 0;          // L
  std::vector<cplx> nodes;        // all M*L points, radius-major order
  std::vector<double> weights;    // radial_w / L, matching nodes

  std::size_t size() const { return nodes.size(); }
};

/// Gauss-Legendre nodes and weights on [0,1] (weights sum to 1).
void gauss_legendre_01(int m, std::vector<double>& x, std::vector<double>& w);

DiskQuadrature build_disk_quadrature(int radial_order, int angular_order);

/// Quadrature of f against plain normalized area measure.
cplx integrate_area(const DiskQuadrature& q, const std::function<cplx(cplx)>& f);

}  // namespace bergop
