#include "bergop/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergop {

void gauss_legendre_01(int m, std::vector<double>& x, std::vector<double>& w) {
  // Newton iteration on P_m over [-1,1], then map to [0,1] with total weight 1.
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  const int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = m * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    const double wi = 2.0 / ((1.0 - t * t) * pp * pp);
    x[i] = 0.5 * (1.0 - t);          // descending t -> ascending x
    x[m - 1 - i] = 0.5 * (1.0 + t);
    w[i] = 0.5 * wi;
    w[m - 1 - i] = 0.5 * wi;
  }
}

DiskQuadrature build_disk_quadrature(int radial_order, int angular_order) {
  if (radial_order < 1 || angular_order < 4) {
    throw std::invalid_argument("build_disk_quadrature: need M >= 1, L >= 4");
  }
  DiskQuadrature q;
  q.radial_order = radial_order;
  q.angular_order = angular_order;
  gauss_legendre_01(radial_order, q.radial_x, q.radial_w);
  q.nodes.reserve(std::size_t(radial_order) * angular_order);
  q.weights.reserve(std::size_t(radial_order) * angular_order);
  for (int i = 0; i < radial_order; ++i) {
    const double r = std::sqrt(q.radial_x[i]);
    const double wi = q.radial_w[i] / angular_order;
    for (int l = 0; l < angular_order; ++l) {
      const double th = 2.0 * std::numbers::pi * l / angular_order;
      q.nodes.push_back(cplx(r * std::cos(th), r * std::sin(th)));
      q.weights.push_back(wi);
    }
  }
  return q;
}

cplx integrate_area(const DiskQuadrature& q, const std::function<cplx(cplx)>& f) {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const cplx v = f(q.nodes[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::runtime_error("integrate: non-finite integrand at node " +
                               std::to_string(i));
    }
    acc += q.weights[i] * v;
  }
  return acc;
}

}  // namespace bergop
