#include "bergop/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bergop/berezin.hpp"
#include "bergop/toeplitz.hpp"

namespace bergop {

PseudoDisk pseudo_disk(cplx v, double r) {
  if (std::abs(v) >= 1.0 || r <= 0.0 || r >= 1.0) {
    throw std::invalid_argument("pseudo_disk: need |v| < 1 and 0 < r < 1");
  }
  PseudoDisk d;
  d.v = v;
  d.r = r;
  const double den = 1.0 - std::norm(v) * r * r;
  d.euclidean_center = v * (1.0 - r * r) / den;
  d.euclidean_radius = r * (1.0 - std::norm(v)) / den;
  d.area = d.euclidean_radius * d.euclidean_radius;
  return d;
}

bool pseudo_disk_contains(const PseudoDisk& d, cplx z) {
  return std::abs(z - d.euclidean_center) <= d.euclidean_radius;
}

double measure_of_disk(const DiskQuadrature& quad, const MeasureSpec& mu,
                       const PseudoDisk& d) {
  if (mu.kind == MeasureSpec::Kind::atomic) {
    double acc = 0.0;
    for (const auto& a : mu.atoms) {
      if (pseudo_disk_contains(d, a.pos)) acc += a.mass.real();
    }
    return acc;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    if (pseudo_disk_contains(d, quad.nodes[i])) {
      acc += quad.weights[i] * mu.density(quad.nodes[i]).real();
    }
  }
  return acc;
}

double box_kernel_sup(const DiskQuadrature& quad, const MeasureSpec& mu, double r,
                      std::span<const cplx> centers) {
  double sup = 0.0;
  for (cplx v : centers) {
    const PseudoDisk d = pseudo_disk(v, r);
    sup = std::max(sup, measure_of_disk(quad, mu, d) / d.area);
  }
  return sup;
}

double mu_tilde_disk(const DiskQuadrature& quad, const MeasureSpec& mu, cplx v,
                     double r) {
  const PseudoDisk d = pseudo_disk(v, r);
  if (mu.kind == MeasureSpec::Kind::atomic) {
    double acc = 0.0;
    for (const auto& a : mu.atoms) {
      if (pseudo_disk_contains(d, a.pos)) {
        acc += a.mass.real() / std::pow(1.0 - std::norm(a.pos), 2);
      }
    }
    return acc;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const cplx z = quad.nodes[i];
    if (pseudo_disk_contains(d, z)) {
      acc += quad.weights[i] * mu.density(z).real() / std::pow(1.0 - std::norm(z), 2);
    }
  }
  return acc;
}

double berezin0_of_toeplitz(const DiskQuadrature& quad, const MeasureSpec& mu, int k,
                            cplx w) {
  const double sw = 1.0 - std::norm(w);
  const cplx val = integrate(quad, mu, [&](cplx z) -> cplx {
    const double t = std::norm((w - z) / (1.0 - std::conj(w) * z));
    const double fused = sw * sw / std::norm((1.0 - std::conj(w) * z) *
                                             (1.0 - std::conj(w) * z));
    return double(k + 1) * std::pow(t, k) * fused;
  });
  return val.real();
}

namespace {

// Per-radius sups of B_0(mu) on a hyperbolic grid; radial measures are
// evaluated on the positive real axis only.
std::vector<double> shell_sups(const DiskQuadrature& quad, const MeasureSpec& mu,
                               int n_radii, int n_angles, double rmax) {
  std::vector<double> sups(n_radii, 0.0);
  const double umax = std::atanh(rmax);
  const bool radial = mu.is_radial();
  for (int i = 0; i < n_radii; ++i) {
    const double r = std::tanh(umax * i / double(n_radii - 1));
    const int na = (radial || r == 0.0) ? 1 : n_angles;
    for (int l = 0; l < na; ++l) {
      const double th = 2.0 * std::numbers::pi * l / n_angles;
      const double v = berezin_measure(mu, 0, std::polar(r, th), quad).real();
      sups[i] = std::max(sups[i], v);
    }
  }
  return sups;
}

}  // namespace

KBound norm_bounds(const DiskQuadrature& quad, const MeasureSpec& mu, int k,
                   int n_trunc, const ClassifyConfig& cfg) {
  if (!mu.positive) throw std::invalid_argument("norm_bounds: positive measures only");
  KBound b;
  b.k = k;
  const double umax = std::atanh(cfg.grid_rmax);
  double b0sup = 0.0;
  for (int i = 0; i < cfg.grid_radii; ++i) {
    const double r = std::tanh(umax * i / double(cfg.grid_radii - 1));
    const int na = (mu.is_radial() || r == 0.0) ? 1 : cfg.grid_angles;
    for (int l = 0; l < na; ++l) {
      const cplx w = std::polar(r, 2.0 * std::numbers::pi * l / cfg.grid_angles);
      b.lower_diag = std::max(b.lower_diag, berezin0_of_toeplitz(quad, mu, k, w));
      b0sup = std::max(b0sup, berezin_measure(mu, 0, w, quad).real());
    }
  }
  b.norm_trunc = operator_norm(assemble_toeplitz({mu, k, n_trunc, quad}));
  b.upper = 4.0 * double(k + 2) * b0sup;
  const double tol = 1e-3;
  if (b.lower_diag > b.norm_trunc * (1.0 + tol) || b.norm_trunc > b.upper * (1.0 + tol)) {
    throw std::logic_error("norm_bounds: bound chain violated beyond tolerance");
  }
  return b;
}

CarlesonReport carleson_classify(const DiskQuadrature& quad, const MeasureSpec& mu,
                                 const ClassifyConfig& cfg) {
  if (!mu.positive) {
    throw std::invalid_argument("carleson_classify: positive measures only");
  }
  CarlesonReport rep;
  rep.measure = mu.descriptor;

  const auto sups = shell_sups(quad, mu, cfg.grid_radii, cfg.grid_angles, cfg.grid_rmax);
  const auto sups_fine =
      shell_sups(quad, mu, 2 * cfg.grid_radii - 1, cfg.grid_angles, cfg.grid_rmax);
  const double sup_coarse = *std::max_element(sups.begin(), sups.end());
  const double sup_fine = *std::max_element(sups_fine.begin(), sups_fine.end());
  rep.b0_sup = std::max(sup_coarse, sup_fine);

  std::vector<cplx> centers = hyperbolic_grid(cfg.grid_radii, cfg.grid_angles / 2, 0.95);
  for (double r : {0.1, 0.3, 0.5}) {
    rep.box_sup[r] = box_kernel_sup(quad, mu, r, centers);
  }
  double mts = 0.0;
  for (cplx v : centers) mts = std::max(mts, mu_tilde_disk(quad, mu, v, 0.1));
  rep.mu_tilde_sup = mts;

  const int nr = cfg.grid_radii;
  const bool self_convergent =
      std::abs(sup_fine - sup_coarse) <= 0.02 * std::max(sup_coarse, 1e-12);
  const bool outer_decay = sups[nr - 1] <= sups[nr - 2] && sups[nr - 2] <= sups[nr - 3];
  const bool outer_small = sups[nr - 1] <= rep.b0_sup / 10.0;

  if (!self_convergent) {
    rep.classification = CarlesonClass::inconclusive;
  } else if (outer_decay && outer_small) {
    rep.classification = CarlesonClass::vanishing_carleson_evidence;
  } else {
    rep.classification = CarlesonClass::carleson;
  }

  for (int k = 0; k <= cfg.k_max; ++k) {
    rep.bounds.push_back(norm_bounds(quad, mu, k, cfg.n_trunc, cfg));
  }
  return rep;
}

std::pair<double, bool> annulus_constant_check(int k_max) {
  if (k_max < 1) throw std::invalid_argument("annulus_constant_check: k_max >= 1");
  double c1 = std::numeric_limits<double>::infinity();
  bool r_ok = true;
  const double r = 0.1;
  for (int k = 1; k <= k_max; ++k) {
    const auto f = [&](double x) {
      return double(k + 1) * std::pow(x, k) * (1.0 - x) * (1.0 - x);
    };
    const double lo = (k - 0.5) / double(k + 2);
    const double hi = double(k + 1) / double(k + 2);
    // f is unimodal with its peak at k/(k+2), inside [lo, hi]: min at an endpoint
    const double fmin = std::min(f(lo), f(hi));
    c1 = std::min(c1, double(k + 2) * fmin);

    const double zk = std::sqrt(double(k) / double(k + 2));
    const double a = std::sqrt((k - 0.5) / double(k + 2));
    const double b = std::sqrt(double(k + 1) / double(k + 2));
    const double r_lo = (zk - a) / (1.0 - zk * a);
    const double r_hi = (b - zk) / (1.0 - zk * b);
    if (r > r_lo || r > r_hi) r_ok = false;
  }
  return {c1, r_ok};
}

void write_report_json(std::ostream& out, const CarlesonReport& rep) {
  nlohmann::json j;
  j["measure"] = rep.measure;
  j["b0_sup"] = rep.b0_sup;
  for (const auto& [r, v] : rep.box_sup) {
    j["box_sup"][std::to_string(r)] = v;
  }
  j["mu_tilde_sup"] = rep.mu_tilde_sup;
  switch (rep.classification) {
    case CarlesonClass::carleson: j["classification"] = "carleson"; break;
    case CarlesonClass::vanishing_carleson_evidence:
      j["classification"] = "vanishing_carleson_evidence";
      break;
    case CarlesonClass::inconclusive: j["classification"] = "inconclusive"; break;
  }
  j["bounds"] = nlohmann::json::array();
  for (const auto& b : rep.bounds) {
    j["bounds"].push_back({{"k", b.k},
                           {"lower_diag", b.lower_diag},
                           {"norm_trunc", b.norm_trunc},
                           {"upper", b.upper}});
  }
  out << j.dump(2) << '\n';
}

}  // namespace bergop
