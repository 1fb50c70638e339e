#include "bergop/bergman.hpp"

#include <cmath>
#include <stdexcept>

namespace bergop {

cplx mobius_eval(const MobiusMap& map, cplx w) {
  const cplx den = 1.0 - std::conj(map.z) * w;
  if (std::abs(den) < 1e-14) {
    throw std::domain_error("mobius_eval: degenerate denominator 1 - conj(z) w");
  }
  return (map.z - w) / den;
}

std::pair<CoeffVector, CoeffVector> mobius_series(const MobiusMap& map, int n) {
  // phi_z(w)  = z - (1-|z|^2) sum_{m>=1} conj(z)^{m-1} w^m
  // phi_z'(w) = -(1-|z|^2) sum_{m>=0} (m+1) conj(z)^m w^m
  const cplx z = map.z;
  const double s = 1.0 - std::norm(z);
  CoeffVector phi = CoeffVector::Zero(n);
  CoeffVector phid = CoeffVector::Zero(n);
  phi[0] = z;
  cplx zbar_pow = 1.0;  // conj(z)^{m-1} for m = 1
  for (int m = 1; m < n; ++m) {
    phi[m] = -s * zbar_pow;
    zbar_pow *= std::conj(z);
  }
  zbar_pow = 1.0;
  for (int m = 0; m < n; ++m) {
    phid[m] = -s * double(m + 1) * zbar_pow;
    zbar_pow *= std::conj(z);
  }
  return {phi, phid};
}

cplx inner_product(const CoeffVector& f, const CoeffVector& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("inner_product: mismatched truncation orders");
  }
  cplx acc = 0.0;
  for (int j = 0; j < f.size(); ++j) {
    acc += f[j] * std::conj(g[j]) / double(j + 1);
  }
  return acc;
}

double bergman_norm(const CoeffVector& f) {
  double acc = 0.0;
  for (int j = 0; j < f.size(); ++j) {
    acc += std::norm(f[j]) / double(j + 1);
  }
  return std::sqrt(acc);
}

CoeffVector basis_e(int k, int n) {
  CoeffVector e = CoeffVector::Zero(n);
  e[k] = std::sqrt(double(k + 1));
  return e;
}

CoeffVector series_product(const CoeffVector& f, const CoeffVector& g) {
  const int n = int(std::max(f.size(), g.size()));
  CoeffVector h = CoeffVector::Zero(n);
  for (int i = 0; i < f.size(); ++i) {
    if (f[i] == cplx(0.0)) continue;
    const int jmax = std::min<int>(int(g.size()), n - i);
    for (int j = 0; j < jmax; ++j) {
      h[i + j] += f[i] * g[j];
    }
  }
  return h;
}

CoeffVector u_transform(cplx z, const CoeffVector& f) {
  const int n = int(f.size());
  auto [phi, phid] = mobius_series(MobiusMap(z), n);
  CoeffVector comp = CoeffVector::Zero(n);
  CoeffVector pow = CoeffVector::Zero(n);
  pow[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    if (f[k] != cplx(0.0)) comp += f[k] * pow;
    if (k + 1 < n) pow = series_product(pow, phi);
  }
  return series_product(comp, phid);
}

Eigen::MatrixXcd u_columns(cplx z, int jmax, int n) {
  auto [phi, phid] = mobius_series(MobiusMap(z), n);
  Eigen::MatrixXcd cols(n, jmax + 1);
  CoeffVector pow = CoeffVector::Zero(n);
  pow[0] = 1.0;
  for (int j = 0; j <= jmax; ++j) {
    CoeffVector cj = series_product(pow, phid);  // monomial coeffs of phi^j phi'
    const double scale = std::sqrt(double(j + 1));
    for (int p = 0; p < n; ++p) {
      cols(p, j) = scale * cj[p] / std::sqrt(double(p + 1));
    }
    if (j < jmax) pow = series_product(pow, phi);
  }
  return cols;
}

Eigen::VectorXcd toeplitz_kernel_column(cplx z, int k, int n) {
  auto [phi, phid] = mobius_series(MobiusMap(z), n);
  CoeffVector pow = CoeffVector::Zero(n);
  pow[0] = 1.0;
  for (int j = 0; j < k; ++j) pow = series_product(pow, phi);
  CoeffVector c = series_product(pow, phid);
  const double scale = std::sqrt(double(k + 1)) / (1.0 - std::norm(z));
  Eigen::VectorXcd h(n);
  for (int p = 0; p < n; ++p) {
    h[p] = scale * c[p] / std::sqrt(double(p + 1));
  }
  return h;
}

Operator rank_one(const CoeffVector& f, const CoeffVector& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("rank_one: mismatched truncation orders");
  }
  const int n = int(f.size());
  Operator m(n, n);
  for (int p = 0; p < n; ++p) {
    const cplx fp = f[p] / std::sqrt(double(p + 1));  // <f, e_p>
    for (int q = 0; q < n; ++q) {
      m(p, q) = fp * std::conj(g[q]) / std::sqrt(double(q + 1));
    }
  }
  return m;
}

CoeffVector reproducing_kernel(cplx z, int n) {
  CoeffVector k(n);
  cplx zbar_pow = 1.0;
  for (int j = 0; j < n; ++j) {
    k[j] = double(j + 1) * zbar_pow;
    zbar_pow *= std::conj(z);
  }
  return k;
}

}  // namespace bergop
