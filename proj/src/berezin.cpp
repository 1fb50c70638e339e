#include "bergop/berezin.hpp"

#include <cmath>
#include <numbers>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "bergop/toeplitz.hpp"

namespace bergop {

double binomial(int n, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * double(n - i + 1) / double(i);
  return c;
}

cplx berezin_op(const Operator& q, int n, cplx z) {
  const int dim = int(q.rows());
  if (n < 0) throw std::invalid_argument("berezin_op: n must be >= 0");
  if (2 * n >= dim) {
    throw std::runtime_error("berezin_op: truncation too small for transform order n");
  }
  if (std::abs(z) >= 1.0) throw std::domain_error("berezin_op: |z| must be < 1");
  const Eigen::MatrixXcd cols = u_columns(z, n, dim);
  cplx acc = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double w = binomial(n, j) * ((j % 2) ? -1.0 : 1.0) / double(j + 1);
    acc += w * cols.col(j).dot(q * cols.col(j));  // dot conjugates its caller
  }
  return double(n + 1) * acc;
}

namespace {

cplx berezin_kernel(cplx z, cplx zeta, int n) {
  const double s_z = 1.0 - std::norm(z);
  const double s_zeta = 1.0 - std::norm(zeta);
  const double den = std::norm(1.0 - std::conj(z) * zeta);
  return double(n + 1) * std::pow(s_z, n + 2) * std::pow(s_zeta, n) /
         std::pow(den, n + 2);
}

}  // namespace

cplx berezin_measure(const MeasureSpec& mu, int n, cplx z, const DiskQuadrature& quad) {
  if (n < 0) throw std::invalid_argument("berezin_measure: n must be >= 0");
  return integrate(quad, mu, [&](cplx zeta) { return berezin_kernel(z, zeta, n); });
}

cplx berezin_symbol(const MeasureSpec& a, int n, cplx z, const DiskQuadrature& quad) {
  if (a.kind != MeasureSpec::Kind::density) {
    throw std::invalid_argument("berezin_symbol: needs a function symbol");
  }
  const MobiusMap map(z);
  return integrate_area(quad, [&](cplx zeta) {
    return a.density(mobius_eval(map, zeta)) *
           (double(n + 1) * std::pow(1.0 - std::norm(zeta), n));
  });
}

Operator delta_tilde_op(const Operator& q) {
  const int n = int(q.rows());
  // Monomial-basis coefficients M_pq = q_pq sqrt((p+1)(q+1)); the lifted map is
  // R_pq = sqrt((p+1)(q+1)) [M_{p+1,q+1} + M_{p-1,q-1} - 2 M_pq].
  auto mono = [&](int p, int qq) -> cplx {
    if (p < 0 || qq < 0 || p >= n || qq >= n) return 0.0;
    return q(p, qq) * std::sqrt(double(p + 1) * double(qq + 1));
  };
  Operator r(n, n);
  for (int p = 0; p < n; ++p) {
    for (int qq = 0; qq < n; ++qq) {
      const double s = std::sqrt(double(p + 1) * double(qq + 1));
      r(p, qq) = s * (mono(p + 1, qq + 1) + mono(p - 1, qq - 1) - 2.0 * mono(p, qq));
    }
  }
  return r;
}

Eigen::VectorXd delta_tilde_diag(const Eigen::VectorXd& d) {
  const int n = int(d.size());
  auto mono = [&](int p) -> double {
    if (p < 0 || p >= n) return 0.0;
    return d[p] * double(p + 1);
  };
  Eigen::VectorXd r(n);
  for (int p = 0; p < n; ++p) {
    r[p] = double(p + 1) * (mono(p + 1) + mono(p - 1) - 2.0 * mono(p));
  }
  return r;
}

namespace {

MeasureSpec density_from_bipoly(const BiPoly& p, const std::string& descriptor) {
  double bound = 0.0;
  for (int a = 0; a <= p.bound(); ++a) {
    for (int b = 0; b <= p.bound(); ++b) bound += std::abs(p.coeff(a, b));
  }
  return MeasureSpec::from_density([p](cplx z) { return p.eval(z); }, bound, descriptor);
}

}  // namespace

std::pair<Operator, Operator> decompose_T_Bn(const Operator& s, int n, int n_trunc,
                                             const DiskQuadrature& quad) {
  if (n > 8) throw std::invalid_argument("decompose_T_Bn: n <= 8");
  const MeasureSpec bn = density_from_bipoly(berezin_poly(s, n), "B_n(S)");
  const MeasureSpec b0 = density_from_bipoly(berezin0_of_operator(s), "B_0(S)");
  const Operator lhs = assemble_toeplitz({bn, 0, n_trunc, quad});
  Operator rhs = Operator::Zero(n_trunc, n_trunc);
  for (int j = 0; j <= n; ++j) {
    const double w =
        double(n + 1) * binomial(n, j) * ((j % 2) ? -1.0 : 1.0) / double(j + 1);
    rhs += w * assemble_toeplitz({b0, j, n_trunc, quad});
  }
  return {lhs, rhs};
}

cplx m_difference(std::span<const cplx> x, int m, int n) {
  if (m < 0 || n < 0 || std::size_t(n + m) >= x.size()) {
    throw std::out_of_range("m_difference: sequence must cover [n, n+m]");
  }
  cplx acc = 0.0;
  for (int j = 0; j <= m; ++j) {
    acc += binomial(m, j) * ((j % 2) ? -1.0 : 1.0) * x[n + j];
  }
  return (m % 2 ? -1.0 : 1.0) * acc;
}

std::vector<Rational> lincom_coefficients(int l) {
  if (l < 0) throw std::invalid_argument("lincom_coefficients: l >= 0");
  // T^(l) = T^(0) + dt sum_{m<l} [ (T^(m) + ... + T^(0)) / ((m+1)(m+2)) ],
  // unrolled over the dt-power representations of the lower orders.
  std::vector<std::vector<Rational>> reps;  // reps[m][i] = coeff of dt^i T
  reps.push_back({Rational(1)});
  for (int order = 1; order <= l; ++order) {
    std::vector<Rational> inner(order, Rational(0));  // before applying dt
    for (int m = 0; m < order; ++m) {
      const Rational f(1, (long long)(m + 1) * (m + 2));
      for (int i = 0; i <= m; ++i) {
        for (std::size_t p = 0; p < reps[i].size(); ++p) {
          inner[p] += f * reps[i][p];
        }
      }
    }
    std::vector<Rational> rep(order + 1, Rational(0));
    rep[0] = Rational(1);
    for (int p = 0; p < order; ++p) rep[p + 1] += inner[p];  // multiply by dt
    reps.push_back(std::move(rep));
  }
  return reps[l];
}

std::vector<cplx> hyperbolic_grid(int n_radii, int n_angles, double rmax) {
  std::vector<cplx> pts;
  pts.reserve(std::size_t(n_radii) * n_angles);
  const double umax = std::atanh(rmax);
  for (int i = 0; i < n_radii; ++i) {
    const double r = std::tanh(umax * i / double(n_radii - 1));
    for (int l = 0; l < n_angles; ++l) {
      const double th = 2.0 * std::numbers::pi * l / n_angles;
      pts.push_back(std::polar(r, th));
      if (r == 0.0) break;  // single point at the origin
    }
  }
  return pts;
}

void write_field_csv(std::ostream& out, std::span<const cplx> points,
                     std::span<const cplx> values) {
  out << std::setprecision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << points[i].real() << ',' << points[i].imag() << ',' << values[i].real()
        << ',' << values[i].imag() << '\n';
  }
}

}  // namespace bergop
