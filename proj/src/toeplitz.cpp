#include "bergop/toeplitz.hpp"

#include <cmath>
#include <numbers>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergop {

namespace {

void check_request(const ToeplitzRequest& req) {
  if (req.k < 0) throw std::invalid_argument("assemble_toeplitz: k must be >= 0");
  if (req.n_trunc < req.k + 2) {
    throw std::invalid_argument("assemble_toeplitz: need N >= k + 2");
  }
}

Operator assemble_atomic(const ToeplitzRequest& req) {
  const int n = req.n_trunc;
  Operator t = Operator::Zero(n, n);
  for (const auto& a : req.mu.atoms) {
    if (std::abs(a.pos) > 0.999) {
      throw std::domain_error("assemble_toeplitz: atom outside |v| <= 0.999");
    }
    const Eigen::VectorXcd h = toeplitz_kernel_column(a.pos, req.k, n);
    t.noalias() += a.mass * (h * h.adjoint());
  }
  return t;
}

// Radial density: the matrix is diagonal (angular integral kills p != q),
// and |h_p| depends only on |z|, so a 1-D rule in x = |z|^2 suffices.
Operator assemble_radial(const ToeplitzRequest& req) {
  const int n = req.n_trunc;
  const auto& rho = *req.mu.radial_profile;
  Operator t = Operator::Zero(n, n);
  const auto& qx = req.quad.radial_x;
  const auto& qw = req.quad.radial_w;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  for (std::size_t i = 0; i < qx.size(); ++i) {
    const double r = std::sqrt(qx[i]);
    const double w = qw[i] * rho(qx[i]);
    if (w == 0.0) continue;
    const Eigen::VectorXcd h = toeplitz_kernel_column(cplx(r, 0.0), req.k, n);
    for (int p = 0; p < n; ++p) diag[p] += w * std::norm(h[p]);
  }
  t.diagonal() = diag.cast<cplx>();
  return t;
}

}  // namespace

Operator assemble_toeplitz(const ToeplitzRequest& req) {
  check_request(req);
  if (req.mu.kind == MeasureSpec::Kind::atomic) return assemble_atomic(req);
  if (req.mu.is_radial()) return assemble_radial(req);

  const int n = req.n_trunc;
  const int k = req.k;
  const int m_rad = req.quad.radial_order;
  const int l_ang = req.quad.angular_order;
  const std::size_t nodes = req.quad.size();

  // Kernel matrix G: row per node, column p = h_p(z).  Columns at angle
  // theta differ from the real-axis column only by phases e^{i theta (k-p)},
  // so the series composition is amortized per radius.
  using RowMatXcd = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMatXcd g(nodes, n);
  std::vector<cplx> wa(nodes);  // node weight times density value

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < m_rad; ++i) {
    const double r = std::sqrt(req.quad.radial_x[i]);
    const Eigen::VectorXcd base = toeplitz_kernel_column(cplx(r, 0.0), k, n);
    for (int l = 0; l < l_ang; ++l) {
      const std::size_t row = std::size_t(i) * l_ang + l;
      const double th = 2.0 * std::numbers::pi * l / l_ang;
      const cplx z = req.quad.nodes[row];
      wa[row] = req.quad.weights[row] * req.mu.density(z);
      const cplx lam = std::polar(1.0, th);
      cplx phase = std::pow(lam, k);  // e^{i theta (k-p)} built up over p
      for (int p = 0; p < n; ++p) {
        g(row, p) = phase * base[p];
        phase *= std::conj(lam);
      }
    }
  }

  // T_pq = sum_nodes wa * h_p conj(h_q), rows in parallel, nodes in order.
  Operator t(n, n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int p = 0; p < n; ++p) {
    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(n);
    for (std::size_t i = 0; i < nodes; ++i) {
      const cplx c = wa[i] * g(i, p);
      if (c == cplx(0.0)) continue;
      row.noalias() += c * g.row(i).conjugate().transpose();
    }
    t.row(p) = row.transpose();
  }
  return t;
}

Operator assemble_toeplitz_serial(const ToeplitzRequest& req) {
  check_request(req);
  if (req.mu.kind == MeasureSpec::Kind::atomic) return assemble_atomic(req);
  const int n = req.n_trunc;
  Operator t = Operator::Zero(n, n);
  for (std::size_t i = 0; i < req.quad.size(); ++i) {
    const cplx z = req.quad.nodes[i];
    const cplx wa = req.quad.weights[i] * req.mu.density(z);
    if (wa == cplx(0.0)) continue;
    const Eigen::VectorXcd h = toeplitz_kernel_column(z, req.k, n);
    t.noalias() += wa * (h * h.adjoint());
  }
  return t;
}

double operator_norm(const Operator& q) {
  if (!q.allFinite()) throw std::invalid_argument("operator_norm: non-finite entries");
  if (q.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(q);
  return svd.singularValues()(0);
}

std::pair<double, double> extreme_eigs(const Operator& q) {
  const Eigen::MatrixXcd h = 0.5 * (q + q.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

std::pair<double, double> englis_bound_check(const MeasureSpec& a, int k, int n_trunc,
                                             const DiskQuadrature& quad) {
  if (a.kind != MeasureSpec::Kind::density || !std::isfinite(a.sup_abs)) {
    throw std::invalid_argument("englis_bound_check: needs a bounded density symbol");
  }
  const double nrm = operator_norm(assemble_toeplitz({a, k, n_trunc, quad}));
  const double bound = a.sup_abs;
  if (nrm > bound + 1e-6) {
    throw std::logic_error("englis_bound_check: norm exceeds sup|a|");
  }
  return {nrm, bound};
}

void write_matrix_csv(std::ostream& out, const Operator& m) {
  out << std::setprecision(17);
  for (int p = 0; p < m.rows(); ++p) {
    for (int q = 0; q < m.cols(); ++q) {
      if (q) out << ',';
      out << m(p, q).real() << ',' << m(p, q).imag();
    }
    out << '\n';
  }
}

void write_matrix_json(std::ostream& out, const Operator& m, int k,
                       const std::string& measure_descriptor) {
  nlohmann::json j;
  j["N"] = m.rows();
  j["k"] = k;
  j["measure"] = measure_descriptor;
  auto& entries = j["entries"];
  entries = nlohmann::json::array();
  for (int p = 0; p < m.rows(); ++p) {
    for (int q = 0; q < m.cols(); ++q) {
      entries.push_back({m(p, q).real(), m(p, q).imag()});
    }
  }
  out << j.dump(2) << '\n';
}

}  // namespace bergop
