#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bergop/berezin.hpp"
#include "bergop/carleson.hpp"
#include "bergop/toeplitz.hpp"

using namespace bergop;
using nlohmann::json;

namespace {

struct RunConfig {
  int n_trunc = 48;
  int quad_m = 96;
  int quad_l = 160;
  unsigned seed = 1;
  double grid_rmax = 0.8;
  std::string out_dir;
};

MeasureSpec measure_from_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return MeasureSpec::load(arg);
  if (arg == "lebesgue") return MeasureSpec::lebesgue();
  throw std::runtime_error("measure: no such file or builtin name: " + arg);
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  const std::string d = dir.empty() ? "." : dir;
  std::filesystem::create_directories(d);
  const auto path = std::filesystem::path(d) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("out: cannot open " + path.string());
  return out;
}

struct IdentityResult {
  std::string id;
  double residual = 0.0;
  double tol = 0.0;
  std::string status;  // pass | fail | precision
};

void push(std::vector<IdentityResult>& rs, std::string id, double residual, double tol) {
  rs.push_back({std::move(id), residual, tol, residual <= tol ? "pass" : "fail"});
}

void push_precision(std::vector<IdentityResult>& rs, std::string id, double tol) {
  rs.push_back({std::move(id), std::numeric_limits<double>::quiet_NaN(), tol,
                "precision"});
}

CoeffVector random_poly(std::mt19937& rng, int deg, int len) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CoeffVector f = CoeffVector::Zero(len);
  for (int j = 0; j <= deg; ++j) f[j] = cplx(u(rng), u(rng));
  return f;
}

std::vector<IdentityResult> run_identity_suites(const RunConfig& cfg) {
  std::vector<IdentityResult> rs;
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = cfg.n_trunc;
  const DiskQuadrature qa = build_disk_quadrature(cfg.quad_m, cfg.quad_l);
  const DiskQuadrature qf = build_disk_quadrature(48, 64);

  {  // mobius involution on sampled points
    double res = 0.0;
    for (int it = 0; it < 100; ++it) {
      const cplx z(0.6 * u(rng), 0.6 * u(rng));
      const cplx w(0.6 * u(rng), 0.6 * u(rng));
      const MobiusMap m(z);
      res = std::max(res, std::abs(mobius_eval(m, mobius_eval(m, w)) - w));
    }
    push(rs, "mobius-involution", res, 1e-12);
  }

  if (n < 32) {
    push_precision(rs, "u-transform-isometry", 1e-8);
    push_precision(rs, "u-matrix-self-adjoint", 1e-8);
  } else {
    double res = 0.0;
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.3), cplx(0.0, 0.6)}) {
      const CoeffVector f = random_poly(rng, n / 8, 2 * n);
      res = std::max(res,
                     std::abs(bergman_norm(u_transform(z, f)) - bergman_norm(f)));
    }
    push(rs, "u-transform-isometry", res, 1e-8);

    const Eigen::MatrixXcd cols = u_columns(cplx(0.35, -0.45), n - 1, 2 * n);
    double sres = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        sres = std::max(sres, std::abs(cols(p, q) - std::conj(cols(q, p))));
      }
    }
    push(rs, "u-matrix-self-adjoint", sres, 1e-8);
  }

  {  // rank_one(f,g) h = <h,g> f
    const int dim = 12;
    const CoeffVector f = random_poly(rng, dim - 1, dim);
    const CoeffVector g = random_poly(rng, dim - 1, dim);
    const CoeffVector h = random_poly(rng, dim - 1, dim);
    Eigen::VectorXcd he(dim), fe(dim);
    for (int j = 0; j < dim; ++j) {
      he[j] = h[j] / std::sqrt(double(j + 1));
      fe[j] = f[j] / std::sqrt(double(j + 1));
    }
    const double res =
        (rank_one(f, g) * he - inner_product(h, g) * fe).cwiseAbs().maxCoeff();
    push(rs, "rank-one-exact", res, 1e-12);
  }

  const MeasureSpec re_z = MeasureSpec::from_density(
      [](cplx z) { return cplx(z.real()); }, 1.0, "Re z");
  const MeasureSpec atoms = MeasureSpec::from_atoms(
      {{cplx(0.3, -0.2), cplx(1.0)}, {cplx(0.1, 0.5), cplx(0.5)}});

  {  // real symbols give self-adjoint matrices
    const Operator t = assemble_toeplitz({re_z, 1, n, qa});
    push(rs, "toeplitz-self-adjoint", (t - t.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
  }
  {  // positive measures give PSD matrices
    const Operator t = assemble_toeplitz({MeasureSpec::power(0.5), 2, n, qa});
    push(rs, "toeplitz-positive", std::max(0.0, -extreme_eigs(t).first), 1e-9);
  }
  {  // complex atomic measures are dominated by their modulus
    std::vector<Atom> c = {{cplx(0.3, 0.2), cplx(0.4, -0.7)},
                           {cplx(-0.5, 0.1), cplx(-0.3, 0.2)}};
    std::vector<Atom> a;
    for (const auto& at : c) a.push_back({at.pos, cplx(std::abs(at.mass))});
    double res = 0.0;
    for (int k = 0; k <= 3; ++k) {
      const double nm =
          operator_norm(assemble_toeplitz({MeasureSpec::from_atoms(c), k, n, qa}));
      const double na =
          operator_norm(assemble_toeplitz({MeasureSpec::from_atoms(a), k, n, qa}));
      res = std::max(res, nm - na);
    }
    push(rs, "toeplitz-modulus-domination", std::max(res, 0.0), 1e-8);
  }
  {  // (k+1)(k+2)[T^(k+1)-T^(k)] = dt [T^(k)+...+T^(0)]
    double res = 0.0;
    for (const MeasureSpec& mu : {atoms, re_z}) {
      std::vector<Operator> t;
      for (int k = 0; k <= 3; ++k) t.push_back(assemble_toeplitz({mu, k, n, qa}));
      Operator partial = Operator::Zero(n, n);
      for (int k = 0; k <= 2; ++k) {
        partial += t[k];
        const Operator lhs = double((k + 1) * (k + 2)) * (t[k + 1] - t[k]);
        const Operator rhs = delta_tilde_op(partial);
        const int m = n - 2;
        res = std::max(res,
                       operator_norm(lhs.topLeftCorner(m, m) - rhs.topLeftCorner(m, m)));
      }
    }
    push(rs, "toeplitz-difference-recurrence", res, 1e-6);
  }

  {  // B_n(U_w Q U_w)(z) = B_n(Q)(phi_w(z))
    const int dim = std::max(64, n);
    Operator q = Operator::Zero(dim, dim);
    q(1, 1) = 1.0;
    const cplx w(0.3, 0.0);
    const Eigen::MatrixXcd uw = u_columns(w, dim - 1, dim);
    const Operator qw = uw * q * uw.adjoint();
    double res = 0.0;
    for (int nb = 0; nb <= 2; ++nb) {
      for (cplx z : {cplx(0.2, -0.1), cplx(-0.1, 0.3)}) {
        res = std::max(res, std::abs(berezin_op(qw, nb, z) -
                                     berezin_op(q, nb, mobius_eval(MobiusMap(w), z))));
      }
    }
    push(rs, "berezin-covariance", res, 1e-8);
  }
  {  // B_n B_0 (mu) = B_0 B_n (mu) on sample points; atomic mu keeps the
     // inner transforms quadrature-free so only one smooth integral remains
    const MeasureSpec& mu = atoms;
    double res = 0.0;
    for (int nb = 1; nb <= 2; ++nb) {
      const MeasureSpec b0mu = MeasureSpec::from_density(
          [&](cplx z) { return berezin_measure(mu, 0, z, qf); }, 1.0, "B_0(mu)", true);
      const MeasureSpec bnmu = MeasureSpec::from_density(
          [&](cplx z) { return berezin_measure(mu, nb, z, qf); }, 1.0, "B_n(mu)", true);
      for (cplx z : {cplx(0.0), cplx(0.35, 0.2), cplx(-0.5, 0.1), cplx(0.1, -0.6)}) {
        res = std::max(res, std::abs(berezin_measure(b0mu, nb, z, qf) -
                                     berezin_measure(bnmu, 0, z, qf)));
      }
    }
    push(rs, "berezin-commutation", res, 1e-7);
  }
  {  // B_n(S) = (1 - dt/(n(n+1))) B_{n-1}(S) as polynomials
    Operator s = Operator::Zero(6, 6);
    s(0, 0) = 0.5;
    s(1, 1) = 1.0;
    s(0, 1) = cplx(0.2, 0.1);
    double res = 0.0;
    for (int nb = 1; nb <= 4; ++nb) {
      const BiPoly prev = berezin_poly(s, nb - 1);
      const BiPoly expect =
          prev - cplx(1.0 / double(nb * (nb + 1))) * delta_tilde_fn(prev);
      const BiPoly got = berezin_poly(s, nb);
      for (cplx z : {cplx(0.3, 0.4), cplx(-0.6, 0.1)}) {
        res = std::max(res, std::abs(got.eval(z) - expect.eval(z)));
      }
    }
    push(rs, "berezin-recurrence", res, 1e-12);
  }
  {  // <dt(f(x)g) h, k> = <dt(h(x)k) f, g> for polynomials
    const int dim = 14;
    double res = 0.0;
    for (int it = 0; it < 10; ++it) {
      const CoeffVector f = random_poly(rng, 10, dim);
      const CoeffVector g = random_poly(rng, 10, dim);
      const CoeffVector h = random_poly(rng, 10, dim);
      const CoeffVector k = random_poly(rng, 10, dim);
      auto norm_coords = [&](const CoeffVector& v) {
        Eigen::VectorXcd e(dim);
        for (int j = 0; j < dim; ++j) e[j] = v[j] / std::sqrt(double(j + 1));
        return e;
      };
      const cplx lhs = norm_coords(k).dot(delta_tilde_op(rank_one(f, g)) *
                                          norm_coords(h));
      const cplx rhs = norm_coords(g).dot(delta_tilde_op(rank_one(h, k)) *
                                          norm_coords(f));
      res = std::max(res, std::abs(lhs - rhs));
    }
    push(rs, "laplacian-rank-one-symmetry", res, 1e-10);
  }
  {  // dt T_a^(k) = T^(k)_{dt a} for bipolynomial symbols
    BiPoly u2(1);
    u2.coeff(1, 1) = 1.0;  // |z|^2
    BiPoly zz2(2);
    zz2.coeff(1, 2) = 1.0;  // z conj(z)^2
    double res = 0.0;
    for (const BiPoly& a : {u2, zz2}) {
      const BiPoly da = delta_tilde_fn(a);
      const MeasureSpec ma = MeasureSpec::from_density(
          [a](cplx z) { return a.eval(z); }, 1.0, "a");
      const MeasureSpec mda = MeasureSpec::from_density(
          [da](cplx z) { return da.eval(z); }, 1.0, "dt a");
      for (int k = 0; k <= 2; ++k) {
        const Operator lhs = delta_tilde_op(assemble_toeplitz({ma, k, n, qa}));
        const Operator rhs = assemble_toeplitz({mda, k, n, qa});
        const int m = n - 2;
        res = std::max(res,
                       operator_norm(lhs.topLeftCorner(m, m) - rhs.topLeftCorner(m, m)));
      }
    }
    push(rs, "laplacian-symbol-commutation", res, 1e-6);
  }
  {  // T_{B_n(T_mu^(k))} = T^(k)_{B_n(mu)}
    const int dim = 24;
    const int big = 64;
    double res = 0.0;
    for (int k = 0; k <= 1; ++k) {
      const Operator tk = assemble_toeplitz({atoms, k, big, qa});
      for (int nb = 1; nb <= 2; ++nb) {
        const MeasureSpec sym = MeasureSpec::from_density(
            [&](cplx z) { return berezin_op(tk, nb, z); }, 1.0, "B_n(T)");
        const MeasureSpec bn = MeasureSpec::from_density(
            [&](cplx z) { return berezin_measure(atoms, nb, z, qf); }, 1.0, "B_n(mu)");
        const Operator lhs = assemble_toeplitz({sym, 0, dim, qf});
        const Operator rhs = assemble_toeplitz({bn, k, dim, qf});
        res = std::max(res, operator_norm(lhs - rhs));
      }
    }
    push(rs, "berezin-transform-identity", res, 1e-6);
  }
  {  // integral symmetry between |<U_w e_j, h>|^2 |f|^2 and its swap
    double res = 0.0;
    const int dim = 40;
    for (int j = 0; j <= 2; ++j) {
      const CoeffVector ej = basis_e(j, dim);
      const CoeffVector f = random_poly(rng, 4, dim);
      const CoeffVector h = random_poly(rng, 4, dim);
      auto side = [&](const CoeffVector& p, const CoeffVector& q) {
        return integrate_area(qa, [&](cplx w) -> cplx {
          const CoeffVector uw = u_transform(w, ej);
          cplx qval = 0.0, pw = 1.0;
          for (int m = 0; m < dim; ++m) {
            qval += q[m] * pw;
            pw *= w;
          }
          return cplx(std::norm(inner_product(uw, p)) * std::norm(qval));
        });
      };
      res = std::max(res, std::abs(side(h, f) - side(f, h)));
    }
    push(rs, "berezin-integral-symmetry", res, 1e-7);
  }
  {  // sup |B_n(Q)| <= (n+1) 2^n sigma_max(Q)
    const int dim = 64;
    Operator q = Operator::Zero(dim, dim);
    for (int p = 0; p < 8; ++p) {
      for (int s = 0; s < 8; ++s) q(p, s) = cplx(u(rng), u(rng));
    }
    const double nrm = operator_norm(q);
    double res = 0.0;
    for (int nb = 0; nb <= 4; ++nb) {
      const double bound = double(nb + 1) * std::pow(2.0, nb) * nrm;
      for (cplx z : hyperbolic_grid(6, 8, 0.6)) {
        res = std::max(res, std::abs(berezin_op(q, nb, z)) - bound);
      }
    }
    push(rs, "berezin-norm-bound", std::max(res, 0.0), 1e-9);
  }
  return rs;
}

int cmd_verify(const RunConfig& cfg) {
  const auto rs = run_identity_suites(cfg);
  json j;
  j["config"] = {{"n_trunc", cfg.n_trunc},
                 {"quad_m", cfg.quad_m},
                 {"quad_l", cfg.quad_l},
                 {"seed", cfg.seed}};
  bool all_pass = true;
  j["identities"] = json::array();
  for (const auto& r : rs) {
    json e = {{"id", r.id}, {"tolerance", r.tol}, {"status", r.status}};
    if (std::isfinite(r.residual)) e["residual"] = r.residual;
    j["identities"].push_back(e);
    if (r.status != "pass") all_pass = false;
  }
  j["all_pass"] = all_pass;
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!cfg.out_dir.empty()) open_out(cfg.out_dir, "identities.json") << text;
  return all_pass ? 0 : 1;
}

int cmd_assemble(const RunConfig& cfg, const std::string& measure_arg, int k,
                 const std::string& format) {
  const MeasureSpec mu = measure_from_arg(measure_arg);
  const DiskQuadrature quad = build_disk_quadrature(200, 256);
  const Operator t = assemble_toeplitz({mu, k, cfg.n_trunc, quad});
  if (format == "json") {
    auto out = open_out(cfg.out_dir, "matrix.json");
    write_matrix_json(out, t, k, mu.descriptor);
  } else {
    auto out = open_out(cfg.out_dir, "matrix.csv");
    write_matrix_csv(out, t);
  }
  return 0;
}

int cmd_berezin_field(const RunConfig& cfg, const std::string& op_arg,
                      const std::string& measure_arg, int n_berezin) {
  const std::vector<cplx> grid = hyperbolic_grid(20, 32, cfg.grid_rmax);
  std::vector<cplx> values(grid.size());
  if (!measure_arg.empty()) {
    const MeasureSpec mu = measure_from_arg(measure_arg);
    const DiskQuadrature quad = build_disk_quadrature(96, 128);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      values[i] = berezin_measure(mu, n_berezin, grid[i], quad);
    }
  } else {
    if (op_arg.size() < 2 || op_arg[0] != 'E') {
      throw std::runtime_error("op: expected E<k>, got: " + op_arg);
    }
    const int k = std::stoi(op_arg.substr(1));
    const int dim = std::max(cfg.n_trunc, 2 * n_berezin + 2);
    Operator q = Operator::Zero(dim, dim);
    if (k < 0 || k >= dim) throw std::runtime_error("op: E index out of range");
    q(k, k) = 1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      values[i] = berezin_op(q, n_berezin, grid[i]);
    }
  }
  auto out = open_out(cfg.out_dir, "field.csv");
  write_field_csv(out, grid, values);
  return 0;
}

int cmd_carleson_report(const RunConfig& cfg, const std::string& measure_arg) {
  const MeasureSpec mu = measure_from_arg(measure_arg);
  const DiskQuadrature quad = build_disk_quadrature(128, 160);
  ClassifyConfig ccfg;
  ccfg.n_trunc = cfg.n_trunc;
  ccfg.grid_rmax = cfg.grid_rmax;
  const CarlesonReport rep = carleson_classify(quad, mu, ccfg);
  auto out = open_out(cfg.out_dir, "carleson.json");
  write_report_json(out, rep);
  std::ostringstream echo;
  write_report_json(echo, rep);
  std::cout << echo.str();
  return 0;
}

double banded_norm(int j, int l, int dim) {
  // || dt^l E_j || computed exactly on the diagonal band
  Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
  d[j] = 1.0;
  for (int i = 0; i < l; ++i) d = delta_tilde_diag(d);
  return d.cwiseAbs().maxCoeff();
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int m = int(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    const double x = std::log(xs[i]);
    const double y = std::log(ys[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

int cmd_counterexample(const RunConfig& cfg, int k, int n_berezin) {
  json j;
  j["k"] = k;
  j["n_berezin"] = n_berezin;

  // growth law: || dt^l E_j || ~ (j+1)^{2l}
  j["slopes"] = json::array();
  const std::vector<int> j_fit = {32, 64, 128, 256};
  for (int l = 1; l <= 3; ++l) {
    std::vector<double> xs, ys;
    for (int jj : j_fit) {
      xs.push_back(double(jj + 1));
      ys.push_back(banded_norm(jj, l, 512 + l + 1));
    }
    j["slopes"].push_back({{"l", l}, {"slope", loglog_slope(xs, ys)}});
  }

  // a_j = (j+1)^{-2k} B_n(E_j): the ratio ||dt^k T_{a_j}|| / sum_{l<k} ||dt^l T_{a_j}||
  // grows without bound even though each a_j is a fixed multiple of a unit symbol
  j["table"] = json::array();
  const DiskQuadrature quad = build_disk_quadrature(200, 256);
  const std::vector<int> j_list = {8, 16, 32, 64};
  std::vector<double> ratios;
  for (int jj : j_list) {
    const int dim = jj + 32;
    if (jj + k + 2 > dim) throw std::runtime_error("n-trunc: truncation too small");
    const BiPoly bn = berezin_poly(
        [&] {
          Operator e = Operator::Zero(jj + 2, jj + 2);
          e(jj, jj) = 1.0;
          return e;
        }(),
        n_berezin);
    const double scale = std::pow(double(jj + 1), -2.0 * k);
    // B_n(E_j) is radial: carry the diagonal coefficients as a profile in |z|^2
    std::vector<double> prof(bn.bound() + 1);
    for (int a = 0; a <= bn.bound(); ++a) prof[a] = (scale * bn.coeff(a, a)).real();
    const MeasureSpec aj = MeasureSpec::from_radial(
        [prof](double x) {
          double acc = 0.0;
          for (int a = int(prof.size()) - 1; a >= 0; --a) acc = acc * x + prof[a];
          return acc;
        },
        1.0, "a_j");
    const Operator t = assemble_toeplitz({aj, 0, dim, quad});
    Eigen::VectorXd d = t.diagonal().real();
    double denom = d.cwiseAbs().maxCoeff();  // sum over l < k of || dt^l T ||
    Eigen::VectorXd dl = d;
    for (int l = 1; l < k; ++l) {
      dl = delta_tilde_diag(dl);
      denom += dl.cwiseAbs().maxCoeff();
    }
    Eigen::VectorXd dk = d;
    for (int l = 0; l < k; ++l) dk = delta_tilde_diag(dk);
    const double num = dk.cwiseAbs().maxCoeff();

    // distance to E_j, observable proxy for the "n large enough" proviso
    Eigen::VectorXd dist = d / scale;
    dist[jj] -= 1.0;
    j["table"].push_back({{"j", jj},
                          {"t_norm", d.cwiseAbs().maxCoeff()},
                          {"dtk_norm", num},
                          {"ratio", num / denom},
                          {"bn_dist", dist.cwiseAbs().maxCoeff()}});
    ratios.push_back(num / denom);
  }
  j["ratio_growth"] = ratios.back() / ratios.front();

  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!cfg.out_dir.empty()) open_out(cfg.out_dir, "counterexample.json") << text;
  return 0;
}

int cmd_approximation(const RunConfig& cfg, const std::string& measure_arg, int n_max) {
  json j;
  const DiskQuadrature qf = build_disk_quadrature(64, 96);

  // sup |B_n(a) - a| for a = |z|, non-increasing in n
  const MeasureSpec abs_z = MeasureSpec::from_density(
      [](cplx z) { return cplx(std::abs(z)); }, 1.0, "|z|", true);
  const std::vector<cplx> grid = hyperbolic_grid(8, 8, 0.7);
  j["symbol_sweep"] = json::array();
  for (int n = 1; n <= n_max; ++n) {
    double sup = 0.0;
    for (cplx z : grid) {
      sup = std::max(sup, std::abs(berezin_symbol(abs_z, n, z, qf) - std::abs(z)));
    }
    j["symbol_sweep"].push_back({{"n", n}, {"sup_error", sup}});
  }

  // || T_{B_n(T_mu^(k))} - T_mu^(k) ||, computed through the transform identity
  // T_{B_n(T_mu^(k))} = T^(k)_{B_n(mu)}
  const MeasureSpec mu = measure_arg.empty()
                             ? MeasureSpec::from_atoms({{cplx(0.3, -0.2), cplx(1.0)},
                                                        {cplx(0.1, 0.5), cplx(0.5)}})
                             : measure_from_arg(measure_arg);
  const DiskQuadrature qa = build_disk_quadrature(96, 128);
  const int dim = cfg.n_trunc;
  j["operator_sweep"] = json::array();
  for (int k = 0; k <= 2; ++k) {
    const Operator tk = assemble_toeplitz({mu, k, dim, qa});
    for (int n = 1; n <= n_max; ++n) {
      const MeasureSpec bn = MeasureSpec::from_density(
          [&](cplx z) { return berezin_measure(mu, n, z, qa); }, 1.0, "B_n(mu)");
      const double err = operator_norm(assemble_toeplitz({bn, k, dim, qa}) - tk);
      j["operator_sweep"].push_back({{"k", k}, {"n", n}, {"error", err}});
    }
  }

  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!cfg.out_dir.empty()) open_out(cfg.out_dir, "approximation.json") << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator calculus on the Bergman space of the unit disk"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--n-trunc", cfg.n_trunc, "matrix truncation order")
      ->check(CLI::Range(16, 4096));
  app.add_option("--seed", cfg.seed, "seed for randomized polynomial corpora");
  app.add_option("--grid-rmax", cfg.grid_rmax, "outer radius of evaluation grids")
      ->check(CLI::Range(0.1, 0.999));
  app.add_option("--out", cfg.out_dir, "output directory");

  auto* verify = app.add_subcommand("verify-identities", "run the identity suites");

  int k = 0;
  std::string measure_arg, format = "csv", op_arg = "E0";
  int n_berezin = 2;
  auto* assemble = app.add_subcommand("assemble", "assemble a Toeplitz matrix");
  assemble->add_option("--measure", measure_arg, "measure file or builtin name")
      ->required();
  assemble->add_option("--k", k, "generalization order");
  assemble->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* field = app.add_subcommand("berezin-field", "evaluate a Berezin field");
  field->add_option("--op", op_arg, "diagonal operator E<k>");
  field->add_option("--measure", measure_arg, "measure file or builtin name");
  field->add_option("--n-berezin", n_berezin, "transform order");

  auto* report = app.add_subcommand("carleson-report", "classify a measure");
  report->add_option("--measure", measure_arg, "measure file or builtin name")
      ->required();

  auto* cex = app.add_subcommand("counterexample5", "norm growth experiment");
  cex->add_option("--k", k, "generalization order")->check(CLI::Range(1, 4));
  cex->add_option("--n-berezin", n_berezin, "transform order for the symbol");

  int n_max = 20;
  auto* approx = app.add_subcommand("approximation", "Berezin convergence sweeps");
  approx->add_option("--measure", measure_arg, "measure file or builtin name");
  approx->add_option("--n-max", n_max, "sweep upper limit")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (assemble->parsed()) return cmd_assemble(cfg, measure_arg, k, format);
    if (field->parsed()) return cmd_berezin_field(cfg, op_arg, measure_arg, n_berezin);
    if (report->parsed()) return cmd_carleson_report(cfg, measure_arg);
    if (cex->parsed()) return cmd_counterexample(cfg, k == 0 ? 1 : k, n_berezin);
    if (approx->parsed()) return cmd_approximation(cfg, measure_arg, n_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
