#include "doctest.h"

#include <random>

#include "bergop/bergman.hpp"
#include "bergop/toeplitz.hpp"

using namespace bergop;

TEST_CASE("mobius_eval interchanges 0 and z") {
  MobiusMap m(cplx(0.5, 0.0));
  CHECK(std::abs(mobius_eval(m, 0.0) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(mobius_eval(m, cplx(0.5))) < 1e-15);

  MobiusMap m2(cplx(0.3, 0.4));
  const cplx w = mobius_eval(m2, cplx(0.2));
  CHECK(std::abs(mobius_eval(m2, w) - cplx(0.2)) < 1e-14);
}

TEST_CASE("mobius_eval is an involution on sampled points") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int it = 0; it < 200; ++it) {
    const cplx z(u(rng) * 0.7, u(rng) * 0.7);
    const cplx w(u(rng), u(rng));
    if (std::abs(w) > 0.9) continue;
    MobiusMap m(z);
    CHECK(std::abs(mobius_eval(m, mobius_eval(m, w)) - w) < 1e-12);
  }
}

TEST_CASE("mobius_series closed forms") {
  auto [phi0, phid0] = mobius_series(MobiusMap(cplx(0.0)), 8);
  CHECK(std::abs(phi0[0]) < 1e-16);
  CHECK(std::abs(phi0[1] + 1.0) < 1e-16);
  CHECK(std::abs(phi0[2]) < 1e-16);
  CHECK(std::abs(phid0[0] + 1.0) < 1e-16);
  CHECK(std::abs(phid0[1]) < 1e-16);

  auto [phi, phid] = mobius_series(MobiusMap(cplx(0.5)), 8);
  CHECK(std::abs(phi[0] - cplx(0.5)) < 1e-16);
  CHECK(std::abs(phi[1] + 0.75) < 1e-16);
}

TEST_CASE("mobius_series evaluates to mobius_eval") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int it = 0; it < 20; ++it) {
    const cplx z(u(rng) * 0.8, u(rng) * 0.8);
    const int n = 64;
    auto [phi, phid] = mobius_series(MobiusMap(z), n);
    const cplx w(0.3, 0.0);
    cplx acc = 0.0, pw = 1.0;
    for (int j = 0; j < n; ++j) {
      acc += phi[j] * pw;
      pw *= w;
    }
    // geometric tail of the series at |w| = 0.3
    const double tail = std::pow(0.3, n) / (1.0 - 0.3);
    CHECK(std::abs(acc - mobius_eval(MobiusMap(z), w)) < tail + 1e-13);
  }
}

TEST_CASE("inner product in the monomial basis") {
  const int n = 8;
  CHECK(std::abs(inner_product(basis_e(3, n), basis_e(3, n)) - 1.0) < 1e-15);
  CHECK(std::abs(inner_product(basis_e(2, n), basis_e(5, n))) < 1e-15);

  CoeffVector w2 = CoeffVector::Zero(n);
  w2[2] = 1.0;
  CHECK(std::abs(inner_product(w2, w2) - 1.0 / 3.0) < 1e-15);

  CHECK_THROWS_AS(inner_product(basis_e(0, 4), basis_e(0, 5)), std::invalid_argument);
}

TEST_CASE("u_transform at z = 0 flips signs") {
  for (int k = 0; k < 6; ++k) {
    const CoeffVector f = basis_e(k, 16);
    const CoeffVector g = u_transform(0.0, f);
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    CHECK((g - sign * f).norm() < 1e-15);
  }
}

TEST_CASE("u_transform of the constant is phi'") {
  const cplx z(0.4, -0.3);
  const int n = 32;
  CoeffVector one = CoeffVector::Zero(n);
  one[0] = 1.0;
  const CoeffVector g = u_transform(z, one);
  const double s = 1.0 - std::norm(z);
  cplx zb = 1.0;
  for (int m = 0; m < n; ++m) {
    CHECK(std::abs(g[m] + s * double(m + 1) * zb) < 1e-14);
    zb *= std::conj(z);
  }
}

// The image U_z e_k concentrates coefficient mass near index
// k (1+|z|)/(1-|z|), so tail tolerances only hold when that index sits
// well inside the truncation.  Inputs below respect that envelope.
TEST_CASE("u_transform is an involution up to truncation tail") {
  const int n = 128;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (cplx z : {cplx(0.5, 0.0), cplx(-0.2, 0.4), cplx(0.3, -0.3)}) {
    CoeffVector f = CoeffVector::Zero(n);
    for (int j = 0; j <= 8; ++j) f[j] = cplx(u(rng), u(rng));
    const CoeffVector g = u_transform(z, u_transform(z, f));
    for (int j = 0; j < n / 2; ++j) {
      CHECK(std::abs(g[j] - f[j]) < 1e-8);
    }
  }
}

TEST_CASE("u_transform preserves the norm up to tail") {
  const int n = 128;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.3), cplx(0.0, 0.6)}) {
    CoeffVector f = CoeffVector::Zero(n);
    for (int j = 0; j <= n / 8; ++j) f[j] = cplx(u(rng), u(rng));
    CHECK(std::abs(bergman_norm(u_transform(z, f)) - bergman_norm(f)) < 1e-8);
  }
}

TEST_CASE("truncation tail decreases monotonically in N") {
  const cplx z(0.8, 0.0);
  const int k = 16;
  double prev = std::numeric_limits<double>::infinity();
  for (int n : {96, 128, 192, 256}) {
    const double err = std::abs(bergman_norm(u_transform(z, basis_e(k, n))) - 1.0);
    CHECK(err <= prev + 1e-15);
    prev = err;
  }
  CHECK(prev < 1e-12);
}

TEST_CASE("U_z matrix is self-adjoint on its leading block") {
  const int n = 96;
  const cplx z(0.35, -0.45);
  const Eigen::MatrixXcd cols = u_columns(z, n / 2 - 1, n);
  for (int p = 0; p < n / 2; ++p) {
    for (int q = 0; q < n / 2; ++q) {
      CHECK(std::abs(cols(p, q) - std::conj(cols(q, p))) < 1e-9);
    }
  }
}

TEST_CASE("rank_one basics") {
  const int n = 8;
  for (int k = 0; k < n; ++k) {
    const Operator ek = rank_one(basis_e(k, n), basis_e(k, n));
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const double expect = (p == k && q == k) ? 1.0 : 0.0;
        CHECK(std::abs(ek(p, q) - expect) < 1e-15);
      }
    }
  }
  const Operator m = rank_one(basis_e(0, n), basis_e(1, n));
  CHECK(std::abs(m(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(m.cwiseAbs().sum() - 1.0) < 1e-15);
}

TEST_CASE("rank_one applied to h gives <h,g> f exactly") {
  const int n = 12;
  std::mt19937 rng(5150);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CoeffVector f(n), g(n), h(n);
  for (int j = 0; j < n; ++j) {
    f[j] = cplx(u(rng), u(rng));
    g[j] = cplx(u(rng), u(rng));
    h[j] = cplx(u(rng), u(rng));
  }
  const Operator m = rank_one(f, g);
  // coordinates of h and f in the normalized basis
  Eigen::VectorXcd he(n), fe(n);
  for (int j = 0; j < n; ++j) {
    he[j] = h[j] / std::sqrt(double(j + 1));
    fe[j] = f[j] / std::sqrt(double(j + 1));
  }
  const Eigen::VectorXcd lhs = m * he;
  const Eigen::VectorXcd rhs = inner_product(h, g) * fe;
  CHECK((lhs - rhs).norm() < 1e-13);
}

TEST_CASE("rank_one operator norm is the product of the norms") {
  const int n = 10;
  const CoeffVector f = 2.0 * basis_e(0, n);
  const CoeffVector g = 3.0 * basis_e(1, n);
  CHECK(std::abs(operator_norm(rank_one(f, g)) - 6.0) < 1e-12);

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CoeffVector a(n), b(n);
  for (int j = 0; j < n; ++j) {
    a[j] = cplx(u(rng), u(rng));
    b[j] = cplx(u(rng), u(rng));
  }
  CHECK(std::abs(operator_norm(rank_one(a, b)) - bergman_norm(a) * bergman_norm(b)) <
        1e-12);
}

TEST_CASE("reproducing kernel") {
  const CoeffVector k0 = reproducing_kernel(0.0, 6);
  CHECK(std::abs(k0[0] - 1.0) < 1e-16);
  CHECK(k0.tail(5).norm() < 1e-16);

  const CoeffVector k6 = reproducing_kernel(0.6, 128);
  CHECK(std::abs(bergman_norm(k6) - 1.5625) < 1e-8);

  CoeffVector w3 = CoeffVector::Zero(16);
  w3[3] = 1.0;
  CHECK(std::abs(inner_product(w3, reproducing_kernel(0.5, 16)) - 0.125) < 1e-15);
}
