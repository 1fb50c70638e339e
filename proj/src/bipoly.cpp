#include "bergop/bipoly.hpp"

#include <cmath>

namespace bergop {

cplx BiPoly::eval(cplx z) const {
  const cplx zb = std::conj(z);
  const int d = bound();
  cplx acc = 0.0;
  for (int a = d; a >= 0; --a) {
    cplx row = 0.0;
    for (int b = d; b >= 0; --b) {
      row = row * zb + coeff(a, b);
    }
    acc = acc * z + row;
  }
  return acc;
}

BiPoly BiPoly::conjugated() const {
  BiPoly r(bound());
  r.coeff = coeff.adjoint();
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.bound() > bound()) {
    Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(other.bound() + 1, other.bound() + 1);
    grown.topLeftCorner(coeff.rows(), coeff.cols()) = coeff;
    coeff.swap(grown);
  }
  coeff.topLeftCorner(other.coeff.rows(), other.coeff.cols()) += other.coeff;
  return *this;
}

BiPoly delta_tilde_fn(const BiPoly& p) {
  const int d = p.bound();
  // q = d dbar p
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(d + 1, d + 1);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      q(a, b) = double(a + 1) * double(b + 1) * p.coeff(a + 1, b + 1);
    }
  }
  // multiply by (1 - z conj z)^2 = 1 - 2 u + u^2
  BiPoly r(d + 2);
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; b <= d; ++b) {
      const cplx v = q(a, b);
      if (v == cplx(0.0)) continue;
      r.coeff(a, b) += v;
      r.coeff(a + 1, b + 1) -= 2.0 * v;
      r.coeff(a + 2, b + 2) += v;
    }
  }
  return r;
}

BiPoly berezin0_of_operator(const Operator& s) {
  const int n = int(s.rows());
  BiPoly base(n - 1 >= 0 ? n - 1 : 0);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (s(p, q) != cplx(0.0)) {
        base.coeff(p, q) = s(p, q) * std::sqrt(double(p + 1) * double(q + 1));
      }
    }
  }
  BiPoly r(base.bound() + 2);
  for (int a = 0; a <= base.bound(); ++a) {
    for (int b = 0; b <= base.bound(); ++b) {
      const cplx v = base.coeff(a, b);
      if (v == cplx(0.0)) continue;
      r.coeff(a, b) += v;
      r.coeff(a + 1, b + 1) -= 2.0 * v;
      r.coeff(a + 2, b + 2) += v;
    }
  }
  return r;
}

BiPoly berezin_poly(const Operator& s, int n) {
  BiPoly b = berezin0_of_operator(s);
  for (int m = 1; m <= n; ++m) {
    b = b - (cplx(1.0 / (double(m) * double(m + 1))) * delta_tilde_fn(b));
  }
  return b;
}

}  // namespace bergop
