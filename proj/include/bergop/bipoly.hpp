#pragma once

#include "bergop/bergman.hpp"

namespace bergop {

/// Polynomial in z and conj(z): coeff(a,b) multiplies z^a conj(z)^b.
struct BiPoly {
  Eigen::MatrixXcd coeff;  // square, (D+1) x (D+1)

  BiPoly() : coeff(Eigen::MatrixXcd::Zero(1, 1)) {}
  explicit BiPoly(int degree_bound)
      : coeff(Eigen::MatrixXcd::Zero(degree_bound + 1, degree_bound + 1)) {}

  int bound() const { return int(coeff.rows()) - 1; }
  cplx eval(cplx z) const;
  BiPoly conjugated() const;  // the polynomial conj(p(z))

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator*=(cplx s) { coeff *= s; return *this; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
  friend BiPoly operator*(cplx s, BiPoly p) { p *= s; return p; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { a += cplx(-1.0) * b; return a; }
};

/// Invariant Laplacian (1-|z|^2)^2 d dbar, exact on coefficients.
BiPoly delta_tilde_fn(const BiPoly& p);

/// Exact B_0 of a finite matrix S in the normalized basis:
/// B_0(S)(z) = (1-|z|^2)^2 sum S_pq e_p(z) conj(e_q(z)).
BiPoly berezin0_of_operator(const Operator& s);

/// Exact B_n of a finite matrix, via B_n = (1 - delta_tilde/(n(n+1))) B_{n-1}.
BiPoly berezin_poly(const Operator& s, int n);

}  // namespace bergop
