#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bergop/quadrature.hpp"

namespace bergop {

struct Atom {
  cplx pos;   // |pos| <= 0.999
  cplx mass;
};

/// Finite measure on the disk: either a bounded density against normalized
/// area measure, or a finite list of interior atoms.  Radial densities carry
/// their profile in x = |z|^2 so radial assembly can short-circuit.
class MeasureSpec {
 public:
  enum class Kind { density, atomic };

  Kind kind = Kind::density;
  std::function<cplx(cplx)> density;
  std::optional<std::function<double(double)>> radial_profile;  // rho(|z|^2)
  std::vector<Atom> atoms;
  bool positive = false;
  double sup_abs = 0.0;  // sup |density|; 0 means unknown
  std::string descriptor;

  bool is_radial() const { return radial_profile.has_value(); }

  static MeasureSpec lebesgue();
  static MeasureSpec constant(double c);
  static MeasureSpec power(double beta);        // (1-|z|^2)^beta, beta > -1
  static MeasureSpec monomial(int m);           // |z|^{2m}
  static MeasureSpec indicator(double r);       // characteristic of |z| <= r
  static MeasureSpec from_density(std::function<cplx(cplx)> a, double sup_abs,
                                  std::string descriptor, bool positive = false);
  static MeasureSpec from_radial(std::function<double(double)> rho, double sup_abs,
                                 std::string descriptor, bool positive = false);
  static MeasureSpec from_atoms(std::vector<Atom> atoms, std::string descriptor = "atoms");

  /// Structured-text loader.  Lines:
  ///   density constant <c> | density power <beta> | density monomial <m>
  ///   | density indicator <r> | atoms  followed by "re im mass_re mass_im" rows.
  static MeasureSpec load(const std::string& path);
};

/// Integral of f against the measure (density: quadrature of f*a; atoms:
/// weighted point evaluation).  Deterministic summation order.
cplx integrate(const DiskQuadrature& q, const MeasureSpec& mu,
               const std::function<cplx(cplx)>& f);

}  // namespace bergop
