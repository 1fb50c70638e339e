#include "bergop/measure.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bergop {

MeasureSpec MeasureSpec::constant(double c) {
  MeasureSpec m;
  m.kind = Kind::density;
  m.density = [c](cplx) { return cplx(c); };
  m.radial_profile = [c](double) { return c; };
  m.positive = c >= 0.0;
  m.sup_abs = std::abs(c);
  m.descriptor = "constant " + std::to_string(c);
  return m;
}

MeasureSpec MeasureSpec::lebesgue() {
  MeasureSpec m = constant(1.0);
  m.descriptor = "lebesgue";
  return m;
}

MeasureSpec MeasureSpec::power(double beta) {
  if (beta <= -1.0) throw std::invalid_argument("power measure needs beta > -1");
  MeasureSpec m;
  m.kind = Kind::density;
  m.density = [beta](cplx z) { return cplx(std::pow(1.0 - std::norm(z), beta)); };
  m.radial_profile = [beta](double x) { return std::pow(1.0 - x, beta); };
  m.positive = true;
  m.sup_abs = beta >= 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  m.descriptor = "power " + std::to_string(beta);
  return m;
}

MeasureSpec MeasureSpec::monomial(int mdeg) {
  if (mdeg < 0) throw std::invalid_argument("monomial measure needs m >= 0");
  MeasureSpec m;
  m.kind = Kind::density;
  m.density = [mdeg](cplx z) { return cplx(std::pow(std::norm(z), mdeg)); };
  m.radial_profile = [mdeg](double x) { return std::pow(x, mdeg); };
  m.positive = true;
  m.sup_abs = 1.0;
  m.descriptor = "monomial " + std::to_string(mdeg);
  return m;
}

MeasureSpec MeasureSpec::indicator(double r) {
  if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("indicator needs 0 < r < 1");
  const double x0 = r * r;
  MeasureSpec m;
  m.kind = Kind::density;
  m.density = [x0](cplx z) { return cplx(std::norm(z) <= x0 ? 1.0 : 0.0); };
  m.radial_profile = [x0](double x) { return x <= x0 ? 1.0 : 0.0; };
  m.positive = true;
  m.sup_abs = 1.0;
  m.descriptor = "indicator " + std::to_string(r);
  return m;
}

MeasureSpec MeasureSpec::from_density(std::function<cplx(cplx)> a, double sup_abs,
                                      std::string descriptor, bool positive) {
  MeasureSpec m;
  m.kind = Kind::density;
  m.density = std::move(a);
  m.sup_abs = sup_abs;
  m.positive = positive;
  m.descriptor = std::move(descriptor);
  return m;
}

MeasureSpec MeasureSpec::from_radial(std::function<double(double)> rho, double sup_abs,
                                     std::string descriptor, bool positive) {
  MeasureSpec m;
  m.kind = Kind::density;
  m.density = [rho](cplx z) { return cplx(rho(std::norm(z))); };
  m.radial_profile = std::move(rho);
  m.sup_abs = sup_abs;
  m.positive = positive;
  m.descriptor = std::move(descriptor);
  return m;
}

MeasureSpec MeasureSpec::from_atoms(std::vector<Atom> atoms, std::string descriptor) {
  MeasureSpec m;
  m.kind = Kind::atomic;
  bool pos = true;
  for (const auto& a : atoms) {
    if (std::abs(a.pos) > 0.999) {
      throw std::domain_error("atom outside |v| <= 0.999");
    }
    if (a.mass.imag() != 0.0 || a.mass.real() < 0.0) pos = false;
  }
  m.atoms = std::move(atoms);
  m.positive = pos;
  m.descriptor = std::move(descriptor);
  return m;
}

MeasureSpec MeasureSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open measure file: " + path);
  std::string line;
  std::vector<Atom> atoms;
  bool in_atoms = false;
  while (std::getline(in, line)) {
    const auto h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (in_atoms) {
      double re = 0, im = 0, mre = 0, mim = 0;
      std::istringstream row(line);
      if (!(row >> re >> im >> mre >> mim)) {
        throw std::runtime_error("bad atom row in " + path + ": '" + line + "'");
      }
      atoms.push_back({cplx(re, im), cplx(mre, mim)});
      continue;
    }
    if (tok == "atoms") {
      in_atoms = true;
    } else if (tok == "density") {
      std::string name;
      if (!(ls >> name)) throw std::runtime_error("measure file: missing density name");
      if (name == "constant") {
        double c;
        if (!(ls >> c)) throw std::runtime_error("measure file: constant needs a value");
        return constant(c);
      } else if (name == "power") {
        double beta;
        if (!(ls >> beta)) throw std::runtime_error("measure file: power needs beta");
        return power(beta);
      } else if (name == "monomial") {
        int m;
        if (!(ls >> m)) throw std::runtime_error("measure file: monomial needs m");
        return monomial(m);
      } else if (name == "indicator") {
        double r;
        if (!(ls >> r)) throw std::runtime_error("measure file: indicator needs r");
        return indicator(r);
      } else {
        throw std::runtime_error("measure file: unknown density family '" + name + "'");
      }
    } else {
      throw std::runtime_error("measure file: unknown tag '" + tok + "'");
    }
  }
  if (!in_atoms || atoms.empty()) {
    throw std::runtime_error("measure file " + path + " defines no measure");
  }
  return from_atoms(std::move(atoms), "file:" + path);
}

cplx integrate(const DiskQuadrature& q, const MeasureSpec& mu,
               const std::function<cplx(cplx)>& f) {
  if (mu.kind == MeasureSpec::Kind::atomic) {
    cplx acc = 0.0;
    for (const auto& a : mu.atoms) {
      const cplx v = f(a.pos);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::runtime_error("integrate: non-finite integrand at atom");
      }
      acc += a.mass * v;
    }
    return acc;
  }
  return integrate_area(q, [&](cplx z) { return f(z) * mu.density(z); });
}

}  // namespace bergop
