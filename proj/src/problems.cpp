#include "fint/problems.hpp"

#include <cmath>

namespace fint {

Problem smooth_poisson() {
  Problem p;
  p.name = "smooth";
  p.pde = PdeKind::poisson();
  p.u = [](Vec2 x) {
    double c = std::cos(x.y);
    return std::exp(std::sin(x.x)) * std::sin(2.0 * x.y) + std::log(0.1 + c * c);
  };
  p.f = [](Vec2 x) {
    double e = std::exp(std::sin(x.x)), cx = std::cos(x.x), sx = std::sin(x.x);
    double s2 = std::sin(2.0 * x.y), c2 = std::cos(2.0 * x.y);
    double cy = std::cos(x.y);
    double q = 0.1 + cy * cy;
    return e * (cx * cx - sx) * s2 - 4.0 * e * s2 - 2.0 * c2 / q - s2 * s2 / (q * q);
  };
  return p;
}

Problem radial_mh(double alpha) {
  Problem p;
  p.name = "radial";
  p.pde = PdeKind::modified_helmholtz(alpha);
  p.u = [](Vec2 x) { return std::cos(20.0 * norm(x)); };
  p.f = [alpha](Vec2 x) {
    double r = norm(x), c = std::cos(20.0 * r);
    // -Laplacian of cos(20r) = 400 cos(20r) + 20 sin(20r)/r, which tends to 800 at r = 0
    double lap = r < 1e-8 ? 800.0 : 400.0 * c + 20.0 * std::sin(20.0 * r) / r;
    return alpha * alpha * c + lap;
  };
  return p;
}

Problem harmonic_cubic() {
  Problem p;
  p.name = "cubic";
  p.pde = PdeKind::poisson();
  p.u = [](Vec2 x) { return x.x * x.x * x.x - 3.0 * x.x * x.y * x.y; };
  p.f = [](Vec2) { return 0.0; };
  return p;
}

Problem constant_solution(double c, const PdeKind& pde) {
  Problem p;
  p.name = "constant";
  p.pde = pde;
  p.u = [c](Vec2) { return c; };
  double a2 = pde.is_poisson() ? 0.0 : pde.alpha * pde.alpha;
  p.f = [c, a2](Vec2) { return a2 * c; };
  return p;
}

Problem make_problem(const std::string& name, const PdeKind& pde) {
  if (name == "smooth") {
    if (!pde.is_poisson()) throw ParameterError("problem 'smooth' is a Poisson problem");
    return smooth_poisson();
  }
  if (name == "radial") {
    if (pde.is_poisson()) throw ParameterError("problem 'radial' needs modified_helmholtz");
    return radial_mh(pde.alpha);
  }
  if (name == "cubic") {
    if (!pde.is_poisson()) throw ParameterError("problem 'cubic' is a Poisson problem");
    return harmonic_cubic();
  }
  if (name == "constant") return constant_solution(1.0, pde);
  throw ParameterError("unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() { return {"smooth", "radial", "cubic", "constant"}; }

}  // namespace fint
