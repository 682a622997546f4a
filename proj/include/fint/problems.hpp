#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fint/pde.hpp"
#include "fint/types.hpp"

namespace fint {

using ScalarFn = std::function<double(Vec2)>;

// Manufactured problem: L u = f in the domain, u = g on the boundary (g is u itself).
struct Problem {
  std::string name;
  PdeKind pde;
  ScalarFn u, f;
};

// u = e^{sin x} sin 2y + log(0.1 + cos^2 y), Poisson.
Problem smooth_poisson();
// u = cos(20 |x|), modified Helmholtz with the given alpha.
Problem radial_mh(double alpha);
// u = Re (x + iy)^3, harmonic.
Problem harmonic_cubic();
// u = c.
Problem constant_solution(double c, const PdeKind& pde);

Problem make_problem(const std::string& name, const PdeKind& pde);
std::vector<std::string> problem_names();

}  // namespace fint
