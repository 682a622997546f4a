#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "fint/curve.hpp"
#include "fint/solver.hpp"

namespace testing_support {

using fint::Vec2;

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Points X(s) + r n(s) with r drawn from [r0, r1], via the analytic star.
inline std::vector<Vec2> star_points(int n, double r0, double r1, unsigned seed = 7) {
  auto X = fint::BoundaryCurve::from_function(fint::shapes::star(), 512);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> us(0.0, 2.0 * M_PI), ur(r0, r1);
  std::vector<Vec2> p(n);
  for (auto& q : p) {
    auto c = X.eval(us(rng));
    q = c.X + ur(rng) * c.normal();
  }
  return p;
}

// One shared coarse star context per test binary; setup dominates test time.
inline const fint::SolverContext& star_context(double h = 0.025) {
  static double cached_h = 0.0;
  static fint::SolverContext ctx;
  if (cached_h != h) {
    auto p = fint::select_parameters(fint::shapes::star(), h, fint::PdeKind::poisson());
    ctx = fint::setup(fint::shapes::star(), p, fint::PdeKind::poisson());
    cached_h = h;
  }
  return ctx;
}

}  // namespace testing_support
