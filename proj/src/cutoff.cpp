#include "fint/cutoff.hpp"

#include <algorithm>
#include <cmath>

namespace fint {

double eta_at(double r, double R, Side side, const StepFunction& step) {
  return step.H(side == Side::Interior ? -r / R : r / R);
}

std::vector<double> eval_eta(const GridClassification& cls, const AnnularGrid& annulus, const StepFunction& step) {
  std::vector<double> eta(cls.label.size(), 0.0);
  for (size_t i : cls.faithful) eta[i] = 1.0;
  for (size_t q = 0; q < cls.annulus.size(); ++q)
    eta[cls.annulus[q]] = eta_at(cls.coords[q].r, annulus.R, annulus.side, step);
  return eta;
}

std::vector<double> eval_eta_annular(const AnnularGrid& annulus, const StepFunction& step) {
  std::vector<double> eta(annulus.x.size());
  for (int j = 0; j < annulus.N(); ++j)
    for (int k = 0; k < annulus.M; ++k)
      eta[static_cast<size_t>(j) * annulus.M + k] = eta_at(annulus.r[k], annulus.R, annulus.side, step);
  return eta;
}

std::vector<double> build_bump_xi(const GridGeom& grid, Vec2 center, double radius, const StepFunction& step,
                                  const GridClassification* cls) {
  std::vector<double> xi(grid.size(), 0.0);
  const double lx = grid.lx(), ly = grid.ly();
  double sum = 0.0;
  for (size_t idx = 0; idx < grid.size(); ++idx) {
    Vec2 p = grid.node(idx);
    double dx = p.x - center.x, dy = p.y - center.y;
    dx -= lx * std::round(dx / lx);
    dy -= ly * std::round(dy / ly);
    double rho = std::hypot(dx, dy);
    if (rho < radius) {
      xi[idx] = step.bump(rho / radius);
      sum += xi[idx];
    }
  }
  if (!(sum > 0.0)) throw ParameterError("compatibility bump has no support on the grid");
  const double scale = 1.0 / (sum * grid.h * grid.h);
  for (double& v : xi) v *= scale;
  if (cls) {
    for (size_t idx = 0; idx < xi.size(); ++idx)
      if (xi[idx] != 0.0 && cls->label[idx] != Region::Exterior)
        throw ParameterError("compatibility bump overlaps the domain");
  }
  return xi;
}

BumpPlacement default_bump_placement(double R, int M, double h) {
  BumpPlacement p;
  p.radius = 2.0 * R;
  p.offset = std::max(M * h, p.radius / std::sqrt(2.0));
  return p;
}

Vec2 bump_center(const BoundaryCurve& curve, const BumpPlacement& p) {
  double xm = -1e300, ym = -1e300;
  for (auto q : curve.nodes()) {
    xm = std::max(xm, q.x);
    ym = std::max(ym, q.y);
  }
  return {xm + p.offset, ym + p.offset};
}

}  // namespace fint
