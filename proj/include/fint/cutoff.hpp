#pragma once

#include <vector>

#include "fint/grid.hpp"
#include "fint/step.hpp"

namespace fint {

// Cutoff value at normal offset r for an annulus of width R.
double eta_at(double r, double R, Side side, const StepFunction& step);

// eta on grid nodes: 0 exterior, 1 faithful, H(-r/R) in the annulus.
std::vector<double> eval_eta(const GridClassification& cls, const AnnularGrid& annulus, const StepFunction& step);
// eta on the annular tensor nodes (depends on r_k only).
std::vector<double> eval_eta_annular(const AnnularGrid& annulus, const StepFunction& step);

// Radial prolate bump of the given support radius centred at `center`
// (periodic minimum-image distance), normalized so that sum * h^2 = 1.
// When `cls` is given, any nonzero value at a non-exterior node is rejected.
std::vector<double> build_bump_xi(const GridGeom& grid, Vec2 center, double radius, const StepFunction& step,
                                  const GridClassification* cls = nullptr);

// Offset l of the bump centre (X_max + l, Y_max + l) and its support radius 2R.
struct BumpPlacement {
  double offset = 0.0;
  double radius = 0.0;
  // room needed past the curve so the bump support never wraps around C
  double wiggle() const { return offset + radius; }
};
BumpPlacement default_bump_placement(double R, int M, double h);
Vec2 bump_center(const BoundaryCurve& curve, const BumpPlacement& p);

}  // namespace fint
