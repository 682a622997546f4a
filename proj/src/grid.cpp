#include "fint/grid.hpp"

#include <algorithm>
#include <cmath>

namespace fint {

RegularGrid build_computational_domain(const BoundaryCurve& curve, double h, double wiggle) {
  if (!(h > 0.0)) throw ParameterError("grid spacing must be positive");
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (auto p : curve.nodes()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double pad = curve.h_max();
  x0 -= pad;
  y0 -= pad;
  x1 += pad;
  y1 += pad;
  RegularGrid g;
  g.wiggle = wiggle;
  g.geom.h = h;
  g.geom.nx = 2 * static_cast<int>(std::ceil((x1 + wiggle - x0) / (2.0 * h)));
  g.geom.ny = 2 * static_cast<int>(std::ceil((y1 + wiggle - y0) / (2.0 * h)));
  g.geom.x0 = x0;
  g.geom.y0 = y0;
  return g;
}

}  // namespace fint
