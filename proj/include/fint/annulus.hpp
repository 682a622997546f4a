#pragma once

#include <vector>

#include "fint/curve.hpp"
#include "fint/fields.hpp"

namespace fint {

// Fourier/Chebyshev tensor grid on the strip between Gamma (r = 0) and the
// interface I (r = rI = -R inside, +R outside). Node (j, k) is stored at j*M + k.
struct AnnularGrid {
  BoundaryCurve parent;
  BoundaryCurve interface;
  double R = 0.0;
  int M = 0;
  Side side = Side::Interior;
  std::vector<double> t;  // first-kind Chebyshev nodes (descending)
  std::vector<double> r;  // radial nodes
  std::vector<Vec2> x;    // physical nodes
  std::vector<double> psi;

  int N() const { return parent.N(); }
  double rI() const { return side == Side::Interior ? -R : R; }
  double r_of_t(double tt) const { return 0.5 * (tt + 1.0) * rI(); }
  AnnularField field(std::vector<double> values) const {
    AnnularField f;
    f.N = N();
    f.M = M;
    f.rI = rI();
    f.values = std::move(values);
    return f;
  }
};

// Throws ParameterError when R is not below rmax or M < 4.
AnnularGrid build_annulus(const BoundaryCurve& curve, double R, int M, Side side, double rmax);

}  // namespace fint
