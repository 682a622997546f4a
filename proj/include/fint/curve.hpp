#pragma once

// Closed parametrized boundary curves on s in [0, 2pi) with spectral
// derivative data. Normals point outward for counter-clockwise curves and
// the signed curvature is +1 on the unit circle.

#include <functional>
#include <vector>

#include "fint/types.hpp"

namespace fint {

using Parametrization = std::function<Vec2(double)>;

// Position and first two parameter derivatives at one point.
struct CurvePoint {
  Vec2 X, Xs, Xss;
  double speed() const { return norm(Xs); }
  Vec2 normal() const {
    double p = speed();
    return {Xs.y / p, -Xs.x / p};
  }
  double curvature() const {
    double p = speed();
    return (Xs.x * Xss.y - Xs.y * Xss.x) / (p * p * p);
  }
};

class BoundaryCurve {
 public:
  BoundaryCurve() = default;
  // Nodes sampled at s_j = 2 pi j / N.
  static BoundaryCurve from_samples(std::vector<Vec2> nodes);
  static BoundaryCurve from_function(const Parametrization& X, int N);

  int N() const { return static_cast<int>(X_.size()); }
  double ds() const { return 2.0 * M_PI / N(); }
  double s(int j) const { return ds() * j; }
  const std::vector<Vec2>& nodes() const { return X_; }
  const std::vector<Vec2>& normals() const { return n_; }
  const std::vector<Vec2>& tangents() const { return Xs_; }
  const std::vector<Vec2>& second_derivs() const { return Xss_; }
  const std::vector<double>& speed() const { return phi_; }
  const std::vector<double>& curvature() const { return kappa_; }
  // Arc-length spacings phi_j ds.
  double h_min() const;
  double h_max() const;
  double diameter() const { return diameter_; }
  double signed_area() const;

  // Largest |wavenumber| among the significant modes.
  int bandwidth() const;

  // Off-node evaluation by direct Fourier summation over the significant modes.
  CurvePoint eval(double s) const;

  // Offset curve X + r n sampled at the same parameters.
  BoundaryCurve offset(double r) const;
  // Spectral resampling to M nodes.
  BoundaryCurve resampled(int M) const;

 private:
  void finish();

  std::vector<Vec2> X_, Xs_, Xss_, n_;
  std::vector<double> phi_, kappa_;
  struct Mode {
    int k;
    cplx cx, cy;
  };
  std::vector<Mode> modes_;
  double diameter_ = 0.0;
};

double compute_rmax(const BoundaryCurve& curve, Side side, double cap);

// Default R_max cap: a quarter of the node bounding-box diagonal.
double default_rmax_cap(const BoundaryCurve& curve);

namespace shapes {
Parametrization circle(double xc = 0.0, double yc = 0.0, double r = 1.0);
Parametrization ellipse(double a, double b);
// r (1 + a cos(d s)) in polar form about (xc, yc).
Parametrization star(double a = 0.15, int d = 5, double r = 1.0, double xc = 0.0, double yc = 0.0);
Parametrization kite();
}  // namespace shapes

}  // namespace fint
