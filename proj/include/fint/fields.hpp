#pragma once

// Field containers shared by the solver stages and the interpolation
// operators that move data between discretizations.

#include <vector>

#include "fint/nufft.hpp"
#include "fint/types.hpp"

namespace fint {

// Geometry of a periodic uniform grid: node (i, j) sits at (x0 + i h, y0 + j h).
struct GridGeom {
  int nx = 0, ny = 0;
  double x0 = 0.0, y0 = 0.0, h = 0.0;
  double lx() const { return nx * h; }
  double ly() const { return ny * h; }
  size_t size() const { return static_cast<size_t>(nx) * ny; }
  Vec2 node(size_t idx) const { return {x0 + (idx % nx) * h, y0 + (idx / nx) * h}; }
  double kx(int i) const;
  double ky(int j) const;
};

// Real values on a periodic grid (row-major, x fastest) with Fourier access.
class SpectralField2D {
 public:
  SpectralField2D() = default;
  SpectralField2D(GridGeom g, std::vector<double> values);

  const GridGeom& geom() const { return geom_; }
  const std::vector<double>& values() const { return values_; }
  // Fourier coefficients in FFT ordering, normalized by 1/(nx ny).
  std::vector<cplx> coeffs() const;
  static SpectralField2D from_coeffs(GridGeom g, std::vector<cplx> c);
  // Spectral partial derivative; odd orders drop the Nyquist modes.
  SpectralField2D derivative(int ox, int oy) const;
  TrigInterpolant2D interpolant() const;

 private:
  GridGeom geom_;
  std::vector<double> values_;
};

std::vector<double> nudft2_interpolate(const SpectralField2D& field, const std::vector<Vec2>& targets);
std::vector<double> nudft2_interpolate(const TrigInterpolant2D& interp, const GridGeom& g,
                                       const std::vector<Vec2>& targets);

// Values on an N-by-M Fourier/Chebyshev tensor grid (index j*M + k). The
// radial variable r maps to t in [-1, 1] with Gamma (r = 0) at t = -1 and the
// interface (r = rI) at t = +1. An optional richer coefficient form (N-by-K
// Chebyshev coefficients per azimuthal node) takes precedence when present.
struct AnnularField {
  int N = 0, M = 0;
  double rI = 0.0;
  std::vector<double> values;
  int K = 0;
  std::vector<double> cheb;

  double t_of_r(double r) const { return 2.0 * r / rI - 1.0; }
  // Chebyshev coefficients (N-by-Kout), from cheb if present else from values.
  std::vector<double> coefficients(int& Kout) const;
};

struct AnnularPoint {
  double s = 0.0, r = 0.0;
};

std::vector<double> annular_interpolate(const AnnularField& field, const std::vector<AnnularPoint>& targets);

enum class Edge { Gamma, Interface };

// Values (order 0) or r-derivatives (order 1) at the N azimuthal nodes on an edge.
std::vector<double> chebyshev_edge_interpolate(const AnnularField& field, Edge edge, int order = 0);

}  // namespace fint
