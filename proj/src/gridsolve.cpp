#include "fint/gridsolve.hpp"

#include <cmath>

namespace fint {

SpectralField2D intend(const GridGeom& grid, const std::vector<double>& f, const std::vector<double>& eta,
                       const GridClassification& cls) {
  std::vector<double> v(grid.size(), 0.0);
  for (size_t i : cls.faithful) v[i] = f[i];
  for (size_t i : cls.annulus) v[i] = eta[i] * f[i];
  return SpectralField2D(grid, std::move(v));
}

SpectralField2D enforce_mean_zero(const SpectralField2D& f, const std::vector<double>& xi) {
  const auto& g = f.geom();
  double total = 0.0;
  for (double x : f.values()) total += x;
  total *= g.h * g.h;
  std::vector<double> v = f.values();
  for (size_t i = 0; i < v.size(); ++i)
    if (xi[i] != 0.0) v[i] -= total * xi[i];
  return SpectralField2D(g, std::move(v));
}

namespace {

SpectralField2D symbol_map(const SpectralField2D& u, const PdeKind& pde, bool invert) {
  const auto& g = u.geom();
  auto c = u.coeffs();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      double k2 = g.kx(i) * g.kx(i) + g.ky(j) * g.ky(j);
      double s = pde.symbol(k2);
      // Poisson: Lap <-> -|k|^2; modified Helmholtz: alpha^2 - Lap <-> alpha^2 + |k|^2
      double m = pde.is_poisson() ? -s : s;
      cplx& v = c[static_cast<size_t>(j) * g.nx + i];
      if (invert) v = (s == 0.0) ? 0.0 : v / m;
      else v *= m;
    }
  return SpectralField2D::from_coeffs(g, std::move(c));
}

}  // namespace

SpectralField2D solve_regular(const SpectralField2D& f, const PdeKind& pde) {
  if (pde.has_nullspace()) {
    double sum = 0.0, mag = 0.0;
    for (double x : f.values()) {
      sum += x;
      mag += std::abs(x);
    }
    if (std::abs(sum) > 1e-12 * std::max(mag, 1e-300))
      throw ParameterError("Poisson right-hand side on the periodic box must have zero mean");
  }
  return symbol_map(f, pde, true);
}

SpectralField2D apply_regular(const SpectralField2D& u, const PdeKind& pde) { return symbol_map(u, pde, false); }

}  // namespace fint
