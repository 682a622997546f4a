#include "fint/fields.hpp"

#include <algorithm>
#include <cmath>

#include "fint/chebyshev.hpp"
#include "fint/fft.hpp"

namespace fint {

double GridGeom::kx(int i) const { return 2.0 * M_PI * fft::wavenumber(i, nx) / lx(); }
double GridGeom::ky(int j) const { return 2.0 * M_PI * fft::wavenumber(j, ny) / ly(); }

SpectralField2D::SpectralField2D(GridGeom g, std::vector<double> values) : geom_(g), values_(std::move(values)) {
  if (values_.size() != geom_.size()) throw ParameterError("field size does not match grid");
}

std::vector<cplx> SpectralField2D::coeffs() const {
  std::vector<cplx> c(values_.begin(), values_.end());
  fft::forward2(c.data(), geom_.nx, geom_.ny);
  return c;
}

SpectralField2D SpectralField2D::from_coeffs(GridGeom g, std::vector<cplx> c) {
  fft::inverse2(c.data(), g.nx, g.ny);
  std::vector<double> v(c.size());
  for (size_t i = 0; i < c.size(); ++i) v[i] = c[i].real();
  return SpectralField2D(g, std::move(v));
}

SpectralField2D SpectralField2D::derivative(int ox, int oy) const {
  auto c = coeffs();
  const int nx = geom_.nx, ny = geom_.ny;
  for (int j = 0; j < ny; ++j) {
    bool nyq_y = 2 * fft::wavenumber(j, ny) == -ny;
    for (int i = 0; i < nx; ++i) {
      bool nyq_x = 2 * fft::wavenumber(i, nx) == -nx;
      cplx& v = c[static_cast<size_t>(j) * nx + i];
      if ((nyq_x && ox % 2) || (nyq_y && oy % 2)) {
        v = 0.0;
        continue;
      }
      v *= std::pow(cplx(0.0, geom_.kx(i)), ox) * std::pow(cplx(0.0, geom_.ky(j)), oy);
    }
  }
  return from_coeffs(geom_, std::move(c));
}

TrigInterpolant2D SpectralField2D::interpolant() const { return TrigInterpolant2D(coeffs(), geom_.nx, geom_.ny); }

std::vector<double> nudft2_interpolate(const TrigInterpolant2D& interp, const GridGeom& g,
                                       const std::vector<Vec2>& targets) {
  std::vector<double> out(targets.size());
  const double tol = 1e-12 * std::max(g.lx(), g.ly());
  for (size_t q = 0; q < targets.size(); ++q) {
    const Vec2 p = targets[q];
    if (p.x < g.x0 - tol || p.x > g.x0 + g.lx() + tol || p.y < g.y0 - tol || p.y > g.y0 + g.ly() + tol)
      throw ParameterError("interpolation target outside the computational domain");
    out[q] = interp.eval(2.0 * M_PI * (p.x - g.x0) / g.lx(), 2.0 * M_PI * (p.y - g.y0) / g.ly());
  }
  return out;
}

std::vector<double> nudft2_interpolate(const SpectralField2D& field, const std::vector<Vec2>& targets) {
  return nudft2_interpolate(field.interpolant(), field.geom(), targets);
}

std::vector<double> AnnularField::coefficients(int& Kout) const {
  if (K > 0 && !cheb.empty()) {
    Kout = K;
    return cheb;
  }
  Kout = M;
  auto C = cheb::values_to_coeffs_matrix(M);
  std::vector<double> a(static_cast<size_t>(N) * M, 0.0);
  for (int j = 0; j < N; ++j)
    for (int m = 0; m < M; ++m) {
      double s = 0.0;
      for (int k = 0; k < M; ++k) s += C[static_cast<size_t>(m) * M + k] * values[static_cast<size_t>(j) * M + k];
      a[static_cast<size_t>(j) * M + m] = s;
    }
  return a;
}

std::vector<double> annular_interpolate(const AnnularField& field, const std::vector<AnnularPoint>& targets) {
  int K = 0;
  auto a = field.coefficients(K);
  const int N = field.N;
  const int n2 = 2 * K;
  // Fourier transform in s of each Chebyshev coefficient column
  std::vector<cplx> col(static_cast<size_t>(N) * K);
  for (size_t i = 0; i < col.size(); ++i) col[i] = a[i];
  fft::forward(col.data(), N, K, K, 1);
  // even reflection in theta: cos(m theta) = (e^{im theta} + e^{-im theta}) / 2
  std::vector<cplx> c(static_cast<size_t>(N) * n2, 0.0);
  for (int m = 0; m < K; ++m)
    for (int j = 0; j < N; ++j) {
      cplx v = col[static_cast<size_t>(j) * K + m];
      if (m == 0) {
        c[j] += v;
      } else {
        c[static_cast<size_t>(m) * N + j] += 0.5 * v;
        c[static_cast<size_t>(n2 - m) * N + j] += 0.5 * v;
      }
    }
  TrigInterpolant2D interp(c, N, n2);
  std::vector<double> out(targets.size());
  const double tol = 1e-10;
  for (size_t q = 0; q < targets.size(); ++q) {
    double t = field.t_of_r(targets[q].r);
    if (t < -1.0 - tol || t > 1.0 + tol) throw ParameterError("annular target outside the radial range");
    t = std::clamp(t, -1.0, 1.0);
    out[q] = interp.eval(targets[q].s, std::acos(t));
  }
  return out;
}

std::vector<double> chebyshev_edge_interpolate(const AnnularField& field, Edge edge, int order) {
  int K = 0;
  auto a = field.coefficients(K);
  const double t = edge == Edge::Gamma ? -1.0 : 1.0;
  const double dtdr = 2.0 / field.rI;
  std::vector<double> out(field.N);
  for (int j = 0; j < field.N; ++j) {
    std::vector<double> col(a.begin() + static_cast<size_t>(j) * K, a.begin() + static_cast<size_t>(j + 1) * K);
    if (order == 0) {
      out[j] = cheb::eval(col, t);
    } else {
      double s = 0.0;
      // T_m'(+-1) = (+-1)^{m+1} m^2
      for (int m = 1; m < K; ++m) s += col[m] * m * m * ((t < 0 && m % 2 == 0) ? -1.0 : 1.0);
      out[j] = s * dtdr;
    }
  }
  return out;
}

}  // namespace fint
