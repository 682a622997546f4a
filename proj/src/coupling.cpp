#include "fint/coupling.hpp"

#include "fint/chebyshev.hpp"

namespace fint {

JumpData compute_jumps(const SpectralField2D& u_r, const AnnularField& u_a, const AnnularGrid& annulus) {
  const auto& I = annulus.interface.nodes();
  const auto& n = annulus.parent.normals();
  const auto& g = u_r.geom();
  auto v = nudft2_interpolate(u_r, I);
  auto vx = nudft2_interpolate(u_r.derivative(1, 0), I);
  auto vy = nudft2_interpolate(u_r.derivative(0, 1), I);
  (void)g;
  auto a = chebyshev_edge_interpolate(u_a, Edge::Interface, 0);
  auto ar = chebyshev_edge_interpolate(u_a, Edge::Interface, 1);
  JumpData J;
  const size_t N = I.size();
  J.gamma.resize(N);
  J.sigma.resize(N);
  for (size_t j = 0; j < N; ++j) {
    J.gamma[j] = v[j] - a[j];
    J.sigma[j] = vx[j] * n[j].x + vy[j] * n[j].y - ar[j];
  }
  return J;
}

void add_nodal(AnnularField& f, const std::vector<double>& v) {
  for (size_t i = 0; i < v.size(); ++i) f.values[i] += v[i];
  if (f.K > 0 && !f.cheb.empty()) {
    AnnularField tmp = f;
    tmp.K = 0;
    tmp.cheb.clear();
    tmp.values = v;
    int Km = 0;
    auto c = tmp.coefficients(Km);
    for (int j = 0; j < f.N; ++j)
      for (int m = 0; m < Km; ++m) f.cheb[static_cast<size_t>(j) * f.K + m] += c[static_cast<size_t>(j) * Km + m];
  }
}

StitchResult stitch(const SpectralField2D& u_r, const AnnularField& u_a, const JumpData& jumps,
                    const EffectiveSource& inward, const EffectiveSource& outward, const AnnularGrid& annulus,
                    const GridClassification& cls, const GridGeom& grid) {
  StitchResult out;
  out.zeta_in = inward.solve(jumps.sigma, jumps.gamma);
  out.zeta_out = outward.solve(jumps.sigma, jumps.gamma);
  std::vector<Vec2> pts(cls.faithful.size());
  for (size_t q = 0; q < pts.size(); ++q) pts[q] = grid.node(cls.faithful[q]);
  auto vin = inward.eval(out.zeta_in, pts);
  out.faithful.resize(pts.size());
  for (size_t q = 0; q < pts.size(); ++q) out.faithful[q] = u_r.values()[cls.faithful[q]] - vin[q];
  auto vout = outward.eval(out.zeta_out, annulus.x);
  for (double& x : vout) x = -x;
  out.annular = u_a;
  add_nodal(out.annular, vout);
  return out;
}

Eigen::VectorXd apply_homogeneous_correction(StitchResult& u, const std::vector<double>& zeta_h,
                                             const EffectiveSource& gamma_source, const AnnularGrid& annulus,
                                             const GridClassification& cls, const GridGeom& grid) {
  // D zeta = -(S 0 - D zeta)
  std::vector<double> zero(zeta_h.size(), 0.0);
  Eigen::VectorXd z = gamma_source.solve(zero, zeta_h);
  std::vector<Vec2> pts(cls.faithful.size());
  for (size_t q = 0; q < pts.size(); ++q) pts[q] = grid.node(cls.faithful[q]);
  auto vf = gamma_source.eval(z, pts);
  for (size_t q = 0; q < pts.size(); ++q) u.faithful[q] -= vf[q];
  auto va = gamma_source.eval(z, annulus.x);
  for (double& x : va) x = -x;
  add_nodal(u.annular, va);
  return z;
}

std::vector<double> finalize_on_grid(const AnnularField& u, const GridClassification& cls) {
  return annular_interpolate(u, cls.coords);
}

}  // namespace fint
