#include "fint/kernels.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

namespace fint {

double bessel_k0(double z) { return boost::math::cyl_bessel_k(0, z); }
double bessel_k1(double z) { return boost::math::cyl_bessel_k(1, z); }

double KernelSet::single(Vec2 x, Vec2 y) const {
  const double dx = x.x - y.x, dy = x.y - y.y;
  const double r2 = dx * dx + dy * dy;
  if (pde.is_poisson()) return -std::log(r2) / (4.0 * M_PI);
  return bessel_k0(pde.alpha * std::sqrt(r2)) / (2.0 * M_PI);
}

double KernelSet::dbl(Vec2 x, Vec2 y, Vec2 ny) const {
  const double dx = x.x - y.x, dy = x.y - y.y;
  const double r2 = dx * dx + dy * dy;
  const double proj = dx * ny.x + dy * ny.y;
  if (pde.is_poisson()) return proj / (2.0 * M_PI * r2);
  const double r = std::sqrt(r2);
  return pde.alpha * bessel_k1(pde.alpha * r) * proj / (2.0 * M_PI * r);
}

Vec2 KernelSet::single_grad(Vec2 x, Vec2 y) const {
  const double dx = x.x - y.x, dy = x.y - y.y;
  const double r2 = dx * dx + dy * dy;
  double f;
  if (pde.is_poisson()) {
    f = -1.0 / (2.0 * M_PI * r2);
  } else {
    const double r = std::sqrt(r2);
    f = -pde.alpha * bessel_k1(pde.alpha * r) / (2.0 * M_PI * r);
  }
  return {f * dx, f * dy};
}

double kernel_eval(const KernelSet& k, Vec2 x, Vec2 y, Vec2 ny, LayerKind kind) {
  if (x.x == y.x && x.y == y.y) throw ParameterError("kernel evaluated at coincident points");
  return kind == LayerKind::Single ? k.single(x, y) : k.dbl(x, y, ny);
}

}  // namespace fint
