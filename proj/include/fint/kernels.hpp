#pragma once

// Free-space kernels. Laplace: G = -(1/2pi) log|x - y|. Modified Helmholtz:
// G = K0(alpha |x - y|) / (2pi), the Green's function of alpha^2 - Lap.
// The double-layer kernel is dG/dn_y with n_y the outward normal at y.

#include "fint/pde.hpp"
#include "fint/types.hpp"

namespace fint {

enum class LayerKind { Single, Double };

struct KernelSet {
  PdeKind pde;

  double single(Vec2 x, Vec2 y) const;
  double dbl(Vec2 x, Vec2 y, Vec2 ny) const;
  // Gradient of the single-layer kernel with respect to x.
  Vec2 single_grad(Vec2 x, Vec2 y) const;
};

// Rejects coincident points.
double kernel_eval(const KernelSet& k, Vec2 x, Vec2 y, Vec2 ny, LayerKind kind);

double bessel_k0(double z);
double bessel_k1(double z);

}  // namespace fint
