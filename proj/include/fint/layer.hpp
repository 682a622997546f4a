#pragma once

// On-surface Nystrom matrices for single and double layer operators on a
// closed curve: (S sigma)_i = sum_j S_ij sigma_j with the curve speed folded
// into the weights. The double layer is the principal value.
//
// Laplace uses Kress log-splitting quadrature. Modified Helmholtz uses a
// windowed product quadrature: plain trapezoid sums away from the target and
// graded Gauss panels with trigonometric interpolation of the density near it.

#include <Eigen/Dense>
#include <vector>

#include "fint/curve.hpp"
#include "fint/kernels.hpp"

namespace fint {

Eigen::MatrixXd layer_matrix(const BoundaryCurve& curve, const KernelSet& k, LayerKind kind);

// Kress quadrature (Laplace only).
Eigen::MatrixXd kress_layer_matrix(const BoundaryCurve& curve, LayerKind kind);
// Windowed product quadrature (any kernel).
Eigen::MatrixXd product_layer_matrix(const BoundaryCurve& curve, const KernelSet& k, LayerKind kind);

std::vector<double> singular_selfeval(const BoundaryCurve& curve, const std::vector<double>& density, LayerKind kind,
                                      const KernelSet& k);

// Plain trapezoid evaluation of S or D at off-curve targets.
std::vector<double> layer_eval_trapezoid(const BoundaryCurve& curve, const std::vector<double>& density,
                                         LayerKind kind, const KernelSet& k, const std::vector<Vec2>& targets);

// Trigonometric interpolation matrix from N to m equispaced samples (m x N).
Eigen::MatrixXd upsample_matrix(int N, int m);

}  // namespace fint
