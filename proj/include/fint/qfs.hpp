#pragma once

// Close evaluation of layer potentials by an equivalent single layer on a
// displaced source curve. An EffectiveSource for a curve represents
// V = S sigma - D gamma on one side of the curve: the source density is fitted
// so that its potential matches the one-sided limit of V at 2x upsampled
// check points on the curve.

#include <Eigen/Dense>
#include <vector>

#include "fint/curve.hpp"
#include "fint/dense.hpp"
#include "fint/kernels.hpp"

namespace fint {

enum class EvalSide { Inside, Outside };

struct QfsOptions {
  // Source displacement in units of the local source spacing; ln(1/eps)/(2 pi) for eps = 1e-14.
  double rho_factor = 5.13;
  int check_factor = 2;
  double tol = 1e-14;
  // Source count multiplier (>= 1), also shrinking the displacement.
  int upsample = 1;
};

class EffectiveSource {
 public:
  EffectiveSource() = default;
  EffectiveSource(const BoundaryCurve& curve, EvalSide side, const KernelSet& k, const QfsOptions& opt = {});

  Eigen::VectorXd solve(const std::vector<double>& sigma, const std::vector<double>& gamma) const;
  std::vector<double> eval(const Eigen::VectorXd& zeta, const std::vector<Vec2>& targets) const;
  // Relative residual of the fitted check-point values (test hook).
  double check_residual(const std::vector<double>& sigma, const std::vector<double>& gamma) const;

  EvalSide side() const { return side_; }
  int source_count() const { return static_cast<int>(src_.size()); }
  const std::vector<Vec2>& sources() const { return src_; }
  const std::vector<double>& weights() const { return w_; }
  int rank() const { return svd_.rank(); }

 private:
  Eigen::VectorXd rhs(const std::vector<double>& sigma, const std::vector<double>& gamma) const;

  KernelSet k_;
  EvalSide side_ = EvalSide::Inside;
  std::vector<Vec2> src_;
  std::vector<double> w_;
  std::vector<double> arc_;  // phi_j ds on the curve
  Eigen::MatrixXd Q_, Ms_, Mg_;
  bool charge_row_ = false;
  TruncatedSvd svd_;
};

}  // namespace fint
