#pragma once

#include <Eigen/Dense>

namespace fint {

// Truncated SVD pseudo-inverse: singular values below tol * sigma_max are
// dropped, giving the minimum-norm least-squares solution.
class TruncatedSvd {
 public:
  TruncatedSvd() = default;
  TruncatedSvd(const Eigen::MatrixXd& A, double tol);

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
  int rank() const { return static_cast<int>(s_.size()); }
  const Eigen::VectorXd& singular_values() const { return s_; }
  double condition() const { return s_.size() ? s_(0) / s_(s_.size() - 1) : 0.0; }

 private:
  Eigen::MatrixXd U_, V_;
  Eigen::VectorXd s_;
  Eigen::Index cols_ = 0;
};

Eigen::VectorXd regularized_dense_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs, double tol);

}  // namespace fint
