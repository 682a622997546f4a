#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace fint {

using LinearOp = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct GmresResult {
  Eigen::VectorXd x;
  int iterations = 0;
  // Preconditioned relative residual after each iteration (entry 0 is 1).
  std::vector<double> history;
  // Recomputed preconditioned relative residual of the returned x; the recurrence
  // estimate in history can fall below it once round-off dominates.
  double true_residual = 0.0;
};

// Left-preconditioned GMRES without restarts. Throws ConvergenceError when
// max_iter is reached or the Arnoldi process breaks down short of tol.
GmresResult gmres(const LinearOp& apply, const LinearOp& precondition, const Eigen::VectorXd& rhs, double tol,
                  int max_iter);

}  // namespace fint
