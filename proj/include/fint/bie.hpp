#pragma once

// Second-kind Dirichlet BIE for the homogeneous correction u_H = D zeta on the
// interior: (D_pv - I/2) zeta = data.

#include <Eigen/Dense>
#include <vector>

#include "fint/curve.hpp"
#include "fint/kernels.hpp"

namespace fint {

enum class BieMode { Dense, Iterative };

class HomogeneousBie {
 public:
  HomogeneousBie() = default;
  HomogeneousBie(const BoundaryCurve& curve, const KernelSet& k, BieMode mode = BieMode::Dense);

  // Returns zeta; `iterations` receives the GMRES count (0 in dense mode).
  std::vector<double> solve(const std::vector<double>& data, int* iterations = nullptr) const;
  const Eigen::MatrixXd& matrix() const { return A_; }
  double condition_number() const;

 private:
  BieMode mode_ = BieMode::Dense;
  Eigen::MatrixXd A_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

std::vector<double> solve_homogeneous_bie(const BoundaryCurve& curve, const std::vector<double>& data,
                                          const KernelSet& k, BieMode mode = BieMode::Dense);

}  // namespace fint
