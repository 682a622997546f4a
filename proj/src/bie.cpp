#include "fint/bie.hpp"

#include <cmath>

#include "fint/gmres.hpp"
#include "fint/layer.hpp"

namespace fint {

HomogeneousBie::HomogeneousBie(const BoundaryCurve& curve, const KernelSet& k, BieMode mode) : mode_(mode) {
  A_ = layer_matrix(curve, k, LayerKind::Double);
  A_.diagonal().array() -= 0.5;
  if (mode_ == BieMode::Dense) {
    lu_.compute(A_);
    // the determinant of a second-kind system under/overflows for large N; the rcond estimate does not
    double rc = lu_.rcond();
    if (!std::isfinite(rc) || rc < 1e-14) throw ParameterError("boundary integral system is singular");
  }
}

std::vector<double> HomogeneousBie::solve(const std::vector<double>& data, int* iterations) const {
  Eigen::Map<const Eigen::VectorXd> b(data.data(), static_cast<Eigen::Index>(data.size()));
  Eigen::VectorXd x;
  if (mode_ == BieMode::Dense) {
    x = lu_.solve(b);
    if (iterations) *iterations = 0;
  } else {
    auto res = gmres([&](const Eigen::VectorXd& v, Eigen::VectorXd& y) { y = A_ * v; },
                     [](const Eigen::VectorXd& v, Eigen::VectorXd& y) { y = v; }, b, 1e-14,
                     static_cast<int>(std::min<Eigen::Index>(A_.rows(), 500)));
    x = res.x;
    if (iterations) *iterations = res.iterations;
  }
  return std::vector<double>(x.data(), x.data() + x.size());
}

double HomogeneousBie::condition_number() const {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A_);
  const auto& s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

std::vector<double> solve_homogeneous_bie(const BoundaryCurve& curve, const std::vector<double>& data,
                                          const KernelSet& k, BieMode mode) {
  return HomogeneousBie(curve, k, mode).solve(data);
}

}  // namespace fint
