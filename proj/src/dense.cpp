#include "fint/dense.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace fint {

TruncatedSvd::TruncatedSvd(const Eigen::MatrixXd& A, double tol) : cols_(A.cols()) {
  const lapack_int m = static_cast<lapack_int>(A.rows()), n = static_cast<lapack_int>(A.cols());
  const lapack_int p = std::min(m, n);
  Eigen::MatrixXd a = A;
  Eigen::VectorXd s(p);
  Eigen::MatrixXd U(m, p), VT(p, n);
  lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', m, n, a.data(), m, s.data(), U.data(), m, VT.data(), p);
  if (info != 0) throw std::runtime_error("SVD failed to converge");
  Eigen::Index r = 0;
  if (p > 0 && s(0) > 0.0)
    while (r < p && s(r) > tol * s(0)) ++r;
  s_ = s.head(r);
  U_ = U.leftCols(r);
  V_ = VT.topRows(r).transpose();
}

Eigen::VectorXd TruncatedSvd::solve(const Eigen::VectorXd& rhs) const {
  if (s_.size() == 0) return Eigen::VectorXd::Zero(cols_);
  Eigen::VectorXd c = U_.transpose() * rhs;
  c.array() /= s_.array();
  return V_ * c;
}

Eigen::VectorXd regularized_dense_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& rhs, double tol) {
  return TruncatedSvd(A, tol).solve(rhs);
}

}  // namespace fint
