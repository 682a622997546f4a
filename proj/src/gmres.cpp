#include "fint/gmres.hpp"

#include <cmath>

#include "fint/types.hpp"

namespace fint {

GmresResult gmres(const LinearOp& apply, const LinearOp& precondition, const Eigen::VectorXd& rhs, double tol,
                  int max_iter) {
  const Eigen::Index n = rhs.size();
  GmresResult res;
  res.x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd r0(n);
  precondition(rhs, r0);
  const double beta = r0.norm();
  res.history.push_back(1.0);
  if (beta == 0.0) return res;

  std::vector<Eigen::VectorXd> V;
  V.reserve(max_iter + 1);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(max_iter + 1, max_iter);
  Eigen::VectorXd cs(max_iter), sn(max_iter), g = Eigen::VectorXd::Zero(max_iter + 1);
  V.push_back(r0 / beta);
  g(0) = beta;
  Eigen::VectorXd w(n), t(n);
  int k = 0;
  bool breakdown = false;
  for (; k < max_iter; ++k) {
    apply(V[k], t);
    precondition(t, w);
    // modified Gram-Schmidt with one reorthogonalization pass
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i <= k; ++i) {
        double hij = V[i].dot(w);
        H(i, k) += hij;
        w -= hij * V[i];
      }
    H(k + 1, k) = w.norm();
    breakdown = H(k + 1, k) < 1e-30;
    if (!breakdown) V.push_back(w / H(k + 1, k));
    for (int i = 0; i < k; ++i) {
      double tmp = cs(i) * H(i, k) + sn(i) * H(i + 1, k);
      H(i + 1, k) = -sn(i) * H(i, k) + cs(i) * H(i + 1, k);
      H(i, k) = tmp;
    }
    double den = std::hypot(H(k, k), H(k + 1, k));
    cs(k) = H(k, k) / den;
    sn(k) = H(k + 1, k) / den;
    H(k, k) = den;
    H(k + 1, k) = 0.0;
    g(k + 1) = -sn(k) * g(k);
    g(k) = cs(k) * g(k);
    double rel = std::abs(g(k + 1)) / beta;
    res.history.push_back(rel);
    if (rel <= tol || breakdown) {
      ++k;
      break;
    }
  }
  Eigen::VectorXd y = H.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
  for (int i = 0; i < k; ++i) res.x += y(i) * V[i];
  res.iterations = k;
  apply(res.x, t);
  precondition(rhs - t, w);
  res.true_residual = w.norm() / beta;
  if (res.history.back() > tol) {
    throw ConvergenceError(breakdown ? "GMRES breakdown before reaching tolerance"
                                     : "GMRES did not converge within max_iter",
                           res.history);
  }
  return res;
}

}  // namespace fint
