#pragma once

// Body-fitted annular problem with homogeneous Dirichlet data on both edges.
//
// Unknowns are Chebyshev coefficients, K = M + 2 per azimuthal node (index
// j*K + m). The discrete operator maps them to K rows per node: M collocation
// rows at the radial nodes followed by the trace at Gamma and at I.

#include <Eigen/Dense>
#include <vector>

#include "fint/annulus.hpp"
#include "fint/fields.hpp"
#include "fint/pde.hpp"

namespace fint {

class AnnularOperator {
 public:
  AnnularOperator(const AnnularGrid& annulus, const PdeKind& pde);

  int N() const { return N_; }
  int M() const { return M_; }
  int K() const { return K_; }

  // Full rectangular-collocation operator: coefficients -> rows.
  void apply(const Eigen::VectorXd& coeffs, Eigen::VectorXd& rows) const;
  // PDE operator applied to nodal values (N*M) on the tensor grid.
  std::vector<double> apply_values(const std::vector<double>& values) const;
  // Nodal values from coefficients.
  std::vector<double> values(const Eigen::VectorXd& coeffs) const;

 private:
  void collocate(const Eigen::VectorXd& coeffs, Eigen::VectorXd& rows, int stride, int offset) const;

  int N_, M_, K_;
  PdeKind pde_;
  Eigen::MatrixXd T_, T1_, T2_;  // M x K: T_m, dT_m/dr, d2T_m/dr2 at the radial nodes
  std::vector<double> a_r_, inv_psi2_, c_s_;
};

class CircularPreconditioner {
 public:
  CircularPreconditioner(const AnnularGrid& annulus, const PdeKind& pde);

  // rows -> coefficients, exact inverse on a uniformly parametrized circle.
  void apply(const Eigen::VectorXd& rows, Eigen::VectorXd& coeffs) const;
  // Per-mode forward operator (test hook).
  const Eigen::MatrixXd& mode_matrix(int k) const { return mats_[mode_index(k)]; }
  double phi0() const { return phi0_; }
  double kappa0() const { return kappa0_; }

 private:
  int mode_index(int k) const { return std::abs(k); }
  int N_, K_;
  double phi0_, kappa0_;
  std::vector<Eigen::MatrixXd> mats_;
  std::vector<Eigen::PartialPivLU<Eigen::MatrixXd>> lus_;
};

struct AnnularSolveResult {
  AnnularField u;
  int iterations = 0;
  std::vector<double> history;
};

AnnularSolveResult solve_annular(const AnnularGrid& annulus, const AnnularOperator& op,
                                 const CircularPreconditioner& pre, const std::vector<double>& f, double tol,
                                 int max_iter);

}  // namespace fint
