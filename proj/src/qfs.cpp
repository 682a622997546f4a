#include "fint/qfs.hpp"

#include <algorithm>
#include <cmath>

#include "fint/layer.hpp"

namespace fint {

EffectiveSource::EffectiveSource(const BoundaryCurve& curve, EvalSide side, const KernelSet& k, const QfsOptions& opt)
    : k_(k), side_(side) {
  const int N = curve.N();
  const int Ns = std::max(1, opt.upsample) * N;
  const int Nc = opt.check_factor * Ns;
  const BoundaryCurve fine = Ns == N ? curve : curve.resampled(Ns);
  // sources sit on the far side from the evaluation region
  const double d = side == EvalSide::Inside ? 1.0 : -1.0;
  double kbad = 0.0;
  for (double kap : fine.curvature()) kbad = std::max(kbad, -d * kap);
  const double rho_cap = kbad > 0.0 ? 0.5 / kbad : 1e300;
  std::vector<Vec2> pts(Ns);
  for (int j = 0; j < Ns; ++j) {
    double rho = std::min(opt.rho_factor * fine.speed()[j] * fine.ds(), rho_cap);
    if (!(1.0 + d * rho * fine.curvature()[j] > 0.0)) throw ParameterError("QFS source curve self-intersects");
    pts[j] = fine.nodes()[j] + d * rho * fine.normals()[j];
  }
  BoundaryCurve src = BoundaryCurve::from_samples(pts);
  src_ = src.nodes();
  w_.resize(Ns);
  for (int j = 0; j < Ns; ++j) w_[j] = src.speed()[j] * src.ds();

  arc_.resize(N);
  for (int j = 0; j < N; ++j) arc_[j] = curve.speed()[j] * curve.ds();

  const BoundaryCurve check = curve.resampled(Nc);
  Eigen::MatrixXd U = upsample_matrix(N, Nc);
  {
    Eigen::MatrixXd S = layer_matrix(check, k, LayerKind::Single);
    Ms_ = S * U;
  }
  {
    Eigen::MatrixXd D = layer_matrix(check, k, LayerKind::Double);
    D.diagonal().array() += side == EvalSide::Inside ? -0.5 : 0.5;
    Mg_ = D * U;
  }
  charge_row_ = k.pde.is_poisson() && side == EvalSide::Outside;
  Q_.resize(Nc + (charge_row_ ? 1 : 0), Ns);
  for (int i = 0; i < Nc; ++i)
    for (int j = 0; j < Ns; ++j) Q_(i, j) = k.single(check.nodes()[i], src_[j]) * w_[j];
  if (charge_row_)
    for (int j = 0; j < Ns; ++j) Q_(Nc, j) = w_[j];
  svd_ = TruncatedSvd(Q_, opt.tol);
}

Eigen::VectorXd EffectiveSource::rhs(const std::vector<double>& sigma, const std::vector<double>& gamma) const {
  const Eigen::Index N = static_cast<Eigen::Index>(sigma.size());
  Eigen::Map<const Eigen::VectorXd> s(sigma.data(), N), g(gamma.data(), N);
  Eigen::VectorXd b(Q_.rows());
  b.head(Ms_.rows()) = Ms_ * s - Mg_ * g;
  if (charge_row_) {
    // far-field charge of V must equal the total single-layer charge
    double q = 0.0;
    for (Eigen::Index j = 0; j < N; ++j) q += sigma[j] * arc_[j];
    b(Ms_.rows()) = q;
  }
  return b;
}

Eigen::VectorXd EffectiveSource::solve(const std::vector<double>& sigma, const std::vector<double>& gamma) const {
  return svd_.solve(rhs(sigma, gamma));
}

double EffectiveSource::check_residual(const std::vector<double>& sigma, const std::vector<double>& gamma) const {
  Eigen::VectorXd b = rhs(sigma, gamma);
  Eigen::VectorXd z = svd_.solve(b);
  double nb = b.norm();
  return nb == 0.0 ? 0.0 : (Q_ * z - b).norm() / nb;
}

std::vector<double> EffectiveSource::eval(const Eigen::VectorXd& zeta, const std::vector<Vec2>& targets) const {
  const size_t ns = src_.size();
  std::vector<double> sx(ns), sy(ns), a(ns);
  const bool lap = k_.pde.is_poisson();
  for (size_t j = 0; j < ns; ++j) {
    sx[j] = src_[j].x;
    sy[j] = src_[j].y;
    a[j] = zeta(static_cast<Eigen::Index>(j)) * w_[j] * (lap ? -1.0 / (4.0 * M_PI) : 1.0 / (2.0 * M_PI));
  }
  std::vector<double> out(targets.size());
  const double alpha = k_.pde.alpha;
  for (size_t q = 0; q < targets.size(); ++q) {
    const double x = targets[q].x, y = targets[q].y;
    double s = 0.0;
    if (lap) {
      for (size_t j = 0; j < ns; ++j) {
        double dx = x - sx[j], dy = y - sy[j];
        s += a[j] * std::log(dx * dx + dy * dy);
      }
    } else {
      for (size_t j = 0; j < ns; ++j) {
        double dx = x - sx[j], dy = y - sy[j];
        s += a[j] * bessel_k0(alpha * std::sqrt(dx * dx + dy * dy));
      }
    }
    out[q] = s;
  }
  return out;
}

}  // namespace fint
