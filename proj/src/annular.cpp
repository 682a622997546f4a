#include "fint/annular.hpp"

#include <cmath>

#include "fint/chebyshev.hpp"
#include "fint/fft.hpp"
#include "fint/gmres.hpp"

namespace fint {
namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// d/dt on Chebyshev coefficients as a K x K matrix.
Eigen::MatrixXd cheb_diff_matrix(int K) {
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(K, K);
  for (int m = 0; m < K; ++m) {
    std::vector<double> e(K, 0.0);
    e[m] = 1.0;
    auto d = cheb::derivative(e);
    for (int i = 0; i < K; ++i) D(i, m) = d[i];
  }
  return D;
}

struct RadialMatrices {
  Eigen::MatrixXd T, T1, T2;
};

RadialMatrices radial_matrices(const AnnularGrid& a, int K) {
  const int M = a.M;
  RadialMatrices R;
  R.T.resize(M, K);
  for (int k = 0; k < M; ++k) {
    auto row = cheb::basis_row(K, a.t[k]);
    for (int m = 0; m < K; ++m) R.T(k, m) = row[m];
  }
  const double dtdr = 2.0 / a.rI();
  Eigen::MatrixXd D = cheb_diff_matrix(K) * dtdr;
  R.T1 = R.T * D;
  R.T2 = R.T1 * D;
  return R;
}

std::vector<double> spectral_diff(const std::vector<double>& v) { return fft::diff(v, 1); }

}  // namespace

AnnularOperator::AnnularOperator(const AnnularGrid& a, const PdeKind& pde)
    : N_(a.N()), M_(a.M), K_(a.M + 2), pde_(pde) {
  auto R = radial_matrices(a, K_);
  T_ = R.T;
  T1_ = R.T1;
  T2_ = R.T2;
  const auto& phi = a.parent.speed();
  const auto& kap = a.parent.curvature();
  auto phis = spectral_diff(phi), kaps = spectral_diff(kap);
  const size_t n = static_cast<size_t>(N_) * M_;
  a_r_.resize(n);
  inv_psi2_.resize(n);
  c_s_.resize(n);
  for (int j = 0; j < N_; ++j)
    for (int k = 0; k < M_; ++k) {
      size_t i = static_cast<size_t>(j) * M_ + k;
      double r = a.r[k];
      double q = 1.0 + r * kap[j];
      double psi = phi[j] * q;
      double psis = phis[j] * q + phi[j] * r * kaps[j];
      a_r_[i] = kap[j] / q;
      inv_psi2_[i] = 1.0 / (psi * psi);
      c_s_[i] = -psis / (psi * psi * psi);
    }
}

std::vector<double> AnnularOperator::values(const Eigen::VectorXd& coeffs) const {
  Eigen::Map<const RowMat> C(coeffs.data(), N_, K_);
  RowMat U = C * T_.transpose();
  return std::vector<double>(U.data(), U.data() + U.size());
}

void AnnularOperator::collocate(const Eigen::VectorXd& coeffs, Eigen::VectorXd& rows, int stride, int offset) const {
  Eigen::Map<const RowMat> C(coeffs.data(), N_, K_);
  RowMat U = C * T_.transpose();
  RowMat Ur = C * T1_.transpose();
  RowMat Urr = C * T2_.transpose();
  // s-derivatives by FFT along each radial column
  std::vector<cplx> d1(U.data(), U.data() + U.size());
  fft::forward(d1.data(), N_, M_, M_, 1);
  std::vector<cplx> d2 = d1;
  for (int j = 0; j < N_; ++j) {
    int k = fft::wavenumber(j, N_);
    for (int m = 0; m < M_; ++m) {
      size_t i = static_cast<size_t>(j) * M_ + m;
      d1[i] *= (2 * k == -N_) ? cplx(0.0) : cplx(0.0, k);
      d2[i] *= -static_cast<double>(k) * k;
    }
  }
  fft::inverse(d1.data(), N_, M_, M_, 1);
  fft::inverse(d2.data(), N_, M_, M_, 1);
  const bool mh = !pde_.is_poisson();
  const double a2 = pde_.alpha * pde_.alpha;
  for (int j = 0; j < N_; ++j)
    for (int m = 0; m < M_; ++m) {
      size_t i = static_cast<size_t>(j) * M_ + m;
      double lap = Urr(j, m) + a_r_[i] * Ur(j, m) + inv_psi2_[i] * d2[i].real() + c_s_[i] * d1[i].real();
      rows(static_cast<Eigen::Index>(j) * stride + offset + m) = mh ? a2 * U(j, m) - lap : lap;
    }
}

void AnnularOperator::apply(const Eigen::VectorXd& coeffs, Eigen::VectorXd& rows) const {
  rows.resize(coeffs.size());
  collocate(coeffs, rows, K_, 0);
  for (int j = 0; j < N_; ++j) {
    double g = 0.0, in = 0.0;
    for (int m = 0; m < K_; ++m) {
      double c = coeffs(static_cast<Eigen::Index>(j) * K_ + m);
      g += (m % 2 ? -c : c);
      in += c;
    }
    rows(static_cast<Eigen::Index>(j) * K_ + M_) = g;
    rows(static_cast<Eigen::Index>(j) * K_ + M_ + 1) = in;
  }
}

std::vector<double> AnnularOperator::apply_values(const std::vector<double>& values) const {
  // interpolating coefficients (degree M-1) padded to K
  auto Cm = cheb::values_to_coeffs_matrix(M_);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N_) * K_);
  for (int j = 0; j < N_; ++j)
    for (int m = 0; m < M_; ++m) {
      double s = 0.0;
      for (int k = 0; k < M_; ++k) s += Cm[static_cast<size_t>(m) * M_ + k] * values[static_cast<size_t>(j) * M_ + k];
      c(static_cast<Eigen::Index>(j) * K_ + m) = s;
    }
  Eigen::VectorXd rows(static_cast<Eigen::Index>(N_) * M_);
  collocate(c, rows, M_, 0);
  return std::vector<double>(rows.data(), rows.data() + rows.size());
}

CircularPreconditioner::CircularPreconditioner(const AnnularGrid& a, const PdeKind& pde) : N_(a.N()), K_(a.M + 2) {
  const auto& phi = a.parent.speed();
  const auto& kap = a.parent.curvature();
  phi0_ = kappa0_ = 0.0;
  for (int j = 0; j < N_; ++j) {
    phi0_ += phi[j];
    kappa0_ += kap[j];
  }
  phi0_ /= N_;
  kappa0_ /= N_;
  auto R = radial_matrices(a, K_);
  const int M = a.M;
  const double a2 = pde.alpha * pde.alpha;
  for (int k = 0; k <= N_ / 2; ++k) {
    Eigen::MatrixXd P(K_, K_);
    for (int i = 0; i < M; ++i) {
      double q = 1.0 + a.r[i] * kappa0_;
      double ks = static_cast<double>(k) * k / (phi0_ * phi0_ * q * q);
      for (int m = 0; m < K_; ++m) {
        double lap = R.T2(i, m) + kappa0_ / q * R.T1(i, m) - ks * R.T(i, m);
        P(i, m) = pde.is_poisson() ? lap : a2 * R.T(i, m) - lap;
      }
    }
    for (int m = 0; m < K_; ++m) {
      P(M, m) = (m % 2) ? -1.0 : 1.0;
      P(M + 1, m) = 1.0;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(P);
    // the second-derivative rows scale like M^4/R^2, so a determinant test would overflow
    double rc = lu.rcond();
    if (!std::isfinite(rc) || rc < 1e-16) throw ParameterError("circular preconditioner mode matrix is singular");
    mats_.push_back(P);
    lus_.push_back(std::move(lu));
  }
}

void CircularPreconditioner::apply(const Eigen::VectorXd& rows, Eigen::VectorXd& coeffs) const {
  std::vector<cplx> z(rows.data(), rows.data() + rows.size());
  fft::forward(z.data(), N_, K_, K_, 1);
  Eigen::VectorXd re(K_), im(K_);
  for (int j = 0; j < N_; ++j) {
    const auto& lu = lus_[mode_index(fft::wavenumber(j, N_))];
    for (int m = 0; m < K_; ++m) {
      re(m) = z[static_cast<size_t>(j) * K_ + m].real();
      im(m) = z[static_cast<size_t>(j) * K_ + m].imag();
    }
    Eigen::VectorXd xr = lu.solve(re), xi = lu.solve(im);
    for (int m = 0; m < K_; ++m) z[static_cast<size_t>(j) * K_ + m] = cplx(xr(m), xi(m));
  }
  fft::inverse(z.data(), N_, K_, K_, 1);
  coeffs.resize(rows.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs(i) = z[i].real();
}

AnnularSolveResult solve_annular(const AnnularGrid& annulus, const AnnularOperator& op,
                                 const CircularPreconditioner& pre, const std::vector<double>& f, double tol,
                                 int max_iter) {
  const int N = op.N(), M = op.M(), K = op.K();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N) * K);
  for (int j = 0; j < N; ++j)
    for (int m = 0; m < M; ++m) rhs(static_cast<Eigen::Index>(j) * K + m) = f[static_cast<size_t>(j) * M + m];
  auto res = gmres([&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { op.apply(x, y); },
                   [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { pre.apply(x, y); }, rhs, tol, max_iter);
  AnnularSolveResult out;
  out.u = annulus.field(op.values(res.x));
  out.u.K = K;
  out.u.cheb.assign(res.x.data(), res.x.data() + res.x.size());
  out.iterations = res.iterations;
  out.history = std::move(res.history);
  return out;
}

}  // namespace fint
