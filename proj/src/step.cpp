#include "fint/step.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>

#include "fint/chebyshev.hpp"
#include "fint/types.hpp"

namespace fint {

std::vector<double> prolate0_legendre(double c, int nterms) {
  // -d/dx (1 - x^2) d/dx + c^2 x^2 is tridiagonal on even normalized Legendre polynomials
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nterms, nterms);
  const double c2 = c * c;
  for (int i = 0; i < nterms; ++i) {
    double k = 2.0 * i;
    A(i, i) = k * (k + 1.0) + c2 * (2.0 * k * (k + 1.0) - 1.0) / ((2.0 * k + 3.0) * (2.0 * k - 1.0));
    if (i + 1 < nterms) {
      double off = c2 * (k + 2.0) * (k + 1.0) / ((2.0 * k + 3.0) * std::sqrt((2.0 * k + 1.0) * (2.0 * k + 5.0)));
      A(i, i + 1) = A(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  Eigen::VectorXd v = es.eigenvectors().col(0);
  std::vector<double> beta(v.data(), v.data() + nterms);
  if (even_legendre_eval(beta, 0.0) < 0.0)
    for (double& x : beta) x = -x;
  return beta;
}

double even_legendre_eval(const std::vector<double>& beta, double x) {
  const int deg = 2 * (static_cast<int>(beta.size()) - 1);
  double p0 = 1.0, p1 = x, s = beta.empty() ? 0.0 : beta[0] * std::sqrt(0.5);
  for (int n = 1; n <= deg; ++n) {
    if (n % 2 == 0) s += beta[n / 2] * std::sqrt(n + 0.5) * p1;
    double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return s;
}

StepFunction::StepFunction(int b, StepProfile profile) : b_(b) {
  if (b < 1 || b > 200) throw ParameterError("step bandwidth b must lie in [1, 200]");
  const double c = M_PI * b / 4.0;
  const int ncheb = 2 * static_cast<int>(std::ceil(c)) + 64;
  std::vector<double> raw;
  if (profile == StepProfile::Prolate) {
    auto beta = prolate0_legendre(c, static_cast<int>(std::ceil(c)) + 40);
    raw = cheb::fit([&](double y) { return even_legendre_eval(beta, y); }, ncheb);
  } else {
    const double a = std::sqrt(2.0 * c);
    raw = cheb::fit([&](double y) { return std::exp(-a * a * y * y); }, ncheb);
  }
  auto H = cheb::antiderivative(raw);
  const double total = cheb::eval(H, 1.0);
  for (double& x : raw) x /= total;
  for (double& x : H) x /= total;
  cheb::truncate(raw, 1e-15);
  cheb::truncate(H, 1e-15);
  bc_ = std::move(raw);
  Hc_ = std::move(H);
}

std::shared_ptr<const StepFunction> StepFunction::get(int b, StepProfile profile) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const StepFunction>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(b, static_cast<int>(profile));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto s = std::make_shared<const StepFunction>(b, profile);
  cache.emplace(key, s);
  return s;
}

double StepFunction::H(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return cheb::eval(Hc_, 2.0 * x - 1.0);
}

double StepFunction::dH(double x) const {
  if (x < 0.0 || x > 1.0) return 0.0;
  return 2.0 * cheb::eval(bc_, 2.0 * x - 1.0);
}

double StepFunction::bump(double y) const {
  if (y < -1.0 || y > 1.0) return 0.0;
  return cheb::eval(bc_, y);
}

}  // namespace fint
