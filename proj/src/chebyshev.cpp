#include "fint/chebyshev.hpp"

#include <algorithm>
#include <cmath>

namespace fint::cheb {

std::vector<double> nodes(int M) {
  std::vector<double> t(M);
  for (int k = 0; k < M; ++k) t[k] = std::cos(M_PI * (2 * k + 1) / (2.0 * M));
  return t;
}

std::vector<double> values_to_coeffs_matrix(int M) {
  std::vector<double> C(static_cast<size_t>(M) * M);
  for (int m = 0; m < M; ++m)
    for (int k = 0; k < M; ++k)
      C[static_cast<size_t>(m) * M + k] =
          (m == 0 ? 1.0 : 2.0) / M * std::cos(m * M_PI * (2 * k + 1) / (2.0 * M));
  return C;
}

std::vector<double> values_to_coeffs(const std::vector<double>& values) {
  const int M = static_cast<int>(values.size());
  auto C = values_to_coeffs_matrix(M);
  std::vector<double> a(M, 0.0);
  for (int m = 0; m < M; ++m)
    for (int k = 0; k < M; ++k) a[m] += C[static_cast<size_t>(m) * M + k] * values[k];
  return a;
}

double eval(const std::vector<double>& a, double t) {
  double b1 = 0.0, b2 = 0.0;
  for (int m = static_cast<int>(a.size()) - 1; m >= 1; --m) {
    double b0 = 2.0 * t * b1 - b2 + a[m];
    b2 = b1;
    b1 = b0;
  }
  return (a.empty() ? 0.0 : a[0]) + t * b1 - b2;
}

void eval_d(const std::vector<double>& a, double t, double& f, double& df) {
  f = eval(a, t);
  df = eval(derivative(a), t);
}

std::vector<double> derivative(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<double> d(std::max(n, 1), 0.0);
  if (n < 2) return d;
  // backward recurrence c_{m-1} = c_{m+1} + 2 m a_m
  for (int m = n - 1; m >= 1; --m) d[m - 1] = (m + 1 < n ? d[m + 1] : 0.0) + 2.0 * m * a[m];
  d[0] *= 0.5;
  d[n - 1] = 0.0;
  return d;
}

std::vector<double> antiderivative(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<double> c(n + 1, 0.0);
  auto at = [&](int m) { return m < n && m >= 0 ? a[m] : 0.0; };
  for (int m = 1; m <= n; ++m) {
    double prev = (m == 1) ? 2.0 * at(0) : at(m - 1);
    c[m] = (prev - at(m + 1)) / (2.0 * m);
  }
  // fix constant so the antiderivative vanishes at t = -1
  double s = 0.0;
  for (int m = 1; m <= n; ++m) s += (m % 2 ? -1.0 : 1.0) * c[m];
  c[0] = -s;
  return c;
}

std::vector<double> fit(const std::function<double(double)>& f, int n) {
  std::vector<double> v(n + 1);
  for (int j = 0; j <= n; ++j) v[j] = f(std::cos(M_PI * j / n));
  std::vector<double> a(n + 1, 0.0);
  for (int m = 0; m <= n; ++m) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      double w = (j == 0 || j == n) ? 0.5 : 1.0;
      s += w * v[j] * std::cos(M_PI * static_cast<double>(m) * j / n);
    }
    a[m] = 2.0 * s / n;
  }
  a[0] *= 0.5;
  a[n] *= 0.5;
  return a;
}

void truncate(std::vector<double>& a, double tol) {
  double mx = 0.0;
  for (double x : a) mx = std::max(mx, std::abs(x));
  while (a.size() > 1 && std::abs(a.back()) < tol * mx) a.pop_back();
}

std::vector<double> fejer_weights(int M) {
  std::vector<double> w(M);
  for (int k = 0; k < M; ++k) {
    double th = M_PI * (2 * k + 1) / (2.0 * M);
    double s = 0.0;
    for (int j = 1; j <= M / 2; ++j) s += std::cos(2.0 * j * th) / (4.0 * j * j - 1.0);
    w[k] = 2.0 / M * (1.0 - 2.0 * s);
  }
  return w;
}

std::vector<double> basis_row(int K, double t) {
  std::vector<double> T(K);
  if (K > 0) T[0] = 1.0;
  if (K > 1) T[1] = t;
  for (int m = 2; m < K; ++m) T[m] = 2.0 * t * T[m - 1] - T[m - 2];
  return T;
}

}  // namespace fint::cheb
