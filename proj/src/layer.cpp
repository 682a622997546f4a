#include "fint/layer.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "fint/fft.hpp"

namespace fint {
namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Periodic cardinal function of N equispaced nodes (Nyquist split symmetrically).
double cardinal(double t, int N) {
  double h = 0.5 * t;
  double s = std::sin(h);
  if (std::abs(s) < 1e-14) {
    // t near a multiple of 2 pi
    double m = std::round(t / (2.0 * M_PI));
    return (static_cast<long>(m) * N) % 2 == 0 ? 1.0 : -1.0;
  }
  return std::sin(N * h) * std::cos(h) / (N * s);
}

struct NearRule {
  std::vector<double> tau, weight;
};

// Quadrature on [-L, L] for integrands with a log singularity at 0.
NearRule near_rule(double ds, double L) {
  NearRule r;
  constexpr int kGrade = 8;
  const auto& xs = boost::math::quadrature::gauss<double, 24>::abscissa();
  const auto& ws = boost::math::quadrature::gauss<double, 24>::weights();
  const auto& xp = boost::math::quadrature::gauss<double, 20>::abscissa();
  const auto& wp = boost::math::quadrature::gauss<double, 20>::weights();
  auto push = [&](double t, double w) {
    r.tau.push_back(t);
    r.weight.push_back(w);
    r.tau.push_back(-t);
    r.weight.push_back(w);
  };
  auto gauss24 = [&](auto&& f) {
    // boost stores nonnegative abscissae of the symmetric rule
    for (size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] == 0.0) {
        f(0.0, ws[i]);
      } else {
        f(xs[i], ws[i]);
        f(-xs[i], ws[i]);
      }
    }
  };
  const double first = std::min(ds, L);
  gauss24([&](double x, double w) {
    double u = 0.5 * (x + 1.0);
    double t = first * std::pow(u, kGrade);
    double dt = first * kGrade * std::pow(u, kGrade - 1) * 0.5 * w;
    push(t, dt);
  });
  double a = first;
  while (a < L * (1.0 - 1e-14)) {
    double b = std::min(L, a + 2.0 * ds);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < xp.size(); ++i) {
      if (xp[i] == 0.0) {
        push(mid, half * wp[i]);
      } else {
        push(mid + half * xp[i], half * wp[i]);
        push(mid - half * xp[i], half * wp[i]);
      }
    }
    a = b;
  }
  return r;
}

}  // namespace

Eigen::MatrixXd upsample_matrix(int N, int m) {
  Eigen::MatrixXd U(m, N);
  std::vector<double> e(N, 0.0);
  for (int j = 0; j < N; ++j) {
    e[j] = 1.0;
    auto col = fft::resample(e, m);
    for (int i = 0; i < m; ++i) U(i, j) = col[i];
    e[j] = 0.0;
  }
  return U;
}

Eigen::MatrixXd kress_layer_matrix(const BoundaryCurve& c, LayerKind kind) {
  const int N = c.N();
  const double ds = c.ds();
  const auto& X = c.nodes();
  const auto& n = c.normals();
  const auto& phi = c.speed();
  const auto& kap = c.curvature();
  Eigen::MatrixXd A(N, N);
  if (kind == LayerKind::Double) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j) {
          A(i, j) = ds / (2.0 * M_PI) * (-0.5 * kap[i]) * phi[i];
          continue;
        }
        Vec2 d = X[i] - X[j];
        A(i, j) = ds / (2.0 * M_PI) * dot(d, n[j]) / dot(d, d) * phi[j];
      }
    return A;
  }
  const int m = N / 2;
  std::vector<double> R(N);
  for (int d = 0; d < N; ++d) {
    double t = d * M_PI / m;
    double s = 0.0;
    for (int k = 1; k < m; ++k) s += std::cos(k * t) / k;
    R[d] = -2.0 * M_PI / m * s - M_PI / (static_cast<double>(m) * m) * std::cos(m * t);
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const double k1 = -1.0 / (4.0 * M_PI);
      double k2;
      if (i == j) {
        k2 = -std::log(phi[i]) / (2.0 * M_PI);
      } else {
        Vec2 d = X[i] - X[j];
        double sn = std::sin(0.5 * (i - j) * ds);
        k2 = -1.0 / (4.0 * M_PI) * std::log(dot(d, d) / (4.0 * sn * sn));
      }
      A(i, j) = (R[(i - j + N) % N] * k1 + ds * k2) * phi[j];
    }
  return A;
}

Eigen::MatrixXd product_layer_matrix(const BoundaryCurve& c, const KernelSet& ker, LayerKind kind) {
  const int N = c.N();
  const double ds = c.ds();
  const double w = 12.5 / N, tau0 = 6.5 * w;
  double L = 13.0 * w;
  const bool windowed = L < M_PI;
  if (!windowed) L = M_PI;
  auto chi = [&](double t) { return windowed ? 0.5 * std::erfc((std::abs(t) - tau0) / w) : 1.0; };
  NearRule rule = near_rule(ds, L);
  const int Q = static_cast<int>(rule.tau.size());

  // curve Fourier data
  std::vector<cplx> cx(N), cy(N);
  for (int j = 0; j < N; ++j) {
    cx[j] = c.nodes()[j].x;
    cy[j] = c.nodes()[j].y;
  }
  fft::forward(cx);
  fft::forward(cy);

  RowMat C(N, Q);
  std::vector<cplx> dx(N), dy(N), sx(N), sy(N);
  for (int q = 0; q < Q; ++q) {
    const double t = rule.tau[q];
    for (int i = 0; i < N; ++i) {
      int k = fft::wavenumber(i, N);
      double kt = k * t;
      double sh = std::sin(0.5 * kt);
      cplx em1(-2.0 * sh * sh, std::sin(kt));  // exp(i k t) - 1
      cplx e = em1 + 1.0;
      dx[i] = cx[i] * em1;
      dy[i] = cy[i] * em1;
      cplx ik = (2 * k == -N) ? cplx(0.0) : cplx(0.0, k);
      sx[i] = cx[i] * e * ik;
      sy[i] = cy[i] * e * ik;
    }
    fft::inverse(dx);
    fft::inverse(dy);
    fft::inverse(sx);
    fft::inverse(sy);
    const double wq = rule.weight[q] * chi(t);
    for (int i = 0; i < N; ++i) {
      Vec2 diff{-dx[i].real(), -dy[i].real()};  // x_i - y
      Vec2 ys{sx[i].real(), sy[i].real()};
      double sp = norm(ys);
      double r2 = dot(diff, diff);
      double kv;
      if (kind == LayerKind::Single) {
        kv = ker.pde.is_poisson() ? -std::log(r2) / (4.0 * M_PI)
                                  : bessel_k0(ker.pde.alpha * std::sqrt(r2)) / (2.0 * M_PI);
      } else {
        double proj = (diff.x * ys.y - diff.y * ys.x) / sp;
        if (ker.pde.is_poisson()) {
          kv = proj / (2.0 * M_PI * r2);
        } else {
          double r = std::sqrt(r2);
          kv = ker.pde.alpha * bessel_k1(ker.pde.alpha * r) * proj / (2.0 * M_PI * r);
        }
      }
      C(i, q) = wq * kv * sp;
    }
  }
  RowMat T(Q, N);
  for (int q = 0; q < Q; ++q)
    for (int d = 0; d < N; ++d) T(q, d) = cardinal(rule.tau[q] + d * ds, N);
  RowMat B = C * T;

  Eigen::MatrixXd A(N, N);
  for (int i = 0; i < N; ++i)
    for (int d = 0; d < N; ++d) A(i, ((i - d) % N + N) % N) = B(i, d);
  if (windowed) {
    const auto& X = c.nodes();
    const auto& n = c.normals();
    const auto& phi = c.speed();
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j) continue;
        int d = ((j - i) % N + N) % N;
        double t = d * ds;
        if (t > M_PI) t -= 2.0 * M_PI;
        double wgt = 1.0 - chi(t);
        if (wgt == 0.0) continue;
        double kv = kind == LayerKind::Single ? ker.single(X[i], X[j]) : ker.dbl(X[i], X[j], n[j]);
        A(i, j) += ds * wgt * kv * phi[j];
      }
  }
  return A;
}

Eigen::MatrixXd layer_matrix(const BoundaryCurve& c, const KernelSet& k, LayerKind kind) {
  if (k.pde.is_poisson()) return kress_layer_matrix(c, kind);
  return product_layer_matrix(c, k, kind);
}

std::vector<double> singular_selfeval(const BoundaryCurve& c, const std::vector<double>& density, LayerKind kind,
                                      const KernelSet& k) {
  Eigen::MatrixXd A = layer_matrix(c, k, kind);
  Eigen::Map<const Eigen::VectorXd> s(density.data(), static_cast<Eigen::Index>(density.size()));
  Eigen::VectorXd v = A * s;
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::vector<double> layer_eval_trapezoid(const BoundaryCurve& c, const std::vector<double>& density, LayerKind kind,
                                         const KernelSet& k, const std::vector<Vec2>& targets) {
  std::vector<double> out(targets.size(), 0.0);
  const double ds = c.ds();
  for (size_t q = 0; q < targets.size(); ++q) {
    double s = 0.0;
    for (int j = 0; j < c.N(); ++j) {
      double kv = kind == LayerKind::Single ? k.single(targets[q], c.nodes()[j])
                                            : k.dbl(targets[q], c.nodes()[j], c.normals()[j]);
      s += kv * c.speed()[j] * density[j];
    }
    out[q] = s * ds;
  }
  return out;
}

}  // namespace fint
