#include "fint/curve.hpp"

#include <algorithm>
#include <cmath>

#include "fint/fft.hpp"

namespace fint {
namespace {

std::vector<double> component(const std::vector<Vec2>& v, bool y) {
  std::vector<double> c(v.size());
  for (size_t i = 0; i < v.size(); ++i) c[i] = y ? v[i].y : v[i].x;
  return c;
}

}  // namespace

BoundaryCurve BoundaryCurve::from_samples(std::vector<Vec2> nodes) {
  const int N = static_cast<int>(nodes.size());
  if (N < 16 || N % 2) throw ParameterError("boundary node count must be even and at least 16");
  BoundaryCurve c;
  c.X_ = std::move(nodes);
  c.finish();
  return c;
}

BoundaryCurve BoundaryCurve::from_function(const Parametrization& X, int N) {
  if (N < 16 || N % 2) throw ParameterError("boundary node count must be even and at least 16");
  std::vector<Vec2> nodes(N);
  for (int j = 0; j < N; ++j) nodes[j] = X(2.0 * M_PI * j / N);
  Vec2 end = X(2.0 * M_PI);
  double diam = 0.0;
  for (int j = 0; j < N; ++j) diam = std::max(diam, norm(nodes[j] - nodes[0]));
  if (norm(end - nodes[0]) > 1e-8 * std::max(diam, 1e-300))
    throw ParameterError("parametrization is not closed");
  return from_samples(std::move(nodes));
}

void BoundaryCurve::finish() {
  const int N = static_cast<int>(X_.size());
  auto x = component(X_, false), y = component(X_, true);
  auto xs = fft::diff(x, 1), ys = fft::diff(y, 1);
  auto xss = fft::diff(x, 2), yss = fft::diff(y, 2);
  Xs_.resize(N);
  Xss_.resize(N);
  n_.resize(N);
  phi_.resize(N);
  kappa_.resize(N);
  for (int j = 0; j < N; ++j) {
    CurvePoint p{X_[j], {xs[j], ys[j]}, {xss[j], yss[j]}};
    Xs_[j] = p.Xs;
    Xss_[j] = p.Xss;
    phi_[j] = p.speed();
    if (!(phi_[j] > 0.0)) throw ParameterError("curve has zero speed");
    n_[j] = p.normal();
    kappa_[j] = p.curvature();
  }
  double ext = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; j += std::max(1, N / 256)) ext = std::max(ext, norm(X_[i] - X_[j]));
  diameter_ = ext;
  if (signed_area() <= 0.0) throw ParameterError("curve must be counter-clockwise");

  std::vector<cplx> cx(x.begin(), x.end()), cy(y.begin(), y.end());
  fft::forward(cx);
  fft::forward(cy);
  double mx = 0.0;
  for (int i = 0; i < N; ++i) mx = std::max({mx, std::abs(cx[i]), std::abs(cy[i])});
  modes_.clear();
  // round-off noise sits near 1e-16 relative; keeping it would make every off-node evaluation O(N)
  for (int i = 0; i < N; ++i)
    if (std::abs(cx[i]) > 1e-15 * mx || std::abs(cy[i]) > 1e-15 * mx)
      modes_.push_back({fft::wavenumber(i, N), cx[i], cy[i]});
}

int BoundaryCurve::bandwidth() const {
  int b = 0;
  for (const auto& m : modes_) b = std::max(b, std::abs(m.k));
  return b;
}

double BoundaryCurve::h_min() const {
  return *std::min_element(phi_.begin(), phi_.end()) * ds();
}

double BoundaryCurve::h_max() const {
  return *std::max_element(phi_.begin(), phi_.end()) * ds();
}

double BoundaryCurve::signed_area() const {
  double a = 0.0;
  for (int j = 0; j < N(); ++j) a += X_[j].x * Xs_[j].y - X_[j].y * Xs_[j].x;
  return 0.5 * a * ds();
}

CurvePoint BoundaryCurve::eval(double s) const {
  cplx x = 0.0, y = 0.0, xs = 0.0, ys = 0.0, xss = 0.0, yss = 0.0;
  for (const auto& m : modes_) {
    cplx e = std::polar(1.0, m.k * s);
    cplx ik(0.0, m.k);
    x += m.cx * e;
    y += m.cy * e;
    if (2 * m.k != -N()) {
      xs += ik * m.cx * e;
      ys += ik * m.cy * e;
    }
    xss += ik * ik * m.cx * e;
    yss += ik * ik * m.cy * e;
  }
  return {{x.real(), y.real()}, {xs.real(), ys.real()}, {xss.real(), yss.real()}};
}

BoundaryCurve BoundaryCurve::offset(double r) const {
  std::vector<Vec2> pts(N());
  for (int j = 0; j < N(); ++j) pts[j] = X_[j] + r * n_[j];
  return from_samples(std::move(pts));
}

BoundaryCurve BoundaryCurve::resampled(int M) const {
  auto x = fft::resample(component(X_, false), M), y = fft::resample(component(X_, true), M);
  std::vector<Vec2> pts(M);
  for (int j = 0; j < M; ++j) pts[j] = {x[j], y[j]};
  return from_samples(std::move(pts));
}

double default_rmax_cap(const BoundaryCurve& curve) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (auto p : curve.nodes()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return 0.25 * std::hypot(x1 - x0, y1 - y0);
}

double compute_rmax(const BoundaryCurve& curve, Side side, double cap) {
  // upsample the curvature itself; differentiating at 16N would amplify round-off by 256 N^2
  auto k = fft::resample(curve.curvature(), 16 * curve.N());
  double value = cap;
  if (side == Side::Interior) {
    double kmax = *std::max_element(k.begin(), k.end());
    if (kmax > 0.0) value = 1.0 / kmax;
  } else {
    double kmin = *std::min_element(k.begin(), k.end());
    if (kmin < 0.0) value = -1.0 / kmin;
  }
  return std::min(value, cap);
}

namespace shapes {

Parametrization circle(double xc, double yc, double r) {
  return [=](double s) { return Vec2{xc + r * std::cos(s), yc + r * std::sin(s)}; };
}

Parametrization ellipse(double a, double b) {
  return [=](double s) { return Vec2{a * std::cos(s), b * std::sin(s)}; };
}

Parametrization star(double a, int d, double r, double xc, double yc) {
  return [=](double s) {
    double w = r * (1.0 + a * std::cos(d * s));
    return Vec2{xc + w * std::cos(s), yc + w * std::sin(s)};
  };
}

Parametrization kite() {
  return [](double s) { return Vec2{std::cos(s) + 0.65 * std::cos(2.0 * s) - 0.65, 1.5 * std::sin(s)}; };
}

}  // namespace shapes
}  // namespace fint
