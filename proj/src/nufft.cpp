#include "fint/nufft.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "fint/fft.hpp"

namespace fint {
namespace {

constexpr int kWidth = 15;
constexpr double kBeta = 2.30 * kWidth;

double es_kernel(double z) {
  double q = 1.0 - z * z;
  return q <= 0.0 ? 0.0 : std::exp(kBeta * (std::sqrt(q) - 1.0));
}

// Fourier transform of the kernel scaled to half-width alpha, at wavenumber k.
double kernel_hat(double k, double alpha) {
  boost::math::quadrature::gauss<double, 150> gl;
  return alpha * gl.integrate([&](double z) { return es_kernel(z) * std::cos(k * alpha * z); }, -1.0, 1.0);
}

}  // namespace

TrigInterpolant2D::TrigInterpolant2D(const std::vector<cplx>& coeffs, int n1, int n2) : n1_(n1), n2_(n2) {
  auto setup = [](int n) {
    Axis a;
    a.n = n;
    a.nf = std::max(2 * n, 2 * kWidth);
    if (a.nf % 2) ++a.nf;
    a.hf = 2.0 * M_PI / a.nf;
    a.alpha = kWidth * a.hf / 2.0;
    return a;
  };
  a1_ = setup(n1);
  a2_ = setup(n2);
  std::vector<double> c1(n1), c2(n2);
  for (int i = 0; i < n1; ++i) c1[i] = a1_.hf / kernel_hat(fft::wavenumber(i, n1), a1_.alpha);
  for (int i = 0; i < n2; ++i) c2[i] = a2_.hf / kernel_hat(fft::wavenumber(i, n2), a2_.alpha);
  fine_.assign(static_cast<size_t>(a1_.nf) * a2_.nf, 0.0);
  for (int j = 0; j < n2; ++j) {
    int k2 = fft::wavenumber(j, n2);
    int jf = k2 < 0 ? k2 + a2_.nf : k2;
    for (int i = 0; i < n1; ++i) {
      int k1 = fft::wavenumber(i, n1);
      int ifn = k1 < 0 ? k1 + a1_.nf : k1;
      fine_[static_cast<size_t>(jf) * a1_.nf + ifn] = coeffs[static_cast<size_t>(j) * n1 + i] * c1[i] * c2[j];
    }
  }
  fft::inverse2(fine_.data(), a1_.nf, a2_.nf);
}

void TrigInterpolant2D::kernel_weights(const Axis& ax, double t, int& l0, double* w) const {
  double x = t / ax.hf;
  l0 = static_cast<int>(std::ceil(x - kWidth / 2.0));
  for (int q = 0; q < kWidth; ++q) w[q] = es_kernel((t - (l0 + q) * ax.hf) / ax.alpha);
}

cplx TrigInterpolant2D::eval_complex(double t1, double t2) const {
  double w1[kWidth], w2[kWidth];
  int l1, l2;
  kernel_weights(a1_, t1, l1, w1);
  kernel_weights(a2_, t2, l2, w2);
  const int nf1 = a1_.nf, nf2 = a2_.nf;
  cplx acc = 0.0;
  for (int q2 = 0; q2 < kWidth; ++q2) {
    int j = ((l2 + q2) % nf2 + nf2) % nf2;
    const cplx* row = &fine_[static_cast<size_t>(j) * nf1];
    cplx racc = 0.0;
    int i0 = ((l1 % nf1) + nf1) % nf1;
    if (i0 + kWidth <= nf1) {
      for (int q1 = 0; q1 < kWidth; ++q1) racc += w1[q1] * row[i0 + q1];
    } else {
      for (int q1 = 0; q1 < kWidth; ++q1) racc += w1[q1] * row[(i0 + q1) % nf1];
    }
    acc += w2[q2] * racc;
  }
  return acc;
}

cplx direct_trig_eval(const std::vector<cplx>& coeffs, int n1, int n2, double t1, double t2) {
  cplx acc = 0.0;
  for (int j = 0; j < n2; ++j) {
    int k2 = fft::wavenumber(j, n2);
    cplx racc = 0.0;
    for (int i = 0; i < n1; ++i) {
      int k1 = fft::wavenumber(i, n1);
      racc += coeffs[static_cast<size_t>(j) * n1 + i] * std::polar(1.0, k1 * t1);
    }
    acc += racc * std::polar(1.0, k2 * t2);
  }
  return acc;
}

}  // namespace fint
