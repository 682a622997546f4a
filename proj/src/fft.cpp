#include "fint/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace fint::fft {
namespace {

using Key = std::tuple<int, int, int, int, int, int>;

std::mutex plan_mutex;

fftw_plan plan_for(int rank, int n0, int n1, int howmany, int stride, int dist, int sign) {
  static std::map<Key, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  Key key{rank == 1 ? n0 : -n0 * 100000 - n1, howmany, stride, dist, sign, rank};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int total = rank == 1 ? n0 : n0 * n1;
  size_t span = rank == 1 ? static_cast<size_t>(howmany - 1) * dist + static_cast<size_t>(n0 - 1) * stride + 1
                          : static_cast<size_t>(total);
  fftw_complex* tmp = fftw_alloc_complex(span);
  fftw_plan p;
  unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  if (rank == 1) {
    int n[1] = {n0};
    p = fftw_plan_many_dft(1, n, howmany, tmp, nullptr, stride, dist, tmp, nullptr, stride, dist, sign, flags);
  } else {
    p = fftw_plan_dft_2d(n0, n1, tmp, tmp, sign, flags);
  }
  fftw_free(tmp);
  cache.emplace(key, p);
  return p;
}

void run1(cplx* data, int n, int howmany, int stride, int dist, int sign) {
  if (dist == 0) dist = n * stride;
  fftw_plan p = plan_for(1, n, 0, howmany, stride, dist, sign);
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, d, d);
}

}  // namespace

void forward(cplx* data, int n, int howmany, int stride, int dist) {
  run1(data, n, howmany, stride, dist, FFTW_FORWARD);
  if (dist == 0) dist = n * stride;
  const double s = 1.0 / n;
  for (int b = 0; b < howmany; ++b)
    for (int i = 0; i < n; ++i) data[static_cast<size_t>(b) * dist + static_cast<size_t>(i) * stride] *= s;
}

void inverse(cplx* data, int n, int howmany, int stride, int dist) {
  run1(data, n, howmany, stride, dist, FFTW_BACKWARD);
}

void forward2(cplx* data, int nx, int ny) {
  fftw_plan p = plan_for(2, ny, nx, 1, 1, 1, FFTW_FORWARD);
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, d, d);
  const double s = 1.0 / (static_cast<double>(nx) * ny);
  for (size_t i = 0; i < static_cast<size_t>(nx) * ny; ++i) data[i] *= s;
}

void inverse2(cplx* data, int nx, int ny) {
  fftw_plan p = plan_for(2, ny, nx, 1, 1, 1, FFTW_BACKWARD);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data), reinterpret_cast<fftw_complex*>(data));
}

std::vector<double> resample(const std::vector<double>& v, int m) {
  const int n = static_cast<int>(v.size());
  std::vector<cplx> c(v.begin(), v.end());
  forward(c);
  std::vector<cplx> out(m, 0.0);
  for (int i = 0; i < n; ++i) {
    int k = wavenumber(i, n);
    if (2 * k == -n && m > n) {
      // split the Nyquist coefficient symmetrically
      out[k + m] += 0.5 * c[i];
      out[-k] += 0.5 * c[i];
      continue;
    }
    out[k < 0 ? k + m : k] += c[i];
  }
  inverse(out);
  std::vector<double> r(m);
  for (int i = 0; i < m; ++i) r[i] = out[i].real();
  return r;
}

std::vector<double> diff(const std::vector<double>& v, int order) {
  const int n = static_cast<int>(v.size());
  std::vector<cplx> c(v.begin(), v.end());
  forward(c);
  for (int i = 0; i < n; ++i) {
    int k = wavenumber(i, n);
    if (2 * k == -n && order % 2 == 1) {
      c[i] = 0.0;
      continue;
    }
    c[i] *= std::pow(cplx(0.0, k), order);
  }
  inverse(c);
  std::vector<double> r(n);
  for (int i = 0; i < n; ++i) r[i] = c[i].real();
  return r;
}

}  // namespace fint::fft
