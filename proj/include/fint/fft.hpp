#pragma once

// Thin FFTW wrappers. Forward transforms carry the 1/n normalization so that
// coefficients are Fourier-series coefficients; inverse transforms are plain sums.

#include <vector>

#include "fint/types.hpp"

namespace fint::fft {

// Batched 1D complex transforms of length n. Element (b, i) sits at data[b*dist + i*stride].
void forward(cplx* data, int n, int howmany = 1, int stride = 1, int dist = 0);
void inverse(cplx* data, int n, int howmany = 1, int stride = 1, int dist = 0);

inline void forward(std::vector<cplx>& v) { forward(v.data(), static_cast<int>(v.size())); }
inline void inverse(std::vector<cplx>& v) { inverse(v.data(), static_cast<int>(v.size())); }

// 2D complex transforms on a row-major ny-by-nx array.
void forward2(cplx* data, int nx, int ny);
void inverse2(cplx* data, int nx, int ny);

// Signed integer wavenumber of FFT index i for length n, in [-n/2, n/2).
inline int wavenumber(int i, int n) { return i < (n + 1) / 2 ? i : i - n; }

// Trigonometric interpolation of n periodic samples onto m >= n equispaced samples.
std::vector<double> resample(const std::vector<double>& v, int m);

// Spectral derivative of periodic samples on [0, 2pi); Nyquist mode dropped for odd orders.
std::vector<double> diff(const std::vector<double>& v, int order = 1);

}  // namespace fint::fft
