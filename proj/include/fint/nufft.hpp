#pragma once

// Type-2 nonuniform evaluation of 2D trigonometric polynomials.
//
// Coefficients are given in FFT ordering on an n2-by-n1 row-major array and
// describe u(t1, t2) = sum c[k2][k1] exp(i (k1 t1 + k2 t2)) for angles in
// [0, 2pi). Evaluation uses an exponential-of-semicircle kernel on a 2x
// oversampled grid (accuracy close to 1e-14 relative to sum |c|).

#include <vector>

#include "fint/types.hpp"

namespace fint {

class TrigInterpolant2D {
 public:
  TrigInterpolant2D() = default;
  TrigInterpolant2D(const std::vector<cplx>& coeffs, int n1, int n2);

  cplx eval_complex(double t1, double t2) const;
  // Real part; equals the symmetric (Nyquist-split) interpolant for real data.
  double eval(double t1, double t2) const { return eval_complex(t1, t2).real(); }

  int n1() const { return n1_; }
  int n2() const { return n2_; }

 private:
  struct Axis {
    int n = 0, nf = 0;
    double hf = 0.0, alpha = 0.0;
  };
  void kernel_weights(const Axis& ax, double t, int& l0, double* w) const;

  int n1_ = 0, n2_ = 0;
  Axis a1_, a2_;
  std::vector<cplx> fine_;
};

// O(n1 n2) reference evaluation used as a test oracle.
cplx direct_trig_eval(const std::vector<cplx>& coeffs, int n1, int n2, double t1, double t2);

}  // namespace fint
