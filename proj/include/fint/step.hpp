#pragma once

// Regularized Heaviside H on [0, 1] built from the antiderivative of the
// first prolate spheroidal wave function with bandwidth parameter c = pi b / 4
// (the continuous limit of the discrete prolate sequence with NW = b/4).

#include <memory>
#include <vector>

namespace fint {

enum class StepProfile { Prolate, Erf };

class StepFunction {
 public:
  StepFunction(int b, StepProfile profile = StepProfile::Prolate);
  // Cached instance per (b, profile).
  static std::shared_ptr<const StepFunction> get(int b, StepProfile profile = StepProfile::Prolate);

  int bandwidth() const { return b_; }
  // H(x), clamped to 0 below x = 0 and 1 above x = 1.
  double H(double x) const;
  // dH/dx on [0, 1]; zero outside.
  double dH(double x) const;
  // Bump profile on [-1, 1] normalized to unit integral; zero outside.
  double bump(double y) const;

  const std::vector<double>& step_coeffs() const { return Hc_; }
  const std::vector<double>& bump_coeffs() const { return bc_; }

 private:
  int b_;
  std::vector<double> Hc_;  // Chebyshev coefficients of H in y = 2x - 1
  std::vector<double> bc_;  // Chebyshev coefficients of the bump in y
};

// Legendre coefficients (normalized basis, even degrees 0, 2, 4, ...) of the
// first prolate function for bandwidth c, with psi(0) > 0.
std::vector<double> prolate0_legendre(double c, int nterms);
// Evaluate a series in normalized even Legendre polynomials.
double even_legendre_eval(const std::vector<double>& beta, double x);

}  // namespace fint
