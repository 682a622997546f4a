#include "fint/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fint/fft.hpp"

namespace fint {

namespace {

constexpr int kReferenceN = 1024;

// Coarsest doubling whose curvature spectrum has decayed: round-off in kappa grows like N^2.
double reference_rmax(const Parametrization& X, const Overrides& o) {
  // a closed curve always has positive curvature somewhere, so the interior bound needs no cap
  double cap = o.rmax_cap ? *o.rmax_cap : std::numeric_limits<double>::infinity();
  for (int n = 32;; n *= 2) {
    auto c = BoundaryCurve::from_function(X, n);
    if (n >= kReferenceN) return compute_rmax(c, Side::Interior, cap);
    std::vector<cplx> k(c.curvature().begin(), c.curvature().end());
    fft::forward(k);
    double head = 0.0, tail = 0.0;
    for (int i = 0; i < n; ++i) {
      double& slot = std::abs(fft::wavenumber(i, n)) < n / 4 ? head : tail;
      slot = std::max(slot, std::abs(k[i]));
    }
    if (tail <= 1e-14 * head) return compute_rmax(c, Side::Interior, cap);
  }
}

void check_common(const Params& p) {
  if (p.M < 4) throw ParameterError("M = " + std::to_string(p.M) + " < 4; decrease h");
  if (!(p.R > 0.0) || p.R >= p.rmax)
    throw ParameterError("annular width R = " + std::to_string(p.R) + " outside (0, R_max = " +
                         std::to_string(p.rmax) + ")");
  if (p.b < 1 || p.b > 200) throw ParameterError("bandwidth b = " + std::to_string(p.b) + " outside [1, 200]");
  if (p.N < 16 || p.N % 2) throw ParameterError("N must be even and >= 16");
  if (!(p.eps > 0.0)) throw ParameterError("tolerance must be positive");
  if (p.max_gmres < 1) throw ParameterError("max_gmres must be at least 1");
}

}  // namespace

double max_node_spacing(const BoundaryCurve& curve, double R) {
  double m = 0.0;
  for (int j = 0; j < curve.N(); ++j) {
    double phi = curve.speed()[j];
    double stretch = std::max(1.0, 1.0 - R * curve.curvature()[j]);
    m = std::max(m, phi * stretch * curve.ds());
  }
  return m;
}

Params select_parameters(const Parametrization& X, double h, const PdeKind& pde, const Overrides& o) {
  (void)pde;
  if (!(h > 0.0)) throw ParameterError("h must be positive");
  Params p;
  p.h = h;
  p.rmax = reference_rmax(X, o);
  p.R = o.R ? *o.R : 0.5 * p.rmax;
  if (p.R >= p.rmax) throw ParameterError("R >= R_max");
  if (o.N) {
    p.N = *o.N;
  } else {
    // Spacing bound from the dense reference, then verified on the actual nodes.
    auto ref = BoundaryCurve::from_function(X, kReferenceN);
    double L = max_node_spacing(ref, p.R) / ref.ds();
    int n = 2 * static_cast<int>(std::ceil(2.0 * M_PI * L / h / 2.0));
    n = std::max(n, 16);
    while (max_node_spacing(BoundaryCurve::from_function(X, n), p.R) >= h) n += 2;
    p.N = n;
  }
  p.M = o.M ? *o.M : static_cast<int>(std::ceil(M_PI * p.R / (2.0 * h) - 1e-12));
  p.b = o.b ? *o.b : static_cast<int>(std::ceil(2.0 * p.R / h - 1e-12));
  if (o.eps) p.eps = *o.eps;
  if (o.max_gmres) p.max_gmres = *o.max_gmres;
  check_common(p);
  return p;
}

Params fixed_m_parameters(const Parametrization& X, int N, int M, const PdeKind& pde, const Overrides& o) {
  (void)pde;
  Params p;
  p.N = o.N ? *o.N : N;
  if (p.N < 16 || p.N % 2) throw ParameterError("N must be even and >= 16");
  auto curve = BoundaryCurve::from_function(X, p.N);
  double hmin = curve.h_min();
  p.M = o.M ? *o.M : M;
  p.rmax = reference_rmax(X, o);
  p.R = o.R ? *o.R : p.M * hmin;
  p.h = 0.5 * hmin;
  p.b = o.b ? *o.b : static_cast<int>(std::ceil(1.5 * p.M));
  if (o.eps) p.eps = *o.eps;
  if (o.max_gmres) p.max_gmres = *o.max_gmres;
  check_common(p);
  return p;
}

Params proportional_parameters(const Parametrization& X, int N, double gamma, const PdeKind& pde,
                               const Overrides& o) {
  int M = std::clamp(static_cast<int>(std::floor(gamma * N / 100.0 + 1e-12)), 4, 40);
  return fixed_m_parameters(X, N, M, pde, o);
}

}  // namespace fint
