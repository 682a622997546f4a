#pragma once

#include <optional>

#include "fint/bie.hpp"
#include "fint/curve.hpp"
#include "fint/pde.hpp"
#include "fint/qfs.hpp"
#include "fint/step.hpp"

namespace fint {

struct Overrides {
  std::optional<double> R;
  std::optional<int> N, M, b;
  std::optional<double> eps;
  std::optional<double> rmax_cap;
  std::optional<int> max_gmres;
};

struct Params {
  double h = 0.0;      // regular grid spacing
  double R = 0.0;      // annular width
  double rmax = 0.0;   // coordinate-validity bound used for the checks
  int N = 0, M = 0, b = 0;
  double eps = 1e-14;
  int max_gmres = 200;
  BieMode bie_mode = BieMode::Dense;
  StepProfile profile = StepProfile::Prolate;
  QfsOptions qfs;
};

// Default policy: R = R_max/2, N from the spacing bound, M = ceil(pi R/(2h)), b = ceil(2R/h).
Params select_parameters(const Parametrization& X, double h, const PdeKind& pde, const Overrides& o = {});

// Fixed-M study: R = M h_min, h = h_min/2, b = ceil(1.5 M).
Params fixed_m_parameters(const Parametrization& X, int N, int M, const PdeKind& pde, const Overrides& o = {});

// Proportional study: M = floor(gamma N / 100) clamped to [4, 40], otherwise as fixed-M.
Params proportional_parameters(const Parametrization& X, int N, double gamma, const PdeKind& pde,
                               const Overrides& o = {});

// Largest boundary and interface node spacing for a curve at annular width R.
double max_node_spacing(const BoundaryCurve& curve, double R);

}  // namespace fint
