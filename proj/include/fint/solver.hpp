#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fint/annular.hpp"
#include "fint/bie.hpp"
#include "fint/coupling.hpp"
#include "fint/cutoff.hpp"
#include "fint/grid.hpp"
#include "fint/kernels.hpp"
#include "fint/params.hpp"
#include "fint/problems.hpp"
#include "fint/qfs.hpp"

namespace fint {

// Everything that depends on the domain and parameters but not on (f, g).
struct SolverContext {
  Params params;
  PdeKind pde;
  KernelSet kernels;
  BoundaryCurve curve;
  AnnularGrid annulus;
  RegularGrid grid;
  GridClassification cls;
  std::shared_ptr<const StepFunction> step;
  std::vector<double> eta;          // on grid nodes
  std::vector<double> xi;           // empty unless the PDE has a nullspace
  Vec2 bump_center{};
  std::shared_ptr<const AnnularOperator> op;
  std::shared_ptr<const CircularPreconditioner> pre;
  EffectiveSource interface_in;     // evaluates into the faithful region
  EffectiveSource interface_out;    // evaluates into the annulus
  EffectiveSource boundary_in;      // evaluates into the domain
  HomogeneousBie bie;
  double setup_seconds = 0.0;

  std::uint64_t fingerprint() const;
};

SolverContext setup(const Parametrization& X, const Params& params, const PdeKind& pde);

struct Diagnostics {
  int gmres_iters = 0;
  std::vector<double> gmres_history;
  int bie_iters = 0;
  double trace_residual = 0.0;  // max |u - g| at the boundary nodes
  double solve_seconds = 0.0;
  std::vector<std::pair<std::string, double>> stage_seconds;
};

struct Solution {
  const SolverContext* ctx = nullptr;
  SpectralField2D u_r;
  std::vector<double> u_grid;   // every grid node; zero outside the domain
  AnnularField annular;         // final u on the tensor nodes
  JumpData jumps;
  Eigen::VectorXd zeta_in, zeta_out, zeta_boundary;
  std::vector<double> zeta_h;
  Diagnostics diag;
};

Solution solve(const SolverContext& ctx, const ScalarFn& f, const ScalarFn& g);

// Classifies each point and evaluates the solution there; rejects points outside the domain.
std::vector<double> evaluate_solution(const Solution& s, const std::vector<Vec2>& points);

struct ErrorMetrics {
  double linf = 0.0, l2 = 0.0;
  double linf_rel = 0.0, l2_rel = 0.0;
};

ErrorMetrics error_report(const Solution& s, const ScalarFn& reference);

}  // namespace fint
