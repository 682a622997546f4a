#include "fint/solver.hpp"

#include <chrono>
#include <cmath>
#include <cstring>

#include "fint/chebyshev.hpp"
#include "fint/gridsolve.hpp"

namespace fint {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void bytes(const void* p, size_t n) {
    auto c = static_cast<const unsigned char*>(p);
    for (size_t i = 0; i < n; ++i) h = (h ^ c[i]) * 1099511628211ull;
  }
  template <class T>
  void vec(const std::vector<T>& v) {
    if (!v.empty()) bytes(v.data(), v.size() * sizeof(T));
  }
};

// Runs one pipeline stage, tagging any failure with the stage name.
template <class F>
auto stage(const char* name, std::vector<std::pair<std::string, double>>& log, F&& fn) {
  auto t0 = Clock::now();
  try {
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      log.emplace_back(name, seconds_since(t0));
    } else {
      auto r = fn();
      log.emplace_back(name, seconds_since(t0));
      return r;
    }
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string(name) + ": " + e.what(), e.history());
  } catch (const ParameterError& e) {
    throw ParameterError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

std::uint64_t SolverContext::fingerprint() const {
  Fnv f;
  f.vec(eta);
  f.vec(xi);
  f.vec(cls.label);
  f.vec(cls.annulus);
  f.vec(cls.faithful);
  f.vec(annulus.x);
  f.vec(annulus.psi);
  f.vec(curve.nodes());
  f.vec(interface_in.sources());
  f.vec(interface_out.sources());
  f.vec(boundary_in.sources());
  const auto& A = bie.matrix();
  f.bytes(A.data(), sizeof(double) * A.size());
  for (int k = 0; k <= annulus.N() / 2; ++k) {
    const auto& m = pre->mode_matrix(k);
    f.bytes(m.data(), sizeof(double) * m.size());
  }
  f.bytes(&params, sizeof(double) * 3);
  return f.h;
}

SolverContext setup(const Parametrization& X, const Params& params, const PdeKind& pde) {
  auto t0 = Clock::now();
  SolverContext c;
  c.params = params;
  c.pde = pde;
  c.kernels = KernelSet{pde};
  c.curve = BoundaryCurve::from_function(X, params.N);
  c.annulus = build_annulus(c.curve, params.R, params.M, Side::Interior, params.rmax);
  c.step = StepFunction::get(params.b, params.profile);

  BumpPlacement bump = default_bump_placement(params.R, params.M, params.h);
  double wiggle = pde.has_nullspace() ? bump.wiggle() : 0.0;
  c.grid = build_computational_domain(c.curve, params.h, wiggle);
  c.cls = classify_points(c.annulus, c.grid.geom, params.rmax);
  c.eta = eval_eta(c.cls, c.annulus, *c.step);
  if (pde.has_nullspace()) {
    c.bump_center = bump_center(c.curve, bump);
    c.xi = build_bump_xi(c.grid.geom, c.bump_center, bump.radius, *c.step, &c.cls);
  }

  QfsOptions qo = params.qfs;
  qo.tol = params.eps;
  if (!pde.is_poisson()) qo.upsample = std::max(qo.upsample, static_cast<int>(std::ceil(params.h * pde.alpha)));
  c.boundary_in = EffectiveSource(c.curve, EvalSide::Inside, c.kernels, qo);
  c.interface_in = EffectiveSource(c.annulus.interface, EvalSide::Inside, c.kernels, qo);
  c.interface_out = EffectiveSource(c.annulus.interface, EvalSide::Outside, c.kernels, qo);
  c.bie = HomogeneousBie(c.curve, c.kernels, params.bie_mode);

  c.op = std::make_shared<AnnularOperator>(c.annulus, pde);
  c.pre = std::make_shared<CircularPreconditioner>(c.annulus, pde);
  c.setup_seconds = seconds_since(t0);
  return c;
}

Solution solve(const SolverContext& ctx, const ScalarFn& f, const ScalarFn& g) {
  auto t0 = Clock::now();
  Solution s;
  s.ctx = &ctx;
  auto& log = s.diag.stage_seconds;
  const GridGeom& geom = ctx.grid.geom;
  const auto& cls = ctx.cls;

  auto fI = stage("intend", log, [&] {
    std::vector<double> fg(geom.size(), 0.0);
    for (size_t i : cls.faithful) fg[i] = f(geom.node(i));
    for (size_t i : cls.annulus) fg[i] = f(geom.node(i));
    auto field = intend(geom, fg, ctx.eta, cls);
    return ctx.pde.has_nullspace() ? enforce_mean_zero(field, ctx.xi) : field;
  });

  s.u_r = stage("regular", log, [&] { return solve_regular(fI, ctx.pde); });

  auto ua = stage("annular", log, [&] {
    std::vector<double> fa(ctx.annulus.x.size());
    for (size_t q = 0; q < fa.size(); ++q) fa[q] = f(ctx.annulus.x[q]);
    return solve_annular(ctx.annulus, *ctx.op, *ctx.pre, fa, ctx.params.eps, ctx.params.max_gmres);
  });
  s.diag.gmres_iters = ua.iterations;
  s.diag.gmres_history = ua.history;

  s.jumps = stage("jumps", log, [&] { return compute_jumps(s.u_r, ua.u, ctx.annulus); });

  auto ui = stage("stitch", log, [&] {
    return stitch(s.u_r, ua.u, s.jumps, ctx.interface_in, ctx.interface_out, ctx.annulus, cls, geom);
  });
  s.zeta_in = ui.zeta_in;
  s.zeta_out = ui.zeta_out;

  std::vector<double> gvals(ctx.curve.N());
  stage("homogeneous", log, [&] {
    // the layer correction is evaluated on Gamma directly; extrapolating its
    // degree M-1 interpolant would leave an error that does not shrink with N
    auto trace = chebyshev_edge_interpolate(ua.u, Edge::Gamma, 0);
    auto vg = ctx.interface_out.eval(ui.zeta_out, ctx.curve.nodes());
    for (size_t j = 0; j < trace.size(); ++j) trace[j] -= vg[j];
    std::vector<double> data(trace.size());
    for (int j = 0; j < ctx.curve.N(); ++j) {
      gvals[j] = g(ctx.curve.nodes()[j]);
      data[j] = gvals[j] - trace[j];
    }
    s.zeta_h = ctx.bie.solve(data, &s.diag.bie_iters);
    s.zeta_boundary = apply_homogeneous_correction(ui, s.zeta_h, ctx.boundary_in, ctx.annulus, cls, geom);
    auto uh = ctx.boundary_in.eval(s.zeta_boundary, ctx.curve.nodes());
    double m = 0.0;
    for (size_t j = 0; j < trace.size(); ++j) m = std::max(m, std::abs(trace[j] - uh[j] - gvals[j]));
    s.diag.trace_residual = m;
  });

  stage("finalize", log, [&] {
    s.annular = std::move(ui.annular);
    s.u_grid.assign(geom.size(), 0.0);
    for (size_t q = 0; q < cls.faithful.size(); ++q) s.u_grid[cls.faithful[q]] = ui.faithful[q];
    auto va = finalize_on_grid(s.annular, cls);
    for (size_t q = 0; q < cls.annulus.size(); ++q) s.u_grid[cls.annulus[q]] = va[q];
  });

  s.diag.solve_seconds = seconds_since(t0);
  return s;
}

std::vector<double> evaluate_solution(const Solution& s, const std::vector<Vec2>& points) {
  const SolverContext& ctx = *s.ctx;
  std::vector<AnnularPoint> coords;
  auto lab = classify_arbitrary(ctx.annulus, points, coords);
  std::vector<double> out(points.size(), 0.0);
  std::vector<Vec2> fp;
  std::vector<size_t> fi;
  std::vector<AnnularPoint> ap;
  std::vector<size_t> ai;
  for (size_t q = 0; q < points.size(); ++q) {
    switch (lab[q]) {
      case Region::Exterior:
        throw ParameterError("evaluation point outside the domain");
      case Region::Faithful:
        fp.push_back(points[q]);
        fi.push_back(q);
        break;
      case Region::Annulus:
        ap.push_back(coords[q]);
        ai.push_back(q);
        break;
    }
  }
  if (!fp.empty()) {
    auto ur = nudft2_interpolate(s.u_r, fp);
    auto vin = ctx.interface_in.eval(s.zeta_in, fp);
    auto vb = ctx.boundary_in.eval(s.zeta_boundary, fp);
    for (size_t q = 0; q < fp.size(); ++q) out[fi[q]] = ur[q] - vin[q] - vb[q];
  }
  if (!ap.empty()) {
    auto va = annular_interpolate(s.annular, ap);
    for (size_t q = 0; q < ap.size(); ++q) out[ai[q]] = va[q];
  }
  return out;
}

ErrorMetrics error_report(const Solution& s, const ScalarFn& reference) {
  const SolverContext& ctx = *s.ctx;
  const GridGeom& geom = ctx.grid.geom;
  ErrorMetrics m;
  double umax = 0.0, e2 = 0.0, u2 = 0.0;
  auto add = [&](double u, double ref, double w) {
    double e = std::abs(u - ref);
    m.linf = std::max(m.linf, e);
    umax = std::max(umax, std::abs(ref));
    e2 += w * e * e;
    u2 += w * ref * ref;
  };
  const double h2 = geom.h * geom.h;
  for (size_t i : ctx.cls.faithful) add(s.u_grid[i], reference(geom.node(i)), h2);
  for (size_t i : ctx.cls.annulus) add(s.u_grid[i], reference(geom.node(i)), 0.0);
  const auto& A = ctx.annulus;
  auto fw = cheb::fejer_weights(A.M);
  const double ds = 2.0 * M_PI / A.N();
  for (int j = 0; j < A.N(); ++j)
    for (int k = 0; k < A.M; ++k) {
      size_t q = static_cast<size_t>(j) * A.M + k;
      add(s.annular.values[q], reference(A.x[q]), A.psi[q] * ds * 0.5 * A.R * fw[k]);
    }
  m.l2 = std::sqrt(e2);
  m.l2_rel = u2 > 0.0 ? m.l2 / std::sqrt(u2) : m.l2;
  m.linf_rel = umax > 0.0 ? m.linf / umax : m.linf;
  return m;
}

}  // namespace fint
