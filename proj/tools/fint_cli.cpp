// Command-line front end: solve, converge, selftest, classify.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "fint/bie.hpp"
#include "fint/io.hpp"
#include "fint/layer.hpp"
#include "fint/solver.hpp"

using namespace fint;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParameter = 2, kConvergence = 3 };

struct Run {
  SolverContext ctx;
  Solution sol;
  ErrorMetrics err;
};

void write_diagnostics(const fs::path& file, const Run& r) {
  nlohmann::json j;
  j["gmres_iters"] = r.sol.diag.gmres_iters;
  j["gmres_history"] = r.sol.diag.gmres_history;
  j["bie_iters"] = r.sol.diag.bie_iters;
  j["trace_residual"] = r.sol.diag.trace_residual;
  j["setup_seconds"] = r.ctx.setup_seconds;
  j["solve_seconds"] = r.sol.diag.solve_seconds;
  for (const auto& [name, t] : r.sol.diag.stage_seconds) j["stage_seconds"][name] = t;
  j["err_linf"] = r.err.linf;
  j["err_l2_rel"] = r.err.l2_rel;
  std::ofstream(file) << j.dump(2) << '\n';
}

void dump_fields(const fs::path& dir, const Run& r, const Problem& prob) {
  const auto& g = r.ctx.grid.geom;
  std::vector<double> err(g.size(), 0.0);
  for (size_t i = 0; i < g.size(); ++i)
    if (r.ctx.cls.label[i] != Region::Exterior) err[i] = std::abs(r.sol.u_grid[i] - prob.u(g.node(i)));
  write_field(dir / "u.fld", field_of(g, r.sol.u_grid));
  write_field(dir / "err.fld", field_of(g, err));
  write_mask(dir / "mask.u8", r.ctx.cls.label);
  write_jumps(dir / "jumps.csv", r.ctx, r.sol.jumps);
  write_diagnostics(dir / "diagnostics.json", r);
  std::ofstream curve(dir / "curve.csv");
  curve << "x,y\n";
  curve.precision(17);
  for (auto p : r.ctx.curve.nodes()) curve << p.x << ',' << p.y << '\n';
}

Run run_one(const Parametrization& X, const Params& p, const Problem& prob) {
  Run r;
  r.ctx = setup(X, p, prob.pde);
  r.sol = solve(r.ctx, prob.f, prob.u);
  r.err = error_report(r.sol, prob.u);
  return r;
}

void print_row(const ResultRow& r) {
  std::printf("h=%-9.4g N=%-5d M=%-3d grid=%dx%d b=%-3d linf=%.3e l2rel=%.3e gmres=%d setup=%.2fs solve=%.2fs\n", r.h,
              r.N, r.M, r.Nx, r.Ny, r.b, r.err_linf, r.err_l2_rel, r.gmres_iters_annular, r.t_setup_s, r.t_solve_s);
}

int selftest() {
  int failed = 0;
  auto check = [&](const char* name, double value, double tol) {
    bool ok = std::isfinite(value) && value <= tol;
    failed += !ok;
    std::printf("%s %-40s %.3e (tol %.1e)\n", ok ? "PASS" : "FAIL", name, value, tol);
  };
  auto star = BoundaryCurve::from_function(shapes::star(), 256);
  KernelSet lap{PdeKind::poisson()};

  auto D = layer_matrix(star, lap, LayerKind::Double);
  double gauss = 0.0;
  for (int i = 0; i < star.N(); ++i) gauss = std::max(gauss, std::abs(D.row(i).sum() + 0.5));
  check("gauss identity on-surface", gauss, 1e-11);

  HomogeneousBie bie(star, lap);
  auto z = bie.solve(std::vector<double>(star.N(), 1.0));
  std::vector<double> zero(z.size(), 0.0);
  EffectiveSource src(star, EvalSide::Inside, lap);
  auto zz = src.solve(zero, z);
  std::vector<Vec2> pts = {{0.0, 0.0}, {0.5, 0.2}, {0.99, 0.0}};
  auto v = src.eval(zz, pts);
  double c = 0.0;
  for (double x : v) c = std::max(c, std::abs(-x - 1.0));
  check("constant dirichlet data", c, 1e-12);

  auto step = StepFunction::get(12);
  check("step H(0)", std::abs(step->H(0.0)), 1e-13);
  check("step H(1) - 1", std::abs(step->H(1.0) - 1.0), 1e-13);
  check("step H(1/2) - 1/2", std::abs(step->H(0.5) - 0.5), 1e-13);

  auto prob = smooth_poisson();
  auto p = select_parameters(shapes::star(), 0.05, prob.pde);
  auto r = run_one(shapes::star(), p, prob);
  const auto& cls = r.ctx.cls;
  double part = std::abs(double(cls.exterior.size() + cls.annulus.size() + cls.faithful.size()) -
                         double(r.ctx.grid.geom.size()));
  check("classification partition", part, 0.0);
  check("coarse manufactured solve", r.err.linf, 1e-3);
  check("annular gmres iterations", r.sol.diag.gmres_iters, 30);
  std::printf("%d check(s) failed\n", failed);
  return failed ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fint: embedded-boundary spectral solver by function intension"};
  app.require_subcommand(1);

  std::string config;
  std::string out_override;
  double h_override = 0.0;

  auto* solve_cmd = app.add_subcommand("solve", "solve one problem and dump fields");
  solve_cmd->add_option("-c,--config", config, "JSON config")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--spacing", h_override, "grid spacing (overrides the config)");
  solve_cmd->add_option("-o,--output", out_override, "output directory");

  std::string study = "policy";
  std::vector<int> n_list;
  int fixed_m = 8;
  double gamma = 2.0;
  auto* conv_cmd = app.add_subcommand("converge", "sweep resolutions and write results.csv");
  conv_cmd->add_option("-c,--config", config, "JSON config")->required()->check(CLI::ExistingFile);
  conv_cmd->add_option("--study", study, "policy | fixed_m | proportional")
      ->check(CLI::IsMember({"policy", "fixed_m", "proportional"}));
  conv_cmd->add_option("--N", n_list, "boundary node counts (fixed_m, proportional)");
  conv_cmd->add_option("--M", fixed_m, "Chebyshev modes for fixed_m");
  conv_cmd->add_option("--gamma", gamma, "percentage for proportional");
  conv_cmd->add_option("-o,--output", out_override, "output directory");

  auto* self_cmd = app.add_subcommand("selftest", "run quick invariant checks");

  auto* cls_cmd = app.add_subcommand("classify", "dump grid classification");
  cls_cmd->add_option("-c,--config", config, "JSON config")->required()->check(CLI::ExistingFile);
  cls_cmd->add_option("--spacing", h_override, "grid spacing (overrides the config)");
  cls_cmd->add_option("-o,--output", out_override, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (self_cmd->parsed()) return selftest();

    RunConfig cfg = load_config(config);
    if (h_override > 0.0) cfg.h_list = {h_override};
    fs::path out = out_override.empty() ? fs::path(cfg.output_dir) : fs::path(out_override);
    fs::create_directories(out);
    auto X = make_curve(cfg.curve);
    Problem prob = make_problem(cfg.problem, cfg.pde);

    if (solve_cmd->parsed() || cls_cmd->parsed()) {
      if (cfg.h_list.empty()) throw ParameterError("no h given");
      Params p = select_parameters(X, cfg.h_list.front(), cfg.pde, cfg.overrides);
      if (cls_cmd->parsed()) {
        auto ctx = setup(X, p, cfg.pde);
        const auto& g = ctx.grid.geom;
        std::vector<double> r(g.size(), 0.0), s(g.size(), 0.0);
        for (size_t q = 0; q < ctx.cls.annulus.size(); ++q) {
          r[ctx.cls.annulus[q]] = ctx.cls.coords[q].r;
          s[ctx.cls.annulus[q]] = ctx.cls.coords[q].s;
        }
        write_mask(out / "mask.u8", ctx.cls.label);
        write_field(out / "r.fld", field_of(g, r));
        write_field(out / "s.fld", field_of(g, s));
        std::printf("grid %dx%d: exterior %zu, annulus %zu, faithful %zu\n", g.nx, g.ny, ctx.cls.exterior.size(),
                    ctx.cls.annulus.size(), ctx.cls.faithful.size());
        return kOk;
      }
      Run r = run_one(X, p, prob);
      auto row = make_row(r.ctx, r.sol, r.err);
      write_results(out / "results.csv", {row});
      dump_fields(out, r, prob);
      print_row(row);
      return kOk;
    }

    std::vector<ResultRow> rows;
    auto record = [&](const Params& p) {
      Run r = run_one(X, p, prob);
      rows.push_back(make_row(r.ctx, r.sol, r.err));
      print_row(rows.back());
      write_results(out / "results.csv", rows);
    };
    if (study == "policy") {
      if (cfg.h_list.empty()) throw ParameterError("no h_list given");
      for (double h : cfg.h_list) record(select_parameters(X, h, cfg.pde, cfg.overrides));
    } else {
      if (n_list.empty()) throw ParameterError("--N list required for " + study);
      for (int N : n_list) {
        try {
          record(study == "fixed_m" ? fixed_m_parameters(X, N, fixed_m, cfg.pde, cfg.overrides)
                                    : proportional_parameters(X, N, gamma, cfg.pde, cfg.overrides));
        } catch (const ParameterError& e) {
          std::printf("N=%d skipped: %s\n", N, e.what());
        }
      }
    }
    return kOk;
  } catch (const ParameterError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return kParameter;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "convergence failure: %s\n", e.what());
    return kConvergence;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailure;
  }
}
