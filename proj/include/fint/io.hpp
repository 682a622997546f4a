#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fint/params.hpp"
#include "fint/problems.hpp"
#include "fint/solver.hpp"

namespace fint {

struct CurveSpec {
  std::string type = "star";  // circle | ellipse | star | kite
  double a = 0.15, r = 1.0, xc = 0.0, yc = 0.0;
  int d = 5;
  double ea = 2.0, eb = 1.0;  // ellipse semi-axes
};

struct RunConfig {
  CurveSpec curve;
  PdeKind pde;
  std::string problem = "smooth";
  std::vector<double> h_list;
  Overrides overrides;
  std::string output_dir = "out";
};

Parametrization make_curve(const CurveSpec& c);
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& file);

struct ResultRow {
  double h = 0.0;
  int N = 0, M = 0, Nx = 0, Ny = 0;
  double R = 0.0;
  int b = 0;
  double err_linf = 0.0, err_l2_rel = 0.0;
  int gmres_iters_annular = 0, bie_iters = 0;
  double t_setup_s = 0.0, t_solve_s = 0.0;
};

extern const char* const kResultsHeader;
ResultRow make_row(const SolverContext& ctx, const Solution& s, const ErrorMetrics& e);
void write_results(const std::filesystem::path& file, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results(const std::filesystem::path& file);

// Grid field dump: "IFLD0001", u32 nx, u32 ny, f64 x0, f64 y0, f64 h, nx*ny f64 row-major, little-endian.
struct FieldDump {
  std::uint32_t nx = 0, ny = 0;
  double x0 = 0.0, y0 = 0.0, h = 0.0;
  std::vector<double> values;
};

void write_field(const std::filesystem::path& file, const FieldDump& f);
FieldDump read_field(const std::filesystem::path& file);
void write_mask(const std::filesystem::path& file, const std::vector<Region>& labels);
std::vector<std::uint8_t> read_mask(const std::filesystem::path& file);
FieldDump field_of(const GridGeom& g, std::vector<double> values);

// s, x, y, gamma, sigma per interface node.
void write_jumps(const std::filesystem::path& file, const SolverContext& ctx, const JumpData& j);

}  // namespace fint
