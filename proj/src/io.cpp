#include "fint/io.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace fint {

namespace {

using json = nlohmann::json;
static_assert(std::endian::native == std::endian::little, "field dumps assume a little-endian host");

constexpr char kMagic[8] = {'I', 'F', 'L', 'D', '0', '0', '0', '1'};

template <class T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) throw std::runtime_error("truncated field dump");
  return v;
}

std::ofstream open_out(const std::filesystem::path& file, std::ios::openmode mode = std::ios::out) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream os(file, mode);
  if (!os) throw std::runtime_error("cannot write " + file.string());
  return os;
}

}  // namespace

const char* const kResultsHeader =
    "h,N,M,Nx,Ny,R,b,err_linf,err_l2_rel,gmres_iters_annular,bie_iters,t_setup_s,t_solve_s";

Parametrization make_curve(const CurveSpec& c) {
  if (c.type == "circle") return shapes::circle(c.xc, c.yc, c.r);
  if (c.type == "ellipse") return shapes::ellipse(c.ea, c.eb);
  if (c.type == "star") return shapes::star(c.a, c.d, c.r, c.xc, c.yc);
  if (c.type == "kite") return shapes::kite();
  throw ParameterError("unknown curve type '" + c.type + "'");
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("curve")) {
      const auto& c = j["curve"];
      cfg.curve.type = c.value("type", cfg.curve.type);
      cfg.curve.a = c.value("a", cfg.curve.a);
      cfg.curve.d = c.value("d", cfg.curve.d);
      cfg.curve.r = c.value("r", cfg.curve.r);
      cfg.curve.xc = c.value("xc", cfg.curve.xc);
      cfg.curve.yc = c.value("yc", cfg.curve.yc);
      cfg.curve.ea = c.value("ea", cfg.curve.ea);
      cfg.curve.eb = c.value("eb", cfg.curve.eb);
    }
    if (j.contains("pde")) {
      const auto& p = j["pde"];
      std::string kind = p.is_string() ? p.get<std::string>() : p.value("type", std::string("poisson"));
      if (kind == "poisson") {
        cfg.pde = PdeKind::poisson();
      } else if (kind == "modified_helmholtz") {
        double a = p.is_object() ? p.value("alpha", 0.0) : 0.0;
        if (!(a > 0.0)) throw ParameterError("modified_helmholtz needs alpha > 0");
        cfg.pde = PdeKind::modified_helmholtz(a);
      } else {
        throw ParameterError("unknown pde '" + kind + "'");
      }
    }
    cfg.problem = j.value("problem", cfg.problem);
    if (j.contains("h")) cfg.h_list = {j["h"].get<double>()};
    if (j.contains("h_list")) cfg.h_list = j["h_list"].get<std::vector<double>>();
    if (j.contains("overrides")) {
      const auto& o = j["overrides"];
      if (o.contains("R")) cfg.overrides.R = o["R"].get<double>();
      if (o.contains("N")) cfg.overrides.N = o["N"].get<int>();
      if (o.contains("M")) cfg.overrides.M = o["M"].get<int>();
      if (o.contains("b")) cfg.overrides.b = o["b"].get<int>();
      if (o.contains("eps")) cfg.overrides.eps = o["eps"].get<double>();
      if (o.contains("rmax_cap")) cfg.overrides.rmax_cap = o["rmax_cap"].get<double>();
      if (o.contains("max_gmres")) cfg.overrides.max_gmres = o["max_gmres"].get<int>();
    }
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("config: ") + e.what());
  }
  for (double h : cfg.h_list)
    if (!(h > 0.0)) throw ParameterError("config: h must be positive");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw ParameterError("cannot read config " + file.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

ResultRow make_row(const SolverContext& ctx, const Solution& s, const ErrorMetrics& e) {
  ResultRow r;
  r.h = ctx.params.h;
  r.N = ctx.params.N;
  r.M = ctx.params.M;
  r.Nx = ctx.grid.geom.nx;
  r.Ny = ctx.grid.geom.ny;
  r.R = ctx.params.R;
  r.b = ctx.params.b;
  r.err_linf = e.linf;
  r.err_l2_rel = e.l2_rel;
  r.gmres_iters_annular = s.diag.gmres_iters;
  r.bie_iters = s.diag.bie_iters;
  r.t_setup_s = ctx.setup_seconds;
  r.t_solve_s = s.diag.solve_seconds;
  return r;
}

void write_results(const std::filesystem::path& file, const std::vector<ResultRow>& rows) {
  auto os = open_out(file);
  os << kResultsHeader << '\n' << std::setprecision(17);
  for (const auto& r : rows)
    os << r.h << ',' << r.N << ',' << r.M << ',' << r.Nx << ',' << r.Ny << ',' << r.R << ',' << r.b << ','
       << r.err_linf << ',' << r.err_l2_rel << ',' << r.gmres_iters_annular << ',' << r.bie_iters << ','
       << r.t_setup_s << ',' << r.t_solve_s << '\n';
}

std::vector<ResultRow> read_results(const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) throw std::runtime_error("cannot read " + file.string());
  std::string line;
  std::getline(is, line);
  if (line != kResultsHeader) throw std::runtime_error("unexpected results header");
  std::vector<ResultRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    ResultRow r;
    ls >> r.h >> r.N >> r.M >> r.Nx >> r.Ny >> r.R >> r.b >> r.err_linf >> r.err_l2_rel >> r.gmres_iters_annular >>
        r.bie_iters >> r.t_setup_s >> r.t_solve_s;
    if (!ls) throw std::runtime_error("malformed results row: " + line);
    rows.push_back(r);
  }
  return rows;
}

FieldDump field_of(const GridGeom& g, std::vector<double> values) {
  FieldDump f;
  f.nx = static_cast<std::uint32_t>(g.nx);
  f.ny = static_cast<std::uint32_t>(g.ny);
  f.x0 = g.x0;
  f.y0 = g.y0;
  f.h = g.h;
  f.values = std::move(values);
  return f;
}

void write_field(const std::filesystem::path& file, const FieldDump& f) {
  if (f.values.size() != static_cast<size_t>(f.nx) * f.ny) throw std::invalid_argument("field size mismatch");
  auto os = open_out(file, std::ios::binary);
  os.write(kMagic, 8);
  put(os, f.nx);
  put(os, f.ny);
  put(os, f.x0);
  put(os, f.y0);
  put(os, f.h);
  os.write(reinterpret_cast<const char*>(f.values.data()), static_cast<std::streamsize>(f.values.size() * 8));
}

FieldDump read_field(const std::filesystem::path& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + file.string());
  char magic[8];
  if (!is.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("bad field magic");
  FieldDump f;
  f.nx = get<std::uint32_t>(is);
  f.ny = get<std::uint32_t>(is);
  f.x0 = get<double>(is);
  f.y0 = get<double>(is);
  f.h = get<double>(is);
  f.values.resize(static_cast<size_t>(f.nx) * f.ny);
  if (!is.read(reinterpret_cast<char*>(f.values.data()), static_cast<std::streamsize>(f.values.size() * 8)))
    throw std::runtime_error("truncated field dump");
  return f;
}

void write_mask(const std::filesystem::path& file, const std::vector<Region>& labels) {
  auto os = open_out(file, std::ios::binary);
  std::vector<std::uint8_t> b(labels.size());
  for (size_t i = 0; i < b.size(); ++i) b[i] = static_cast<std::uint8_t>(labels[i]);
  os.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
}

std::vector<std::uint8_t> read_mask(const std::filesystem::path& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + file.string());
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void write_jumps(const std::filesystem::path& file, const SolverContext& ctx, const JumpData& j) {
  auto os = open_out(file);
  os << "s,x,y,gamma,sigma\n" << std::setprecision(17);
  const auto& I = ctx.annulus.interface.nodes();
  for (size_t q = 0; q < j.gamma.size(); ++q)
    os << ctx.curve.s(static_cast<int>(q)) << ',' << I[q].x << ',' << I[q].y << ',' << j.gamma[q] << ','
       << j.sigma[q] << '\n';
}

}  // namespace fint
