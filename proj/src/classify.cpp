#include "fint/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace fint {
namespace {

using Polygon = std::vector<Vec2>;

double orient(Vec2 a, Vec2 b, Vec2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool segments_cross(Vec2 p, Vec2 q, Vec2 a, Vec2 b) {
  double d1 = orient(a, b, p), d2 = orient(a, b, q), d3 = orient(p, q, a), d4 = orient(p, q, b);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

bool inside(const Polygon& poly, Vec2 p) {
  bool in = false;
  const size_t n = poly.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xc) in = !in;
    }
  }
  return in;
}

bool edge_hits_box(Vec2 a, Vec2 b, double x0, double x1, double y0, double y1) {
  if (std::max(a.x, b.x) < x0 || std::min(a.x, b.x) > x1 || std::max(a.y, b.y) < y0 || std::min(a.y, b.y) > y1)
    return false;
  // separating axis along the edge normal
  Vec2 c[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  bool pos = false, neg = false;
  for (auto& v : c) {
    double o = orient(a, b, v);
    pos |= o >= 0;
    neg |= o <= 0;
  }
  return pos && neg;
}

// Uniform bucket grid over the boundary nodes for nearest-node queries.
class NodeLocator {
 public:
  explicit NodeLocator(const BoundaryCurve& c) : pts_(c.nodes()) {
    x0_ = y0_ = 1e300;
    double x1 = -1e300, y1 = -1e300;
    for (auto p : pts_) {
      x0_ = std::min(x0_, p.x);
      y0_ = std::min(y0_, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
    cell_ = std::max(4.0 * c.h_max(), 1e-12);
    nx_ = static_cast<int>((x1 - x0_) / cell_) + 1;
    ny_ = static_cast<int>((y1 - y0_) / cell_) + 1;
    buckets_.resize(static_cast<size_t>(nx_) * ny_);
    for (int j = 0; j < static_cast<int>(pts_.size()); ++j) buckets_[bucket(pts_[j])].push_back(j);
  }

  int nearest(Vec2 p) const {
    int ci = std::clamp(static_cast<int>((p.x - x0_) / cell_), 0, nx_ - 1);
    int cj = std::clamp(static_cast<int>((p.y - y0_) / cell_), 0, ny_ - 1);
    int best = -1;
    double bd = 1e300;
    for (int ring = 0; ring < std::max(nx_, ny_) + 1; ++ring) {
      for (int j = cj - ring; j <= cj + ring; ++j)
        for (int i = ci - ring; i <= ci + ring; ++i) {
          if (std::max(std::abs(i - ci), std::abs(j - cj)) != ring) continue;
          if (i < 0 || j < 0 || i >= nx_ || j >= ny_) continue;
          for (int q : buckets_[static_cast<size_t>(j) * nx_ + i]) {
            double d = norm(pts_[q] - p);
            if (d < bd) {
              bd = d;
              best = q;
            }
          }
        }
      // every node in a farther ring is at least ring * cell away
      if (best >= 0 && bd <= ring * cell_) break;
    }
    return best;
  }

 private:
  size_t bucket(Vec2 p) const {
    int i = std::clamp(static_cast<int>((p.x - x0_) / cell_), 0, nx_ - 1);
    int j = std::clamp(static_cast<int>((p.y - y0_) / cell_), 0, ny_ - 1);
    return static_cast<size_t>(j) * nx_ + i;
  }
  const std::vector<Vec2>& pts_;
  double x0_, y0_, cell_;
  int nx_, ny_;
  std::vector<std::vector<int>> buckets_;
};

struct Polygons {
  Polygon outer;  // Gamma inflated
  Polygon inner;  // interface deflated
};

Polygons make_polygons(const AnnularGrid& a, double delta) {
  Polygons P;
  const auto& X = a.parent.nodes();
  const auto& n = a.parent.normals();
  const auto& I = a.interface.nodes();
  P.outer.resize(X.size());
  P.inner.resize(X.size());
  for (size_t j = 0; j < X.size(); ++j) {
    P.outer[j] = X[j] + 2.0 * delta * n[j];
    P.inner[j] = I[j] - 2.0 * delta * n[j];
  }
  return P;
}

constexpr int kBand = 3;

class Classifier {
 public:
  Classifier(const AnnularGrid& a, const GridGeom& g, const Polygons& P) : a_(a), g_(g), P_(P) {}

  std::vector<int> run() {
    status_.assign(g_.size(), kBand);
    std::vector<int> eo(P_.outer.size()), ei(P_.inner.size());
    for (size_t i = 0; i < eo.size(); ++i) eo[i] = static_cast<int>(i);
    for (size_t i = 0; i < ei.size(); ++i) ei[i] = static_cast<int>(i);
    cell(0, g_.nx, 0, g_.ny, eo, ei);
    return status_;
  }

 private:
  Vec2 node(int i, int j) const { return {g_.x0 + i * g_.h, g_.y0 + j * g_.h}; }

  static int decide(bool in_outer, bool in_inner) {
    if (!in_outer) return static_cast<int>(Region::Exterior);
    if (in_inner) return static_cast<int>(Region::Faithful);
    return kBand;
  }

  void cell(int i0, int i1, int j0, int j1, const std::vector<int>& eo_in, const std::vector<int>& ei_in) {
    const double eps = 1e-9 * g_.h;
    const double bx0 = g_.x0 + i0 * g_.h - eps, bx1 = g_.x0 + (i1 - 1) * g_.h + eps;
    const double by0 = g_.y0 + j0 * g_.h - eps, by1 = g_.y0 + (j1 - 1) * g_.h + eps;
    auto filter = [&](const Polygon& poly, const std::vector<int>& in) {
      std::vector<int> out;
      const size_t n = poly.size();
      for (int e : in)
        if (edge_hits_box(poly[e], poly[(e + 1) % n], bx0, bx1, by0, by1)) out.push_back(e);
      return out;
    };
    auto eo = filter(P_.outer, eo_in);
    auto ei = filter(P_.inner, ei_in);
    if (eo.empty() && ei.empty()) {
      Vec2 p = node(i0, j0);
      int st = decide(inside(P_.outer, p), inside(P_.inner, p));
      for (int j = j0; j < j1; ++j)
        for (int i = i0; i < i1; ++i) status_[static_cast<size_t>(j) * g_.nx + i] = st;
      return;
    }
    if (i1 - i0 <= 4 && j1 - j0 <= 4) {
      Vec2 p0 = node(i0, j0);
      bool o0 = inside(P_.outer, p0), n0 = inside(P_.inner, p0);
      for (int j = j0; j < j1; ++j)
        for (int i = i0; i < i1; ++i) {
          Vec2 p = node(i, j);
          bool o = o0, n = n0;
          for (int e : eo)
            if (segments_cross(p0, p, P_.outer[e], P_.outer[(e + 1) % P_.outer.size()])) o = !o;
          for (int e : ei)
            if (segments_cross(p0, p, P_.inner[e], P_.inner[(e + 1) % P_.inner.size()])) n = !n;
          status_[static_cast<size_t>(j) * g_.nx + i] = decide(o, n);
        }
      return;
    }
    int im = (i1 - i0 > 1) ? (i0 + i1) / 2 : i1;
    int jm = (j1 - j0 > 1) ? (j0 + j1) / 2 : j1;
    cell(i0, im, j0, jm, eo, ei);
    if (im < i1) cell(im, i1, j0, jm, eo, ei);
    if (jm < j1) cell(i0, im, jm, j1, eo, ei);
    if (im < i1 && jm < j1) cell(im, i1, jm, j1, eo, ei);
  }

  const AnnularGrid& a_;
  const GridGeom& g_;
  const Polygons& P_;
  std::vector<int> status_;
};

// Newton failures near the edge of the coordinate tube fall back to the best iterate it carries.
AnnularPoint locate(const BoundaryCurve& c, Vec2 x, double s0) {
  try {
    return invert_coordinates(c, x, s0);
  } catch (const ConvergenceError& e) {
    double s = std::fmod(e.history().at(0), 2.0 * M_PI);
    return {s < 0 ? s + 2.0 * M_PI : s, e.history().at(1)};
  }
}

Region label_from_r(double r, double R, double tol) {
  if (r > tol) return Region::Exterior;
  if (r < -R) return Region::Faithful;
  return Region::Annulus;
}

}  // namespace

double polygon_delta(const BoundaryCurve& curve) {
  double d = 0.0;
  const double ds = curve.ds();
  for (int j = 0; j < curve.N(); ++j) {
    double k = std::abs(curve.curvature()[j]);
    double half = 0.5 * curve.speed()[j] * ds;
    double q = k * half;
    if (q >= 1.0) return 1e300;
    // |1/k| - sqrt(1/k^2 - half^2) in cancellation-free form
    d = std::max(d, k * half * half / (1.0 + std::sqrt(1.0 - q * q)));
  }
  return d;
}

AnnularPoint invert_coordinates(const BoundaryCurve& curve, Vec2 x, double s0) {
  auto fprime = [&](double s, CurvePoint& p) {
    p = curve.eval(s);
    return dot(p.X - x, p.Xs);
  };
  const double ds = curve.ds();
  double width = 2.0 * ds;
  double a = s0 - width, b = s0 + width;
  CurvePoint pa, pb, p;
  double fa = fprime(a, pa), fb = fprime(b, pb);
  for (int widen = 0; widen < 8 && !(fa < 0.0 && fb > 0.0); ++widen) {
    width *= 2.0;
    a = s0 - width;
    b = s0 + width;
    fa = fprime(a, pa);
    fb = fprime(b, pb);
  }
  const bool bracketed = fa < 0.0 && fb > 0.0;
  double s = s0;
  double best_s = s0, best_g = 1e300;
  auto finish = [&](double sf) -> AnnularPoint {
    p = curve.eval(sf);
    double r = dot(x - p.X, p.normal());
    double sr = std::fmod(sf, 2.0 * M_PI);
    if (sr < 0) sr += 2.0 * M_PI;
    return {sr, r};
  };
  for (int it = 0; it < 50; ++it) {
    double g = fprime(s, p);
    if (g == 0.0) return finish(s);
    if (std::abs(g) < best_g) {
      best_g = std::abs(g);
      best_s = s;
    }
    if (bracketed) {
      if (g < 0.0) a = s;
      else b = s;
    }
    double gpp = dot(p.Xs, p.Xs) + dot(p.X - x, p.Xss);
    double step = gpp > 0.0 ? -g / gpp : 0.0;
    double sn = s + step;
    if (gpp <= 0.0 || (bracketed && (sn <= a || sn >= b)) || (!bracketed && std::abs(sn - s0) > 4.0 * width)) {
      if (!bracketed) break;
      sn = 0.5 * (a + b);
    }
    if (std::abs(sn - s) <= 1e-15 * (1.0 + std::abs(s))) return finish(sn);
    s = sn;
  }
  std::ostringstream os;
  os << "coordinate inversion did not converge for point (" << x.x << ", " << x.y << ")";
  p = curve.eval(best_s);
  throw ConvergenceError(os.str(), {best_s, dot(x - p.X, p.normal())});
}

GridClassification classify_points(const AnnularGrid& annulus, const GridGeom& grid, double rmax) {
  if (annulus.side != Side::Interior) throw ParameterError("classification supports interior domains only");
  const double delta = std::max(polygon_delta(annulus.parent), polygon_delta(annulus.interface));
  if (annulus.R + 2.0 * delta >= rmax) {
    std::ostringstream os;
    os << "R + 2 delta = " << annulus.R + 2.0 * delta << " must be below R_max = " << rmax;
    throw ParameterError(os.str());
  }
  Polygons P = make_polygons(annulus, delta);
  Classifier cl(annulus, grid, P);
  auto status = cl.run();
  NodeLocator loc(annulus.parent);
  const BoundaryCurve& c = annulus.parent;
  const double tol = 1e-12 * c.diameter();
  GridClassification out;
  out.delta = delta;
  out.label.resize(grid.size());
  for (size_t idx = 0; idx < grid.size(); ++idx) {
    Region lab;
    AnnularPoint sr{};
    if (status[idx] == kBand) {
      Vec2 x = grid.node(idx);
      sr = locate(c, x, c.s(loc.nearest(x)));
      lab = label_from_r(sr.r, annulus.R, tol);
    } else {
      lab = static_cast<Region>(status[idx]);
    }
    out.label[idx] = lab;
    switch (lab) {
      case Region::Exterior: out.exterior.push_back(idx); break;
      case Region::Faithful: out.faithful.push_back(idx); break;
      case Region::Annulus:
        out.annulus.push_back(idx);
        out.coords.push_back(sr);
        break;
    }
  }
  return out;
}

std::vector<Region> classify_arbitrary(const AnnularGrid& annulus, const std::vector<Vec2>& pts,
                                       std::vector<AnnularPoint>& coords) {
  const double delta = std::max(polygon_delta(annulus.parent), polygon_delta(annulus.interface));
  Polygons P = make_polygons(annulus, delta);
  NodeLocator loc(annulus.parent);
  const double tol = 1e-12 * annulus.parent.diameter();
  std::vector<Region> lab(pts.size());
  coords.assign(pts.size(), {});
  for (size_t q = 0; q < pts.size(); ++q) {
    if (!inside(P.outer, pts[q])) {
      lab[q] = Region::Exterior;
    } else if (inside(P.inner, pts[q])) {
      lab[q] = Region::Faithful;
    } else {
      coords[q] = locate(annulus.parent, pts[q], annulus.parent.s(loc.nearest(pts[q])));
      lab[q] = label_from_r(coords[q].r, annulus.R, tol);
    }
  }
  return lab;
}

}  // namespace fint
