#pragma once

#include <cstdint>
#include <vector>

#include "fint/annulus.hpp"
#include "fint/fields.hpp"

namespace fint {

struct RegularGrid {
  GridGeom geom;
  double wiggle = 0.0;  // extra room in +x and +y for the compatibility bump
};

// Box from node extrema padded by h_max, enlarged by `wiggle` in +x and +y,
// with even node counts at spacing exactly h.
RegularGrid build_computational_domain(const BoundaryCurve& curve, double h, double wiggle);

enum class Region : std::uint8_t { Exterior = 0, Annulus = 1, Faithful = 2 };

struct GridClassification {
  std::vector<Region> label;
  std::vector<size_t> exterior, annulus, faithful;
  std::vector<AnnularPoint> coords;  // aligned with `annulus`
  double delta = 0.0;                // polygon inflation offset used
};

// Safeguarded Newton projection onto the curve from an initial parameter.
AnnularPoint invert_coordinates(const BoundaryCurve& curve, Vec2 x, double s0);

// Labels every grid node. Throws ParameterError when R + 2 delta >= rmax.
GridClassification classify_points(const AnnularGrid& annulus, const GridGeom& grid, double rmax);

// Classifies arbitrary points with the same rules (used for off-grid evaluation).
std::vector<Region> classify_arbitrary(const AnnularGrid& annulus, const std::vector<Vec2>& pts,
                                       std::vector<AnnularPoint>& coords);

// Discrete chord sagitta bound used for the polygon offsets.
double polygon_delta(const BoundaryCurve& curve);

}  // namespace fint
