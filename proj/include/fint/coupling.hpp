#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fint/annulus.hpp"
#include "fint/fields.hpp"
#include "fint/grid.hpp"
#include "fint/qfs.hpp"

namespace fint {

// Value and normal-derivative jumps (regular minus annular) at the interface nodes.
struct JumpData {
  std::vector<double> gamma, sigma;
};

JumpData compute_jumps(const SpectralField2D& u_r, const AnnularField& u_a, const AnnularGrid& annulus);

// Inhomogeneous solution u_I: u_r + W on faithful grid nodes and u_a + W on
// annular nodes, where W = D gamma - S sigma removes both jumps across I.
struct StitchResult {
  std::vector<double> faithful;  // aligned with cls.faithful
  AnnularField annular;
  Eigen::VectorXd zeta_in, zeta_out;
};

StitchResult stitch(const SpectralField2D& u_r, const AnnularField& u_a, const JumpData& jumps,
                    const EffectiveSource& inward, const EffectiveSource& outward, const AnnularGrid& annulus,
                    const GridClassification& cls, const GridGeom& grid);

// Adds u_H = D zeta_H (evaluated through Gamma's inside effective source) to
// the faithful and annular parts of u_I in place; returns the source density.
Eigen::VectorXd apply_homogeneous_correction(StitchResult& u, const std::vector<double>& zeta_h,
                                             const EffectiveSource& gamma_source, const AnnularGrid& annulus,
                                             const GridClassification& cls, const GridGeom& grid);

// Values at grid nodes labelled Annulus (aligned with cls.annulus).
std::vector<double> finalize_on_grid(const AnnularField& u, const GridClassification& cls);

// Adds nodal values to an annular field, keeping its richer coefficient form in sync.
void add_nodal(AnnularField& f, const std::vector<double>& v);

}  // namespace fint
