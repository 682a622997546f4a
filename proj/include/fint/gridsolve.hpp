#pragma once

#include <vector>

#include "fint/fields.hpp"
#include "fint/grid.hpp"
#include "fint/pde.hpp"

namespace fint {

// f_I = eta f on non-exterior nodes and 0 outside the domain.
SpectralField2D intend(const GridGeom& grid, const std::vector<double>& f, const std::vector<double>& eta,
                       const GridClassification& cls);

// Subtracts the discrete integral of f times the unit-mass bump xi.
SpectralField2D enforce_mean_zero(const SpectralField2D& f, const std::vector<double>& xi);

// Periodic solve by symbol division. Poisson rejects input whose mean is not zero.
SpectralField2D solve_regular(const SpectralField2D& f, const PdeKind& pde);

// Applies the PDE operator spectrally (Lap u for Poisson, (alpha^2 - Lap) u otherwise).
SpectralField2D apply_regular(const SpectralField2D& u, const PdeKind& pde);

}  // namespace fint
