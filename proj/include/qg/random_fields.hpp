#pragma once

#include <cstdint>
#include <vector>

#include "qg/spectral_field.hpp"

namespace qg {

/// Seeded band-limited test data: Gaussian coefficients on the annulus
/// k_min <= |k| <= k_max (integer lattice units), an envelope exp(-decay |k|),
/// Hermitian-symmetrized, mean zero, scaled to sup norm `amplitude` on the grid.
struct RandomFieldSpec {
  double k_min = 1.0;
  double k_max = 8.0;
  double decay = 0.0;
  double amplitude = 1.0;
};

SpectralField random_field(const Grid2D& grid, std::uint64_t seed, const RandomFieldSpec& spec);
/// Field i of the bank uses the seed pair (seed, i).
std::vector<SpectralField> random_bank(const Grid2D& grid, std::uint64_t seed, int count,
                                       const RandomFieldSpec& spec);

}  // namespace qg
