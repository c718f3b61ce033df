#include "qg/random_fields.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qg/errors.hpp"

namespace qg {

namespace {

SpectralField draw(const Grid2D& grid, std::mt19937_64& rng, const RandomFieldSpec& spec) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int n = grid.n();
  std::vector<Complex> c(grid.size());
  // Walk the half lattice and mirror, so every draw is used exactly once.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k1 = grid.wavenumber(i);
      const int k2 = grid.wavenumber(j);
      if (grid.is_nyquist(k1) || grid.is_nyquist(k2) || !grid.retained(k1, k2)) continue;
      if (k1 < 0 || (k1 == 0 && k2 <= 0)) continue;
      const double r = std::hypot(k1, k2);
      if (r < spec.k_min || r > spec.k_max) continue;
      const double re = normal(rng);
      const double im = normal(rng);
      const Complex z = Complex(re, im) * std::exp(-spec.decay * r);
      c[grid.flat(i, j)] = z;
      c[grid.flat(grid.index_of(-k1), grid.index_of(-k2))] = std::conj(z);
    }
  }
  auto f = SpectralField::from_coefficients(grid, std::move(c));
  const auto values = f.to_physical();
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) throw DomainError("random_field: empty annulus");
  return f * (spec.amplitude / peak);
}

}  // namespace

SpectralField random_field(const Grid2D& grid, std::uint64_t seed, const RandomFieldSpec& spec) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  return draw(grid, rng, spec);
}

std::vector<SpectralField> random_bank(const Grid2D& grid, std::uint64_t seed, int count,
                                       const RandomFieldSpec& spec) {
  std::vector<SpectralField> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    out.push_back(draw(grid, rng, spec));
  }
  return out;
}

}  // namespace qg
