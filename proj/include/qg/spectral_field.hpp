#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qg/fft.hpp"
#include "qg/grid.hpp"

namespace qg {

/// Fourier coefficients on a Grid2D with no realness requirement.
///
/// Used for intermediate quantities such as half-line frequency projections,
/// whose physical images are complex.
class ComplexField {
 public:
  explicit ComplexField(const Grid2D& grid);
  ComplexField(const Grid2D& grid, std::vector<Complex> coeffs);

  const Grid2D& grid() const { return grid_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }
  Complex at(int k1, int k2) const;

  std::vector<Complex> to_physical() const;
  static ComplexField from_physical(const Grid2D& grid, std::span<const Complex> values);

  ComplexField& operator+=(const ComplexField& other);

 private:
  Grid2D grid_;
  std::vector<Complex> coeffs_;
};

/// Complex Fourier coefficients of a real 2D periodic scalar field.
///
/// Invariants: coeffs(-k) = conj(coeffs(k)), the mean coefficient is real and
/// every Nyquist row/column is zero. Instances never change after construction.
class SpectralField {
 public:
  explicit SpectralField(const Grid2D& grid);

  /// Samples on the grid, row-major with the first index along x1.
  static SpectralField from_physical(const Grid2D& grid, std::span<const double> values);
  /// Evaluates f(x1, x2) at the grid points.
  static SpectralField from_function(const Grid2D& grid,
                                     const std::function<double(double, double)>& f);
  /// Takes raw coefficients; the Hermitian part is kept and Nyquist modes are
  /// zeroed. Throws StructuralError if the anti-Hermitian part exceeds
  /// `tolerance` relative to the largest coefficient.
  static SpectralField from_coefficients(const Grid2D& grid, std::vector<Complex> coeffs,
                                         double tolerance = 1e-10);
  static SpectralField from_complex(const ComplexField& field, double tolerance = 1e-10);

  const Grid2D& grid() const { return grid_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex at(int k1, int k2) const;
  Complex mean() const { return coeffs_[0]; }

  std::vector<double> to_physical() const;
  ComplexField as_complex() const { return ComplexField(grid_, coeffs_); }

  /// max |c(-k) - conj(c(k))| over the lattice.
  double hermitian_defect() const;
  /// Sum of |c_k|^2 (so that the L2 norm squared is area * this).
  double coefficient_energy() const;
  double max_abs_coefficient() const;
  bool is_zero() const;

  SpectralField operator+(const SpectralField& other) const;
  SpectralField operator-(const SpectralField& other) const;
  SpectralField operator*(double scale) const;
  friend SpectralField operator*(double scale, const SpectralField& f) { return f * scale; }

  /// Zeroes every mode outside the 2/3-rule band.
  SpectralField truncated() const;

 private:
  SpectralField(const Grid2D& grid, std::vector<Complex> coeffs);
  Grid2D grid_;
  std::vector<Complex> coeffs_;
};

/// Relative L2 distance ||a - b|| / ||b|| computed from coefficients; 0 when both vanish.
double relative_l2_error(const SpectralField& a, const SpectralField& b);

/// Dissipation exponent, viscosity and Gevrey rate.
struct PhysicalParams {
  double gamma = 1.5;
  double kappa = 1.0;
  double alpha = 1.0;

  /// Every violated constraint, empty when valid.
  std::vector<std::string> violations() const;
  void validate() const;
};

}  // namespace qg
