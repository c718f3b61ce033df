#pragma once

#include <cstddef>
#include <numbers>

namespace qg {

/// Uniform periodic grid on [0, L)^2 with n points per axis.
///
/// Storage order everywhere is row-major with the first index along x1:
/// element (i, j) lives at i * n + j. In spectral space index i carries the
/// wavenumber k1 = wavenumber(i), FFT-standard wrapping, so DC sits at (0, 0).
class Grid2D {
 public:
  explicit Grid2D(int n, double box_length = 2.0 * std::numbers::pi);

  int n() const { return n_; }
  double box_length() const { return box_length_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  /// Spacing of the physical wavenumber lattice, 2*pi / L.
  double dk() const { return 2.0 * std::numbers::pi / box_length_; }
  double spacing() const { return box_length_ / n_; }
  double cell_area() const { return spacing() * spacing(); }
  double area() const { return box_length_ * box_length_; }

  /// Integer wavenumber of storage index i, in [-n/2, n/2).
  int wavenumber(int index) const { return index < n_ / 2 ? index : index - n_; }
  int index_of(int k) const { return k >= 0 ? k : k + n_; }
  bool is_nyquist(int k) const { return k == -n_ / 2; }
  std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  /// Largest integer |k_i| kept by the 2/3 rule: 3K < n makes quadratic products alias-free.
  int dealias_cutoff() const { return (n_ - 1) / 3; }
  bool retained(int k1, int k2) const;
  /// Physical per-axis cutoff K * dk.
  double max_retained_wavenumber() const { return dealias_cutoff() * dk(); }

  bool operator==(const Grid2D& other) const = default;

 private:
  int n_;
  double box_length_;
};

/// Throws StructuralError unless both grids are identical.
void require_same_grid(const Grid2D& a, const Grid2D& b, const char* where);

}  // namespace qg
