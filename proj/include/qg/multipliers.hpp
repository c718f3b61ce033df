#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qg/spectral_field.hpp"

namespace qg {

/// A Fourier multiplier: a scale factor per wavevector.
///
/// Either analytic (a function of the physical wavevector xi = dk * k, valid
/// on any lattice) or tabulated for one specific grid.
class MultiplierSymbol {
 public:
  using Function = std::function<Complex(double xi1, double xi2)>;

  MultiplierSymbol(std::string label, Function symbol, bool conjugate_symmetric = true);
  static MultiplierSymbol tabulated(std::string label, const Grid2D& grid,
                                    std::vector<Complex> table, bool conjugate_symmetric = true);
  static MultiplierSymbol tabulated_real(std::string label, const Grid2D& grid,
                                         std::span<const double> table);

  const std::string& label() const { return label_; }
  bool conjugate_symmetric() const { return conjugate_symmetric_; }

  /// Symbol at lattice point (k1, k2) of `grid`. Throws StructuralError when a
  /// tabulated symbol is used on a different lattice.
  Complex at(const Grid2D& grid, int k1, int k2) const;
  /// The whole table in storage order for `grid`.
  std::vector<Complex> tabulate(const Grid2D& grid) const;

 private:
  std::string label_;
  Function symbol_;
  std::optional<Grid2D> table_grid_;
  std::vector<Complex> table_;
  bool conjugate_symmetric_;
};

namespace symbols {

MultiplierSymbol identity();
/// |xi|^gamma
MultiplierSymbol fractional_laplacian(double gamma);
/// |xi_1| + |xi_2|
MultiplierSymbol l1_norm();
/// i xi_l / |xi|, zero at xi = 0; axis is 1 or 2.
MultiplierSymbol riesz(int axis);
/// i xi_l
MultiplierSymbol derivative(int axis);
/// exp(-t kappa |xi|^gamma)
MultiplierSymbol heat(double t, double gamma, double kappa);
/// exp(a |xi|_1); unguarded, prefer gevrey_multiplier().
MultiplierSymbol gevrey_weight(double a);

}  // namespace symbols

/// coeffs(k) * m(k). A non-conjugate-symmetric symbol is rejected here (it
/// would break realness); use the ComplexField overload instead.
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m);
ComplexField apply_multiplier(const ComplexField& f, const MultiplierSymbol& m);

/// v = (-R2 theta, R1 theta).
std::pair<SpectralField, SpectralField> riesz_velocity(const SpectralField& theta);

/// exp(-t kappa Lambda^gamma) f. Throws DomainError for t < 0.
SpectralField fractional_semigroup(const SpectralField& f, double t, double gamma,
                                   double kappa = 1.0);

inline constexpr double kDefaultExpCap = 200.0;

/// exp(a Lambda_1) f. Throws OverflowError if a * |k|_1 exceeds exp_cap on
/// any shell that carries a nonzero coefficient; DomainError for a < 0.
SpectralField gevrey_multiplier(const SpectralField& f, double a,
                                double exp_cap = kDefaultExpCap);
/// exp(-a Lambda_1) f, the exact inverse weight.
SpectralField gevrey_damping(const SpectralField& f, double a);

/// Coefficients of the pointwise product with the 2/3 rule on inputs and output.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);
ComplexField dealiased_product(const ComplexField& f, const ComplexField& g);

/// Riemann-sum L^p norm on the grid; p = infinity gives the grid maximum.
double lp_norm(const SpectralField& f, double p);
double lp_norm(const Grid2D& grid, std::span<const double> values, double p);

/// Grid values of |grad f| (Euclidean norm of the gradient).
std::vector<double> gradient_magnitude(const SpectralField& f);

}  // namespace qg
