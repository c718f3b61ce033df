#pragma once

#include <cstdint>
#include <vector>

namespace qg::kernels {

/// int_0^t (t - s)^{-a} s^{-b} ds by double-exponential quadrature.
double singular_time_integral(double a, double b, double t);
/// Beta(1 - a, 1 - b) t^{1 - a - b}.
double beta_closed_form(double a, double b, double t);

/// Poisson kernel of the half plane over R^2 and its Riesz transform
/// (symbol i xi_l/|xi| e^{-t|xi|}).
double poisson_kernel(double t, double r);
/// Radial profile F with R_l P_t(x) = F(r) x_l / r, closed form.
double riesz_poisson_profile(double t, double r);
/// Same profile from the Hankel integral of the symbol.
double riesz_poisson_profile_hankel(double t, double r);

/// L^p norms over R^2 by radial quadrature on [0, inf).
double poisson_lp_norm(double t, double p);
double riesz_poisson_lp_norm(double t, double p);

struct ExponentFit {
  double slope = 0.0;
  double expected = 0.0;
  double relative_error = 0.0;
};
/// Log-log slope of norm(t) over t in `times`.
ExponentFit fit_kernel_exponent(bool riesz, double p, const std::vector<double>& times);

struct HlsReport {
  int inputs = 0;
  double max_ratio = 0.0;  // sup_t |int_0^t (t-s)^{-1/2} a(s) ds| / ||a||_{L^2(0,1)}
};
/// Random piecewise-constant inputs on `cells` cells of [0, 1], integrated exactly per cell.
HlsReport hls_check(std::uint64_t seed, int inputs, int cells);

}  // namespace qg::kernels
