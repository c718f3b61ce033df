#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qg/littlewood_paley.hpp"
#include "qg/multipliers.hpp"
#include "qg/spectral_field.hpp"
#include "qg/trajectory.hpp"

namespace qg {

struct GevreyConfig {
  double alpha = 1.0;
  double gamma = 1.5;
  double exp_cap = kDefaultExpCap;

  std::vector<std::string> violations() const;
  void validate() const;
  /// Exponent of the weight at time t: alpha t^{1/gamma}.
  double rate(double t) const;
};

/// Coefficients below this fraction of the largest one are treated as zero
/// before any growing weight is applied.
inline constexpr double kNoiseFloor = 1e-14;

/// Index set of the time-weighted norms. Derived quantities: s = 2/p + 1 - gamma,
/// beta = 1 - 1/gamma - 2/(r gamma), p1 = 2/(gamma - 1).
struct WeightedNormSpec {
  double gamma = 1.5;
  double p = 2.0;
  double q = 2.0;
  double r = 8.0;
  double alpha_k = 0.5;

  double s() const { return 2.0 / p + 1.0 - gamma; }
  double beta() const { return 1.0 - 1.0 / gamma - 2.0 / (r * gamma); }
  double p1() const { return 2.0 / (gamma - 1.0); }
  bool critical() const { return gamma == 1.0; }
  BesovIndex besov() const { return {s(), p, q}; }

  /// All failed constraints, each naming its inequality.
  std::vector<std::string> violations() const;
  void validate() const;
};

/// Multiplies every snapshot by exp(alpha t^{1/gamma} Lambda_1) after zeroing
/// coefficients under the noise floor. Throws OverflowError naming the first
/// failing (t, shell).
TrajectoryRecord gevrey_transform(const TrajectoryRecord& traj, const GevreyConfig& cfg);
SpectralField gevrey_transform(const SpectralField& f, double t, const GevreyConfig& cfg);

struct RadiusEstimate {
  double time = 0.0;
  double radius = 0.0;
  double fit_quality = 0.0;
  int shells_used = 0;
  bool reliable = false;

  bool operator==(const RadiusEstimate&) const = default;
};

/// Least-squares slope of max_{|k|_1 = m} log|c_k| against m (physical units).
RadiusEstimate analyticity_radius(const SpectralField& f, double time = 0.0);

struct NormReport {
  std::string spec_label;
  std::vector<double> times;
  std::vector<double> k_series;
  std::vector<double> g_series;
  std::vector<RadiusEstimate> radii;
  std::optional<double> k_norm, k_argmax;
  std::optional<double> g_norm, g_argmax;
  std::optional<double> e1_norm;
  std::vector<std::pair<int, double>> decay_slopes;  // (k, slope)

  bool operator==(const NormReport&) const = default;
};

/// K and G (gamma > 1) or E1 (gamma = 1) of an already weighted trajectory;
/// radii are left empty. Sups run over snapshots with t > 0,
/// or over the single snapshot when that is all there is.
NormReport k_g_e1_norms(const TrajectoryRecord& traj, const WeightedNormSpec& spec,
                        const LPFrame& frame);

/// Norms of the Gevrey-weighted trajectory plus radii fitted on the raw one.
NormReport analyze_trajectory(const TrajectoryRecord& traj, const GevreyConfig& cfg,
                              const WeightedNormSpec& spec);

/// Literal composition evaluated mode by mode: each product coefficient p + q = k
/// carries exp(a (|k|_1 - |p|_1 - |q|_1)) with a = t^{1/gamma}; 2/3 band throughout.
SpectralField bilinear_Bt_direct(const SpectralField& f, const SpectralField& g, double t,
                                 const GevreyConfig& cfg);

/// One term K_a1 K_a2 (Z_{a,b} f . Z_{a,c} g) of the sign expansion.
struct BilinearBranch {
  std::array<int, 2> a, b, c;
  ComplexField value;
};
std::vector<BilinearBranch> bilinear_Bt_branches(const SpectralField& f, const SpectralField& g,
                                                 double t, const GevreyConfig& cfg);
SpectralField bilinear_Bt_decomposed(const SpectralField& f, const SpectralField& g, double t,
                                     const GevreyConfig& cfg);

/// a = (t - s)^{1/gamma} + s^{1/gamma} - t^{1/gamma}.
double damping_exponent(double s, double t, double gamma);
/// exp(-a Lambda_1) f; DomainError unless 0 <= s <= t.
SpectralField operator_E_lemma32(const SpectralField& f, double s, double t, double gamma);

struct AmplificationReport {
  double gamma = 0.0;
  std::vector<double> a_values;
  std::vector<double> max_amplification;  // per a, over the bank and p in {2, 4}
  std::vector<double> symbol_max;         // per a, exhaustive lattice scan
  double sup_amplification = 0.0;
};
/// exp(a^{1/gamma} Lambda_1 - a Lambda^gamma / 2) on a seeded bank of fields.
AmplificationReport multiplier_lemma33_check(double gamma, const std::vector<double>& a_values,
                                       const Grid2D& grid, std::uint64_t seed, int bank_size);

enum class DecayNorm {
  sup_partials,  // max over |alpha| = k of ||d^alpha theta||_inf
  l2_gradient,   // ||Lambda^k theta||_2
};

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double std_error = 0.0;
  double band = 0.0;  // 1.96 std_error
  double r2 = 0.0;
  double r2_semilog = 0.0;
  bool exponential = false;  // a semi-log fit explains the data better
  int points = 0;
};

/// Log-log fit of values against times on [t_lo, t_hi]; DomainError when the
/// window spans less than one decade or holds fewer than 3 points.
DecayFit fit_power_law(const std::vector<double>& times, const std::vector<double>& values,
                       double t_lo, double t_hi);
double derivative_norm(const SpectralField& f, int k, DecayNorm norm);
DecayFit decay_rate_fit(const TrajectoryRecord& traj, int k, DecayNorm norm, double t_lo,
                        double t_hi);

}  // namespace qg
