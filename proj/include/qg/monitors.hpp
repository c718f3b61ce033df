#pragma once

#include <vector>

#include "qg/spectral_field.hpp"
#include "qg/trajectory.hpp"

namespace qg {

/// Sup of |f| over the torus: grid maxima refined by Newton steps on the
/// trigonometric polynomial itself.
double sup_norm(const SpectralField& f);

/// Per-snapshot physical monitors of a trajectory.
struct MonitorSeries {
  std::vector<double> times;
  std::vector<double> linf;          // sup norm
  std::vector<double> mean;
  /// d/dt 1/2 ||theta||^2 + kappa ||Lambda^{gamma/2} theta||^2 (NaN at the end points).
  std::vector<double> balance_residual;
  /// balance_residual / ||theta||^2.
  std::vector<double> balance_relative;
  /// ||grad theta||^2 + 2 kappa int ||Lambda^{1+gamma/2} theta||^2 - ||grad theta_0||^2.
  std::vector<double> h1_margin;
  /// 2 int ||grad theta||_2 ||grad theta||_4 ||grad v||_4, which bounds h1_margin.
  std::vector<double> h1_bound;

  double max_linf_increase() const;
  double max_balance_relative() const;
  double max_mean_drift() const;
};

/// Monitors never throw on physical grounds; a trajectory with fewer than two
/// snapshots is a structural error.
MonitorSeries monitors(const TrajectoryRecord& traj);

}  // namespace qg
