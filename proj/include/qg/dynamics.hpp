#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qg/spectral_field.hpp"
#include "qg/trajectory.hpp"

namespace qg {

struct PicardConfig {
  int n_time_nodes = 65;
  int max_iters = 50;
  double tol = 1e-10;
  /// "trapezoid" (plain composite rule) or "exponential_trapezoid" (the
  /// propagator is integrated exactly against a piecewise linear N).
  std::string quadrature = "trapezoid";
};

struct SolverConfig {
  PhysicalParams params;
  int n = 64;
  double box_length = 6.283185307179586;
  double dt = 1e-2;
  double T = 1.0;
  int snapshot_every = 1;
  std::string scheme = "integrating_factor_rk4";
  PicardConfig picard;
  double cfl = 0.5;
  double blowup_factor = 10.0;

  Grid2D grid() const { return Grid2D(n, box_length); }
  /// Number of steps; the step actually taken is T / steps() <= dt.
  int steps() const;
  std::vector<std::string> violations() const;
  void validate() const;
};

/// div(v theta) with v = (-R2 theta, R1 theta), products dealiased.
SpectralField nonlinear_term(const SpectralField& theta);

/// Largest admissible step c_cfl / (max|v| k_act), k_act the largest per-axis
/// wavenumber carrying a coefficient; infinity when v = 0.
double cfl_limit(const SpectralField& theta, double c_cfl);

/// One integrating-factor RK4 step. Throws CflError when dt exceeds the limit.
SpectralField step(const SpectralField& theta, double dt, const SolverConfig& cfg);

/// Integrates on [0, T]; snapshots at t = 0, every snapshot_every steps and at T.
TrajectoryRecord simulate(const SpectralField& theta0, const SolverConfig& cfg);

struct PicardState {
  int iterate_index = 0;
  std::vector<double> nodes;
  std::vector<SpectralField> fields;
  std::vector<double> residual_history;
  /// Residual ratios after the first iterate that exceeded 1 (logged, not enforced).
  int non_monotone_steps = 0;
};

/// Fixed-point iteration of the mild formulation on uniform time nodes.
/// Throws DivergenceError after three consecutive residual increases.
std::pair<TrajectoryRecord, PicardState> picard_solve(const SpectralField& theta0,
                                                      const SolverConfig& cfg);

}  // namespace qg
