#pragma once

#include <vector>

#include "qg/spectral_field.hpp"

namespace qg {

/// Norms recorded after every accepted step (and at t = 0).
struct StepDiagnostics {
  double time = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double h1 = 0.0;        // ||grad theta||_2
  double dissipation = 0.0;  // ||Lambda^{gamma/2} theta||_2^2
  double mean = 0.0;
};

/// Time-ordered snapshots on one grid plus per-step diagnostics.
struct TrajectoryRecord {
  TrajectoryRecord(const Grid2D& grid, PhysicalParams params) : grid(grid), params(params) {}

  Grid2D grid;
  PhysicalParams params;
  std::vector<double> times;
  std::vector<SpectralField> snapshots;
  std::vector<StepDiagnostics> diagnostics;

  /// Throws StructuralError unless t exceeds the last time and the grid matches.
  void append(double t, SpectralField field);
  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
  const SpectralField& back() const { return snapshots.back(); }
};

StepDiagnostics measure(const SpectralField& theta, double t, const PhysicalParams& params);

}  // namespace qg
