#include "qg/trajectory.hpp"

#include <cmath>

#include "qg/errors.hpp"
#include "qg/multipliers.hpp"

namespace qg {

void TrajectoryRecord::append(double t, SpectralField field) {
  require_same_grid(grid, field.grid(), "TrajectoryRecord::append");
  if (!times.empty() && !(t > times.back())) {
    throw StructuralError("trajectory times must increase strictly");
  }
  times.push_back(t);
  snapshots.push_back(std::move(field));
}

StepDiagnostics measure(const SpectralField& theta, double t, const PhysicalParams& params) {
  const auto& g = theta.grid();
  const int n = g.n();
  const double dk = g.dk();
  StepDiagnostics d;
  d.time = t;
  d.mean = theta.mean().real();
  double e = 0.0;
  double h1 = 0.0;
  double diss = 0.0;
  const auto c = theta.coeffs();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a = std::norm(c[g.flat(i, j)]);
      if (a == 0.0) continue;
      const double r = dk * std::hypot(g.wavenumber(i), g.wavenumber(j));
      e += a;
      h1 += r * r * a;
      if (r > 0.0) diss += std::pow(r, params.gamma) * a;
    }
  }
  d.l2 = std::sqrt(g.area() * e);
  d.h1 = std::sqrt(g.area() * h1);
  d.dissipation = g.area() * diss;
  d.linf = lp_norm(theta, INFINITY);
  return d;
}

}  // namespace qg
