#include "qg/monitors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qg/errors.hpp"
#include "qg/multipliers.hpp"

namespace qg {

namespace {

struct Mode {
  double xi1, xi2;
  Complex c;
};

struct Local {
  double f, g1, g2, h11, h12, h22;
};

Local evaluate(const std::vector<Mode>& modes, double x1, double x2) {
  Local out{};
  for (const auto& m : modes) {
    const Complex z = m.c * std::polar(1.0, m.xi1 * x1 + m.xi2 * x2);
    const double re = z.real();
    const double im = z.imag();
    out.f += re;
    out.g1 -= m.xi1 * im;
    out.g2 -= m.xi2 * im;
    out.h11 -= m.xi1 * m.xi1 * re;
    out.h12 -= m.xi1 * m.xi2 * re;
    out.h22 -= m.xi2 * m.xi2 * re;
  }
  return out;
}

}  // namespace

double sup_norm(const SpectralField& f) {
  const auto& g = f.grid();
  const int n = g.n();
  const auto values = f.to_physical();
  // Local maxima of |f| on the grid, best first.
  std::vector<std::pair<double, std::size_t>> peaks;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = std::abs(values[g.flat(i, j)]);
      bool is_peak = v > 0.0;
      for (int di = -1; di <= 1 && is_peak; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && std::abs(values[g.flat((i + di + n) % n, (j + dj + n) % n)]) > v) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) peaks.emplace_back(v, g.flat(i, j));
    }
  }
  if (peaks.empty()) return 0.0;
  std::sort(peaks.begin(), peaks.end(), std::greater<>());
  if (peaks.size() > 6) peaks.resize(6);

  std::vector<Mode> modes;
  const double dk = g.dk();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex c = f.coeffs()[g.flat(i, j)];
      if (c != Complex{}) modes.push_back({dk * g.wavenumber(i), dk * g.wavenumber(j), c});
    }
  }
  const double h = g.spacing();
  double best = peaks.front().first;
  for (const auto& [v0, idx] : peaks) {
    const double xs = h * static_cast<double>(idx / n);
    const double ys = h * static_cast<double>(idx % n);
    double x = xs;
    double y = ys;
    for (int it = 0; it < 12; ++it) {
      const auto L = evaluate(modes, x, y);
      const double sign = L.f >= 0.0 ? 1.0 : -1.0;
      best = std::max(best, std::abs(L.f));
      const double det = L.h11 * L.h22 - L.h12 * L.h12;
      double dx = 0.0;
      double dy = 0.0;
      if (sign * L.h11 < 0.0 && det > 0.0) {
        dx = (L.h22 * L.g1 - L.h12 * L.g2) / det;
        dy = (L.h11 * L.g2 - L.h12 * L.g1) / det;
      } else {
        // degenerate Hessian (e.g. a field constant along one axis): per-axis steps
        const bool ax = sign * L.h11 < 0.0;
        const bool ay = sign * L.h22 < 0.0;
        if (!ax && !ay) break;
        if (ax) dx = L.g1 / L.h11;
        if (ay) dy = L.g2 / L.h22;
      }
      x -= dx;
      y -= dy;
      if (std::hypot(x - xs, y - ys) > 2.0 * h) break;
      if (std::hypot(dx, dy) < 1e-14 * g.box_length()) {
        best = std::max(best, std::abs(evaluate(modes, x, y).f));
        break;
      }
    }
  }
  return best;
}

double MonitorSeries::max_linf_increase() const {
  // max over t1 < t2 of linf(t2) - linf(t1)
  double worst = -std::numeric_limits<double>::infinity();
  double running_min = std::numeric_limits<double>::infinity();
  for (double v : linf) {
    worst = std::max(worst, v - running_min);
    running_min = std::min(running_min, v);
  }
  return linf.size() < 2 ? 0.0 : worst;
}

double MonitorSeries::max_balance_relative() const {
  double m = 0.0;
  for (double v : balance_relative) {
    if (std::isfinite(v)) m = std::max(m, std::abs(v));
  }
  return m;
}

double MonitorSeries::max_mean_drift() const {
  double m = 0.0;
  for (double v : mean) m = std::max(m, std::abs(v - mean.front()));
  return m;
}

MonitorSeries monitors(const TrajectoryRecord& traj) {
  if (traj.size() < 2) throw StructuralError("monitors: need at least two snapshots");
  const auto& g = traj.grid;
  const auto& p = traj.params;
  const int n = g.n();
  const double dk = g.dk();
  const std::size_t count = traj.size();
  MonitorSeries out;
  out.times = traj.times;

  std::vector<double> lin(g.size()), rad(g.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r = dk * std::hypot(g.wavenumber(i), g.wavenumber(j));
      rad[g.flat(i, j)] = r;
      lin[g.flat(i, j)] = r > 0.0 ? p.kappa * std::pow(r, p.gamma) : 0.0;
    }
  }

  std::vector<double> grad_sq(count), diss_h1(count), bound_integrand(count), energy(count);
  for (std::size_t m = 0; m < count; ++m) {
    const auto& f = traj.snapshots[m];
    out.linf.push_back(sup_norm(f));
    out.mean.push_back(f.mean().real());
    const auto c = f.coeffs();
    double e = 0.0, h1 = 0.0, d = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double a = std::norm(c[k]);
      e += a;
      h1 += rad[k] * rad[k] * a;
      d += rad[k] * rad[k] * (rad[k] > 0.0 ? std::pow(rad[k], p.gamma) : 0.0) * a;
    }
    energy[m] = g.area() * e;
    grad_sq[m] = g.area() * h1;
    diss_h1[m] = p.kappa * g.area() * d;

    const auto d1 = apply_multiplier(f, symbols::derivative(1)).to_physical();
    const auto d2 = apply_multiplier(f, symbols::derivative(2)).to_physical();
    std::vector<double> grad(d1.size());
    for (std::size_t k = 0; k < grad.size(); ++k) grad[k] = std::hypot(d1[k], d2[k]);
    const auto [v1, v2] = riesz_velocity(f);
    std::array<std::vector<double>, 4> dv = {
        apply_multiplier(v1, symbols::derivative(1)).to_physical(),
        apply_multiplier(v1, symbols::derivative(2)).to_physical(),
        apply_multiplier(v2, symbols::derivative(1)).to_physical(),
        apply_multiplier(v2, symbols::derivative(2)).to_physical()};
    std::vector<double> frob(grad.size());
    for (std::size_t k = 0; k < frob.size(); ++k) {
      frob[k] = std::sqrt(dv[0][k] * dv[0][k] + dv[1][k] * dv[1][k] + dv[2][k] * dv[2][k] +
                          dv[3][k] * dv[3][k]);
    }
    bound_integrand[m] = 2.0 * std::sqrt(grad_sq[m]) * lp_norm(g, grad, 4.0) * lp_norm(g, frob, 4.0);
  }

  // Balance residual: derivative of the integrating-factor variable, which
  // removes the stiff linear decay from the finite difference.
  out.balance_residual.assign(count, std::numeric_limits<double>::quiet_NaN());
  out.balance_relative.assign(count, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t m = 1; m + 1 < count; ++m) {
    const double h1 = traj.times[m] - traj.times[m - 1];
    const double h2 = traj.times[m + 1] - traj.times[m];
    const double wm = -h2 / (h1 * (h1 + h2));
    const double w0 = (h2 - h1) / (h1 * h2);
    const double wp = h1 / (h2 * (h1 + h2));
    const auto cm = traj.snapshots[m - 1].coeffs();
    const auto c0 = traj.snapshots[m].coeffs();
    const auto cp = traj.snapshots[m + 1].coeffs();
    double s = 0.0;
    for (std::size_t k = 0; k < c0.size(); ++k) {
      if (c0[k] == Complex{} && cm[k] == Complex{} && cp[k] == Complex{}) continue;
      Complex deriv;
      if (lin[k] * std::max(h1, h2) <= 30.0) {
        deriv = wm * std::exp(-lin[k] * h1) * cm[k] + w0 * c0[k] + wp * std::exp(lin[k] * h2) * cp[k];
      } else {
        deriv = wm * cm[k] + w0 * c0[k] + wp * cp[k] + lin[k] * c0[k];
      }
      s += (std::conj(c0[k]) * deriv).real();
    }
    out.balance_residual[m] = g.area() * s;
    out.balance_relative[m] = energy[m] > 0.0 ? out.balance_residual[m] / energy[m] : 0.0;
  }

  double diss_int = 0.0;
  double bound_int = 0.0;
  out.h1_margin.push_back(0.0);
  out.h1_bound.push_back(0.0);
  for (std::size_t m = 1; m < count; ++m) {
    const double dt = traj.times[m] - traj.times[m - 1];
    diss_int += 0.5 * dt * (diss_h1[m] + diss_h1[m - 1]);
    bound_int += 0.5 * dt * (bound_integrand[m] + bound_integrand[m - 1]);
    out.h1_margin.push_back(grad_sq[m] + 2.0 * diss_int - grad_sq[0]);
    out.h1_bound.push_back(bound_int);
  }
  return out;
}

}  // namespace qg
