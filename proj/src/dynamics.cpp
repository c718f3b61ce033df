#include "qg/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qg/errors.hpp"
#include "qg/fft.hpp"
#include "qg/multipliers.hpp"

namespace qg {

int SolverConfig::steps() const {
  return std::max(1, static_cast<int>(std::ceil(T / dt - 1e-9)));
}

std::vector<std::string> SolverConfig::violations() const {
  auto out = params.violations();
  if (n < 8 || (n & (n - 1)) != 0) out.push_back("n must be a power of two >= 8");
  if (!(box_length > 0.0) || !std::isfinite(box_length)) out.push_back("box_length must be > 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) out.push_back("dt must be > 0");
  if (!(T >= dt)) out.push_back("T must be >= dt");
  if (snapshot_every < 1) out.push_back("snapshot_every must be >= 1");
  if (scheme != "integrating_factor_rk4") out.push_back("unknown scheme '" + scheme + "'");
  if (picard.n_time_nodes < 2) out.push_back("picard.n_time_nodes must be >= 2");
  if (picard.max_iters < 1) out.push_back("picard.max_iters must be >= 1");
  if (!(picard.tol > 0.0)) out.push_back("picard.tol must be > 0");
  if (picard.quadrature != "trapezoid" && picard.quadrature != "exponential_trapezoid") {
    out.push_back("picard.quadrature must be trapezoid or exponential_trapezoid");
  }
  if (!(cfl > 0.0)) out.push_back("cfl must be > 0");
  if (!(blowup_factor > 1.0)) out.push_back("blowup_factor must be > 1");
  return out;
}

void SolverConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

namespace {

using Coeffs = std::vector<Complex>;

// Per-lattice tables shared by all evaluations on one grid.
struct Operators {
  Operators(const Grid2D& grid, const PhysicalParams& p) : g(grid) {
    const int n = g.n();
    const double dk = g.dk();
    xi1.resize(g.size());
    xi2.resize(g.size());
    keep.resize(g.size());
    lin.resize(g.size());
    mirror.resize(g.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto k = g.flat(i, j);
        const int k1 = g.wavenumber(i);
        const int k2 = g.wavenumber(j);
        xi1[k] = dk * k1;
        xi2[k] = dk * k2;
        keep[k] = g.retained(k1, k2) ? 1.0 : 0.0;
        const double r = std::hypot(xi1[k], xi2[k]);
        lin[k] = r > 0.0 ? p.kappa * std::pow(r, p.gamma) : 0.0;
        mirror[k] = g.flat((n - i) % n, (n - j) % n);
      }
    }
    buf_a.resize(g.size());
    buf_b.resize(g.size());
    buf_c.resize(g.size());
  }

  std::vector<double> propagator(double t) const {
    std::vector<double> e(lin.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::exp(-t * lin[k]);
    return e;
  }

  // out = div(v theta); returns max |v| on the grid.
  double nonlinear(const Coeffs& c, Coeffs& out) {
    const Complex I(0.0, 1.0);
    const int n = g.n();
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double r = std::hypot(xi1[k], xi2[k]);
      const Complex ct = keep[k] * c[k];
      Complex v1, v2;
      if (r > 0.0) {
        v1 = -I * (xi2[k] / r) * ct;
        v2 = I * (xi1[k] / r) * ct;
      }
      buf_a[k] = ct + I * v1;  // theta + i v1
      buf_b[k] = v2;
    }
    fft::inverse(n, buf_a, buf_c);
    fft::inverse(n, buf_b, buf_a);
    double vmax2 = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double th = buf_c[k].real();
      const double u1 = buf_c[k].imag();
      const double u2 = buf_a[k].real();
      vmax2 = std::max(vmax2, u1 * u1 + u2 * u2);
      buf_b[k] = Complex(u1 * th, u2 * th);
    }
    fft::forward(n, buf_b, buf_a);
    out.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Complex w = buf_a[k];
      const Complex wm = std::conj(buf_a[mirror[k]]);
      const Complex p1 = 0.5 * (w + wm);
      const Complex p2 = -0.5 * I * (w - wm);
      out[k] = keep[k] * I * (xi1[k] * p1 + xi2[k] * p2);
    }
    return std::sqrt(vmax2);
  }

  Grid2D g;
  std::vector<double> xi1, xi2, keep, lin;
  std::vector<std::size_t> mirror;
  Coeffs buf_a, buf_b, buf_c;
};

SpectralField wrap(const Grid2D& g, Coeffs c) {
  return SpectralField::from_coefficients(g, std::move(c), 1e-8);
}

// Largest per-axis |xi_i| carrying a coefficient above the noise floor.
double active_wavenumber(const Grid2D& g, const Coeffs& c) {
  double peak = 0.0;
  for (const auto& z : c) peak = std::max(peak, std::abs(z));
  int kmax = 1;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (std::abs(c[g.flat(i, j)]) > 1e-14 * peak) {
        kmax = std::max({kmax, std::abs(g.wavenumber(i)), std::abs(g.wavenumber(j))});
      }
    }
  }
  return kmax * g.dk();
}

void check_cfl(double h, double speed, double kmax, double c_cfl, int step_index, double t) {
  if (speed <= 0.0) return;
  const double limit = c_cfl / (speed * kmax);
  if (h > limit) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "CFL violation at step " << step_index << " (t=" << t << "): dt=" << h
        << " exceeds limit " << limit << " (max|v|=" << speed << ")";
    throw CflError(msg.str());
  }
}

// One IF-RK4 step with half and full propagators eh, ef; n0 = N(c) is precomputed.
void if_rk4(Operators& ops, const std::vector<double>& eh, const std::vector<double>& ef,
            double h, const Coeffs& c, const Coeffs& n0, Coeffs& out) {
  const std::size_t m = c.size();
  Coeffs a(m), b(m), d(m), na, nb, nd;
  for (std::size_t k = 0; k < m; ++k) a[k] = eh[k] * (c[k] - 0.5 * h * n0[k]);
  ops.nonlinear(a, na);
  for (std::size_t k = 0; k < m; ++k) b[k] = eh[k] * c[k] - 0.5 * h * na[k];
  ops.nonlinear(b, nb);
  for (std::size_t k = 0; k < m; ++k) d[k] = ef[k] * c[k] - h * eh[k] * nb[k];
  ops.nonlinear(d, nd);
  out.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    out[k] = ef[k] * c[k] -
             h / 6.0 * (ef[k] * n0[k] + 2.0 * eh[k] * (na[k] + nb[k]) + nd[k]);
  }
}

void require_mean_zero(const SpectralField& f) {
  const double scale = std::max(1.0, f.max_abs_coefficient());
  if (std::abs(f.mean()) > 1e-12 * scale) {
    throw DomainError("initial datum must have zero mean (mean = " +
                      std::to_string(f.mean().real()) + ")");
  }
}

}  // namespace

SpectralField nonlinear_term(const SpectralField& theta) {
  Operators ops(theta.grid(), PhysicalParams{});
  Coeffs c(theta.coeffs().begin(), theta.coeffs().end());
  Coeffs out;
  ops.nonlinear(c, out);
  return wrap(theta.grid(), std::move(out));
}

double cfl_limit(const SpectralField& theta, double c_cfl) {
  Operators ops(theta.grid(), PhysicalParams{});
  Coeffs c(theta.coeffs().begin(), theta.coeffs().end());
  Coeffs out;
  const double speed = ops.nonlinear(c, out);
  if (speed <= 0.0) return std::numeric_limits<double>::infinity();
  return c_cfl / (speed * active_wavenumber(theta.grid(), c));
}

SpectralField step(const SpectralField& theta, double dt, const SolverConfig& cfg) {
  cfg.params.validate();
  if (!(dt > 0.0)) throw DomainError("step: dt must be > 0");
  Operators ops(theta.grid(), cfg.params);
  Coeffs c(theta.coeffs().begin(), theta.coeffs().end());
  Coeffs n0, out;
  const double speed = ops.nonlinear(c, n0);
  check_cfl(dt, speed, active_wavenumber(theta.grid(), c), cfg.cfl, 1, 0.0);
  if_rk4(ops, ops.propagator(0.5 * dt), ops.propagator(dt), dt, c, n0, out);
  return wrap(theta.grid(), std::move(out));
}

TrajectoryRecord simulate(const SpectralField& theta0, const SolverConfig& cfg) {
  cfg.validate();
  const Grid2D grid = cfg.grid();
  require_same_grid(grid, theta0.grid(), "simulate");
  require_mean_zero(theta0);
  Operators ops(grid, cfg.params);
  const int steps = cfg.steps();
  const double h = cfg.T / steps;
  const auto eh = ops.propagator(0.5 * h);
  const auto ef = ops.propagator(h);

  TrajectoryRecord traj(grid, cfg.params);
  traj.append(0.0, theta0);
  traj.diagnostics.push_back(measure(theta0, 0.0, cfg.params));
  const double linf0 = traj.diagnostics.back().linf;

  Coeffs c(theta0.coeffs().begin(), theta0.coeffs().end());
  Coeffs n0, next;
  for (int s = 1; s <= steps; ++s) {
    const double speed = ops.nonlinear(c, n0);
    check_cfl(h, speed, active_wavenumber(grid, c), cfg.cfl, s, (s - 1) * h);
    if_rk4(ops, eh, ef, h, c, n0, next);
    c.swap(next);
    const double t = s == steps ? cfg.T : s * h;
    auto field = wrap(grid, c);
    auto diag = measure(field, t, cfg.params);
    traj.diagnostics.push_back(diag);
    if (!std::isfinite(diag.linf) || (linf0 > 0.0 && diag.linf > cfg.blowup_factor * linf0)) {
      std::ostringstream msg;
      msg << "blow-up guard tripped at step " << s << " (t=" << t << "): ||theta||_inf = "
          << diag.linf << " exceeds " << cfg.blowup_factor << " x initial " << linf0;
      throw BlowUpError(msg.str());
    }
    if (s % cfg.snapshot_every == 0 || s == steps) traj.append(t, std::move(field));
  }
  return traj;
}

std::pair<TrajectoryRecord, PicardState> picard_solve(const SpectralField& theta0,
                                                      const SolverConfig& cfg) {
  cfg.validate();
  const Grid2D grid = cfg.grid();
  require_same_grid(grid, theta0.grid(), "picard_solve");
  require_mean_zero(theta0);
  Operators ops(grid, cfg.params);
  const int M = cfg.picard.n_time_nodes;
  const double h = cfg.T / (M - 1);
  const std::size_t size = grid.size();
  const auto eh = ops.propagator(h);

  // Quadrature weights for the step I_m = E I_{m-1} + wa N_{m-1} + wb N_m.
  std::vector<double> wa(size), wb(size);
  const bool exponential = cfg.picard.quadrature == "exponential_trapezoid";
  for (std::size_t k = 0; k < size; ++k) {
    const double z = ops.lin[k] * h;
    if (!exponential) {
      wa[k] = 0.5 * h * eh[k];
      wb[k] = 0.5 * h;
    } else if (z < 1e-4) {
      wa[k] = h * (0.5 - z / 3.0 + z * z / 8.0);
      wb[k] = h * (0.5 - z / 6.0 + z * z / 24.0);
    } else {
      const double ez = std::exp(-z);
      wa[k] = h * (1.0 - ez * (1.0 + z)) / (z * z);
      wb[k] = h * (1.0 - ez) / z - wa[k];
    }
  }

  PicardState state;
  std::vector<Coeffs> linear(M), current(M);
  Coeffs c0(theta0.coeffs().begin(), theta0.coeffs().end());
  for (int m = 0; m < M; ++m) {
    state.nodes.push_back(m == M - 1 ? cfg.T : m * h);
    const auto e = ops.propagator(state.nodes.back());
    linear[m].resize(size);
    for (std::size_t k = 0; k < size; ++k) linear[m][k] = e[k] * c0[k];
  }
  current = linear;

  std::vector<Coeffs> nl(M);
  int growth = 0;
  for (int it = 1; it <= cfg.picard.max_iters; ++it) {
    for (int m = 0; m < M; ++m) ops.nonlinear(current[m], nl[m]);
    Coeffs integral(size);
    double residual = 0.0;
    for (int m = 0; m < M; ++m) {
      if (m > 0) {
        for (std::size_t k = 0; k < size; ++k) {
          integral[k] = eh[k] * integral[k] + wa[k] * nl[m - 1][k] + wb[k] * nl[m][k];
        }
      }
      double diff = 0.0;
      double norm = 0.0;
      for (std::size_t k = 0; k < size; ++k) {
        const Complex v = linear[m][k] - integral[k];
        diff += std::norm(v - current[m][k]);
        norm += std::norm(v);
        current[m][k] = v;
      }
      if (norm > 0.0) residual = std::max(residual, std::sqrt(diff / norm));
    }
    const auto& hist = state.residual_history;
    if (!hist.empty() && residual > hist.back()) {
      ++state.non_monotone_steps;
      if (++growth >= 3) {
        std::ostringstream msg;
        msg << "Picard iteration diverges: residual grew 3 times in a row, last " << residual
            << " at iterate " << it;
        throw DivergenceError(msg.str());
      }
    } else {
      growth = 0;
    }
    state.residual_history.push_back(residual);
    state.iterate_index = it;
    if (residual <= cfg.picard.tol) break;
  }

  TrajectoryRecord traj(grid, cfg.params);
  for (int m = 0; m < M; ++m) {
    auto f = wrap(grid, current[m]);
    state.fields.push_back(f);
    traj.diagnostics.push_back(measure(f, state.nodes[m], cfg.params));
    traj.append(state.nodes[m], std::move(f));
  }
  return {std::move(traj), std::move(state)};
}

}  // namespace qg
