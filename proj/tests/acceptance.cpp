// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qg/dynamics.hpp"
#include "qg/gevrey.hpp"
#include "qg/monitors.hpp"
#include "qg/random_fields.hpp"
#include "qg/regression_constants.hpp"
#include "qg/report.hpp"
#include "qg/verify.hpp"

using namespace qg;
namespace rc = qg::regression;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what, double measured, const std::string& bound) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + "=" + format17(measured) + (ok ? " <= " : " > ") + bound;
  }
  void require_in(double lo, double hi, const std::string& what, double measured) {
    const bool ok = measured >= lo && measured <= hi;
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + "=" + format17(measured) + (ok ? " in [" : " outside [") + format17(lo) + ", " + format17(hi) + "]";
  }
};

std::string num(double v) { return format17(v); }

SpectralField mode(const Grid2D& g, int k1, int k2, double amp) {
  std::vector<Complex> c(g.size());
  c[g.flat(g.index_of(k1), g.index_of(k2))] += 0.5 * amp;
  c[g.flat(g.index_of(-k1), g.index_of(-k2))] += 0.5 * amp;
  return SpectralField::from_coefficients(g, std::move(c));
}

void suite_into(Outcome& o, const std::string& suite, const std::vector<std::string>& names) {
  const auto r = run_verify(suite, default_seed(suite));
  for (const auto& c : r.checks) {
    if (names.empty() || std::find(names.begin(), names.end(), c.name) != names.end()) {
      o.require(c.pass, c.name, c.measured, num(c.threshold));
    }
  }
}

Outcome criterion1() {
  Outcome o;
  const Grid2D g(64);
  double worst = 0.0;
  for (double gamma : {1.0, 1.5, 2.0}) {
    SolverConfig cfg;
    cfg.params = {gamma, 1.0, gamma == 1.0 ? 0.25 : 1.0};
    cfg.n = 64;
    cfg.T = 1.0;
    cfg.dt = 0.01;
    for (auto [k1, k2] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 4}}) {
      const auto th = mode(g, k1, k2, 1.0);
      const double decay = std::exp(-std::pow(std::hypot(k1, k2), gamma));
      worst = std::max(worst, relative_l2_error(simulate(th, cfg).back(), th * decay));
    }
  }
  o.require(worst <= 1e-8, "rel_l2", worst, "1e-8");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Grid2D g(64);
  SolverConfig cfg;
  cfg.params = {1.5, 1.0, 1.0};
  cfg.T = 0.5;
  cfg.dt = 0.5 / 256;
  cfg.picard.n_time_nodes = 65;
  cfg.picard.tol = 1e-12;
  const auto th = scenarios::two_mode(g, 0.1);
  const auto [pt, st] = picard_solve(th, cfg);
  const double err = relative_l2_error(pt.back(), simulate(th, cfg).back());
  o.require(err <= 1e-5, "picard_vs_simulate", err, "1e-5");
  double ratio = 0.0;
  for (std::size_t i = 1; i < st.residual_history.size(); ++i) {
    if (st.residual_history[i - 1] < 1e-13) break;
    ratio = std::max(ratio, st.residual_history[i] / st.residual_history[i - 1]);
  }
  o.require(ratio < 0.5, "contraction_ratio", ratio, "0.5");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Grid2D g(64);
  double balance = 0.0, mean = 0.0, maxp = -INFINITY;
  for (double gamma : {1.0, 1.5}) {
    SolverConfig cfg;
    cfg.params = {gamma, 1.0, gamma == 1.0 ? 0.25 : 1.0};
    cfg.T = 1.0;
    cfg.dt = 0.01;
    const auto m = monitors(simulate(random_field(g, rc::kDynamicsSeed, {1.0, 12.0, 0.2, 0.1}), cfg));
    balance = std::max(balance, m.max_balance_relative());
    mean = std::max(mean, m.max_mean_drift());
    maxp = std::max(maxp, m.max_linf_increase());
  }
  o.require(balance <= 1e-6, "energy_balance_per_time", balance, "1e-6");
  o.require(mean <= 1e-13, "mean_drift", mean, "1e-13");
  o.require(maxp <= 1e-6, "linf_increase", maxp, "1e-6");
  return o;
}

Outcome criterion4() {
  Outcome o;
  suite_into(o, "frame", {});
  return o;
}

Outcome criterion5() {
  Outcome o;
  suite_into(o, "bilinear", {});
  return o;
}

// Theta-norm ratio and envelope for a run, plus the trajectory.
struct GevreyRun {
  double ratio = 0.0;
  double envelope = 0.0;
};

GevreyRun theta_norms(const TrajectoryRecord& traj, const GevreyConfig& gcfg, double gamma) {
  const auto theta = gevrey_transform(traj, gcfg);
  const auto frame = build_frame(traj.grid);
  const BesovIndex idx{2.0 / 2.0 + 1.0 - gamma, 2.0, 2.0};
  const double n0 = besov_norm(theta.snapshots[0], idx, frame);
  GevreyRun out;
  for (std::size_t m = 0; m < theta.size(); ++m) {
    const double r = besov_norm(theta.snapshots[m], idx, frame) / n0;
    out.ratio = std::max(out.ratio, r);
    out.envelope = std::max(out.envelope, r / std::exp2(theta.times[m]));
  }
  return out;
}

Outcome criterion6() {
  Outcome o;
  const auto cfg = scenarios::subcritical_gevrey_config();
  const auto traj = simulate(random_field(cfg.grid(), rc::kGevreySeed, {1.0, 40.0, 0.3, 0.1}), cfg);
  const auto n = theta_norms(traj, {1.0, 1.5}, 1.5);
  o.require(n.ratio <= rc::kGevreyNormGrowth * rc::kRegressionSlack, "theta_besov_ratio", n.ratio,
            num(rc::kGevreyNormGrowth * rc::kRegressionSlack));
  o.require(n.envelope <= rc::kGevreyEnvelope * rc::kRegressionSlack, "ratio_over_2^t", n.envelope,
            num(rc::kGevreyEnvelope * rc::kRegressionSlack));
  double deficit = 0.0;
  bool reliable = true;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const double t = traj.times[m];
    if (t < 0.1 - 1e-12 || t > 1.0 + 1e-12) continue;
    const auto r = analyticity_radius(traj.snapshots[m], t);
    reliable = reliable && r.reliable;
    deficit = std::max(deficit, 0.8 * std::pow(t, 1.0 / 1.5) / r.radius);
  }
  o.require(deficit <= 1.0 && reliable, "max 0.8 t^(1/gamma) / radius", deficit, "1");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto cfg = scenarios::critical_config();
  const auto traj = simulate(scenarios::smoothed_fronts(cfg.grid(), 0.05, 0.04, 0.5), cfg);
  o.require(traj.times.back() == cfg.T ? true : false, "final_time", traj.times.back(), num(cfg.T));
  const auto fit = decay_rate_fit(traj, 1, DecayNorm::sup_partials, 1.0, 10.0);
  o.require_in(-1.1, -0.9, "slope", fit.slope);
  o.require(!fit.exponential, "exponential_flag", fit.exponential, "0");
  const auto n = theta_norms(traj, {0.25, 1.0}, 1.0);
  o.require(n.ratio <= rc::kCriticalNormGrowth * rc::kRegressionSlack, "theta_besov_ratio", n.ratio,
            num(rc::kCriticalNormGrowth * rc::kRegressionSlack));
  const auto m = monitors(traj);
  o.require(m.max_linf_increase() <= 1e-6, "linf_increase", m.max_linf_increase(), "1e-6");
  return o;
}

Outcome criterion8() {
  Outcome o;
  suite_into(o, "kernels", {"beta_identity", "poisson_exponent_p2", "poisson_exponent_p4", "hls_ratio"});
  return o;
}

Outcome criterion9() {
  Outcome o;
  SolverConfig cfg;
  cfg.params = {1.5, 1.0, 1.0};
  cfg.n = 128;
  cfg.T = 0.5;
  cfg.dt = 0.005;
  const double lambda_gamma = std::pow(2.0, 1.5);
  const auto base = random_field(cfg.grid(), rc::kDynamicsSeed + 1, {1.0, 4.0, 0.0, 0.05});
  const auto ref = simulate(base, cfg).back();
  SolverConfig fast = cfg;
  fast.T = cfg.T / lambda_gamma;
  fast.dt = cfg.dt / lambda_gamma;
  const auto scaled = simulate(scenarios::rescale(base, 2, 1.5), fast).back();
  const double err = relative_l2_error(scenarios::unscale(scaled, 2, 1.5), ref);
  o.require(err <= 1e-6, "round_trip", err, "1e-6");
  // only even modes may carry energy in the rescaled run
  double odd = 0.0;
  const auto& g = scaled.grid();
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if ((g.wavenumber(i) % 2) || (g.wavenumber(j) % 2)) odd = std::max(odd, std::abs(scaled.coeffs()[g.flat(i, j)]));
  o.require(odd <= 1e-15 * scaled.max_abs_coefficient(), "odd_mode_leak", odd, "1e-15 max");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, "exact linear dynamics", 5.0, criterion1},
      {2, "Picard vs integrating-factor RK4", 60.0, criterion2},
      {3, "energy balance, mean, maximum principle", 0.0, criterion3},
      {4, "Littlewood-Paley suite", 0.0, criterion4},
      {5, "bilinear operator", 0.0, criterion5},
      {6, "subcritical Gevrey regularity", 300.0, criterion6},
      {7, "critical case decay", 0.0, criterion7},
      {8, "kernel and integral inequalities", 0.0, criterion8},
      {9, "scaling invariance", 0.0, criterion9},
  };
  int failures = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("threw: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget_s > 0.0) o.require(secs < e.budget_s, "runtime_s", secs, num(e.budget_s));
    failures += !o.pass;
    std::printf("%s criterion %d (%s) [%.1fs]: %s\n", o.pass ? "PASS" : "FAIL", e.id, e.title, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(entries.size()) - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
