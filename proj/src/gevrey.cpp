#include "qg/gevrey.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "qg/errors.hpp"
#include "qg/random_fields.hpp"

namespace qg {

namespace {

std::string num(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

std::vector<std::string> GevreyConfig::violations() const {
  std::vector<std::string> out;
  if (!(gamma >= 1.0 && gamma <= 2.0)) out.push_back("gevrey: gamma must lie in [1, 2]");
  if (!(alpha > 0.0 && alpha <= 1.0)) out.push_back("gevrey: alpha must lie in (0, 1]");
  if (gamma == 1.0 && alpha > 0.25) {
    out.push_back("gevrey: alpha <= 1/4 required when gamma = 1 (alpha = " + num(alpha) + ")");
  }
  if (!(exp_cap > 0.0)) out.push_back("gevrey: exp_cap must be > 0");
  return out;
}

void GevreyConfig::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

double GevreyConfig::rate(double t) const { return alpha * std::pow(t, 1.0 / gamma); }

std::vector<std::string> WeightedNormSpec::violations() const {
  std::vector<std::string> out;
  if (!(gamma >= 1.0 && gamma <= 2.0)) out.push_back("norm spec: gamma must lie in [1, 2]");
  if (std::isnan(p) || p < 1.0) out.push_back("norm spec: p must be >= 1");
  if (std::isnan(q) || q < 1.0) out.push_back("norm spec: q must be >= 1");
  if (critical() || !(gamma > 1.0)) return out;
  if (!(r > 1.0) || std::isinf(r)) out.push_back("norm spec: 1 < r < infinity required (r = " + num(r) + ")");
  if (!(alpha_k > 0.0)) out.push_back("norm spec: alpha must be > 0");
  const double two_r = 2.0 / r;
  if (!(two_r > 0.0 && two_r < gamma - 1.0)) {
    out.push_back("norm spec: condition (i) 0 < 2/r < gamma - 1 fails (2/r = " + num(two_r) +
                  ", gamma - 1 = " + num(gamma - 1.0) + ")");
  }
  if (!(s() - two_r > 0.0)) {
    out.push_back("norm spec: condition (ii) 2/p + 1 - gamma - 2/r > 0 fails (value " +
                  num(s() - two_r) + ")");
  }
  if (!(beta() > 0.0 && beta() < 1.0 - alpha_k / gamma)) {
    out.push_back("norm spec: condition (iii) 0 < beta < 1 - alpha/gamma fails (beta = " +
                  num(beta()) + ", 1 - alpha/gamma = " + num(1.0 - alpha_k / gamma) + ")");
  }
  return out;
}

void WeightedNormSpec::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

SpectralField gevrey_transform(const SpectralField& f, double t, const GevreyConfig& cfg) {
  if (!(t >= 0.0)) throw DomainError("gevrey_transform: t must be >= 0");
  if (t == 0.0) return f;
  const double floor = kNoiseFloor * f.max_abs_coefficient();
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& z : c) {
    if (std::abs(z) < floor) z = 0.0;
  }
  auto cleaned = SpectralField::from_coefficients(f.grid(), std::move(c));
  try {
    return gevrey_multiplier(cleaned, cfg.rate(t), cfg.exp_cap);
  } catch (const OverflowError& e) {
    throw OverflowError("snapshot t = " + num(t) + ": " + e.what());
  }
}

TrajectoryRecord gevrey_transform(const TrajectoryRecord& traj, const GevreyConfig& cfg) {
  cfg.validate();
  TrajectoryRecord out(traj.grid, traj.params);
  for (std::size_t m = 0; m < traj.size(); ++m) {
    out.append(traj.times[m], gevrey_transform(traj.snapshots[m], traj.times[m], cfg));
  }
  return out;
}

RadiusEstimate analyticity_radius(const SpectralField& f, double time) {
  RadiusEstimate est;
  est.time = time;
  const auto& g = f.grid();
  const int n = g.n();
  const double top = f.max_abs_coefficient();
  if (top == 0.0) return est;
  std::map<int, double> shell_max;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m = std::abs(g.wavenumber(i)) + std::abs(g.wavenumber(j));
      if (m == 0) continue;
      const double a = std::abs(f.coeffs()[g.flat(i, j)]);
      auto& slot = shell_max[m];
      slot = std::max(slot, a);
    }
  }
  std::vector<double> xs, ys;
  for (const auto& [m, a] : shell_max) {
    if (a < kNoiseFloor * top || a == 0.0) continue;
    xs.push_back(m * g.dk());
    ys.push_back(std::log(a));
  }
  est.shells_used = static_cast<int>(xs.size());
  if (xs.size() < 4) return est;
  const double k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  est.fit_quality = r2;
  est.reliable = r2 >= 0.9;
  est.radius = std::max(0.0, -slope);
  return est;
}

NormReport k_g_e1_norms(const TrajectoryRecord& traj, const WeightedNormSpec& spec,
                        const LPFrame& frame) {
  spec.validate();
  if (traj.empty()) throw StructuralError("k_g_e1_norms: empty trajectory");
  require_same_grid(traj.grid, frame.grid(), "k_g_e1_norms");
  NormReport rep;
  std::ostringstream label;
  label << "gamma=" << spec.gamma << " p=" << spec.p << " q=" << spec.q;
  if (!spec.critical()) label << " r=" << spec.r << " alpha=" << spec.alpha_k;
  rep.spec_label = label.str();
  rep.times = traj.times;
  if (spec.critical()) {
    const BesovIndex lo{2.0 / spec.p, spec.p, spec.q};
    const BesovIndex hi{2.0 / spec.p + 1.0, spec.p, spec.q};
    double e1 = tilde_besov_norm(traj, INFINITY, lo, frame);
    if (traj.size() >= 2) e1 += tilde_besov_norm(traj, 1.0, hi, frame);
    rep.e1_norm = e1;
    return rep;
  }
  const BesovIndex base = spec.besov();
  const BesovIndex extra{spec.s() + spec.alpha_k, spec.p, spec.q};
  double kbest = -1.0, gbest = -1.0;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    const double t = traj.times[m];
    const auto& f = traj.snapshots[m];
    const double kv = besov_norm(f, base, frame) +
                      std::pow(t, spec.alpha_k / spec.gamma) * besov_norm(f, extra, frame);
    const double gv = lp_norm(f, spec.p1()) + std::pow(t, spec.beta()) * lp_norm(f, spec.r);
    rep.k_series.push_back(kv);
    rep.g_series.push_back(gv);
    if (t <= 0.0 && traj.size() > 1) continue;
    if (kv > kbest) {
      kbest = kv;
      rep.k_argmax = t;
    }
    if (gv > gbest) {
      gbest = gv;
      rep.g_argmax = t;
    }
  }
  rep.k_norm = kbest;
  rep.g_norm = gbest;
  return rep;
}

NormReport analyze_trajectory(const TrajectoryRecord& traj, const GevreyConfig& cfg,
                              const WeightedNormSpec& spec) {
  const auto theta = gevrey_transform(traj, cfg);
  auto rep = k_g_e1_norms(theta, spec, build_frame(traj.grid));
  for (std::size_t m = 0; m < traj.size(); ++m) {
    rep.radii.push_back(analyticity_radius(traj.snapshots[m], traj.times[m]));
  }
  return rep;
}

double damping_exponent(double s, double t, double gamma) {
  const double e = 1.0 / gamma;
  return std::pow(t - s, e) + std::pow(s, e) - std::pow(t, e);
}

SpectralField operator_E_lemma32(const SpectralField& f, double s, double t, double gamma) {
  if (!(s >= 0.0 && s <= t)) {
    throw DomainError("operator_E: need 0 <= s <= t (s = " + num(s) + ", t = " + num(t) + ")");
  }
  const double a = std::max(0.0, damping_exponent(s, t, gamma));
  if (a == 0.0) return f;
  return gevrey_damping(f, a);
}

AmplificationReport multiplier_lemma33_check(double gamma, const std::vector<double>& a_values,
                                       const Grid2D& grid, std::uint64_t seed, int bank_size) {
  if (!(gamma > 1.0)) throw DomainError("amplification check requires gamma > 1");
  AmplificationReport rep;
  rep.gamma = gamma;
  rep.a_values = a_values;
  const auto bank = random_bank(grid, seed, bank_size,
                                RandomFieldSpec{1.0, static_cast<double>(grid.dealias_cutoff()), 0.0, 1.0});
  for (double a : a_values) {
    if (!(a >= 0.0)) throw DomainError("amplification check: a must be >= 0");
    const double w = std::pow(a, 1.0 / gamma);
    MultiplierSymbol m("amplification", [=](double x, double y) {
      const double r = std::hypot(x, y);
      const double e = w * (std::abs(x) + std::abs(y)) - 0.5 * a * (r > 0.0 ? std::pow(r, gamma) : 0.0);
      return Complex(std::exp(e), 0.0);
    });
    double sym = 0.0;
    for (const auto& v : m.tabulate(grid)) sym = std::max(sym, v.real());
    rep.symbol_max.push_back(sym);
    double amp = 0.0;
    for (const auto& f : bank) {
      const auto ef = apply_multiplier(f, m);
      for (double p : {2.0, 4.0}) amp = std::max(amp, lp_norm(ef, p) / lp_norm(f, p));
    }
    rep.max_amplification.push_back(amp);
    rep.sup_amplification = std::max(rep.sup_amplification, amp);
  }
  return rep;
}

DecayFit fit_power_law(const std::vector<double>& times, const std::vector<double>& values,
                       double t_lo, double t_hi) {
  if (times.size() != values.size()) throw StructuralError("fit_power_law: size mismatch");
  if (!(t_lo > 0.0) || !(t_hi >= 10.0 * t_lo * (1.0 - 1e-12))) {
    throw DomainError("decay fit window [" + num(t_lo) + ", " + num(t_hi) +
                      "] spans less than one decade");
  }
  std::vector<double> lt, t, lv;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < t_lo * (1 - 1e-12) || times[i] > t_hi * (1 + 1e-12) || !(values[i] > 0.0)) continue;
    lt.push_back(std::log(times[i]));
    t.push_back(times[i]);
    lv.push_back(std::log(values[i]));
  }
  DecayFit fit;
  fit.points = static_cast<int>(lt.size());
  if (lt.size() < 3) throw DomainError("decay fit: fewer than 3 points in the window");
  auto regress = [&](const std::vector<double>& x, double& slope, double& icpt, double& r2,
                     double& se) {
    const double k = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mx += x[i];
      my += lv[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxx += (x[i] - mx) * (x[i] - mx);
      sxy += (x[i] - mx) * (lv[i] - my);
      syy += (lv[i] - my) * (lv[i] - my);
    }
    slope = sxy / sxx;
    icpt = my - slope * mx;
    const double sse = std::max(0.0, syy - slope * sxy);
    r2 = syy > 0.0 ? 1.0 - sse / syy : 1.0;
    se = x.size() > 2 ? std::sqrt(sse / (k - 2.0) / sxx) : 0.0;
  };
  double s2, i2, se2;
  regress(lt, fit.slope, fit.intercept, fit.r2, fit.std_error);
  regress(t, s2, i2, fit.r2_semilog, se2);
  fit.band = 1.96 * fit.std_error;
  fit.exponential = fit.r2_semilog > fit.r2 && fit.r2 < 1.0 - 1e-12;
  return fit;
}

double derivative_norm(const SpectralField& f, int k, DecayNorm norm) {
  if (k < 0) throw DomainError("derivative order must be >= 0");
  if (norm == DecayNorm::l2_gradient) {
    return lp_norm(apply_multiplier(f, symbols::fractional_laplacian(k)), 2.0);
  }
  double best = 0.0;
  for (int a = 0; a <= k; ++a) {
    SpectralField d = f;
    for (int i = 0; i < a; ++i) d = apply_multiplier(d, symbols::derivative(1));
    for (int i = 0; i < k - a; ++i) d = apply_multiplier(d, symbols::derivative(2));
    best = std::max(best, lp_norm(d, INFINITY));
  }
  return best;
}

DecayFit decay_rate_fit(const TrajectoryRecord& traj, int k, DecayNorm norm, double t_lo,
                        double t_hi) {
  std::vector<double> t, v;
  for (std::size_t m = 0; m < traj.size(); ++m) {
    if (traj.times[m] < t_lo * (1 - 1e-12) || traj.times[m] > t_hi * (1 + 1e-12)) continue;
    t.push_back(traj.times[m]);
    v.push_back(derivative_norm(traj.snapshots[m], k, norm));
  }
  return fit_power_law(t, v, t_lo, t_hi);
}

}  // namespace qg
