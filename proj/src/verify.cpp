#include "qg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>

#include "qg/errors.hpp"
#include "qg/gevrey.hpp"
#include "qg/kernels.hpp"
#include "qg/littlewood_paley.hpp"
#include "qg/monitors.hpp"
#include "qg/multipliers.hpp"
#include "qg/random_fields.hpp"
#include "qg/regression_constants.hpp"
#include "qg/report.hpp"

namespace qg {

namespace scenarios {

SpectralField smoothed_fronts(const Grid2D& grid, double a1, double a2, double t0) {
  std::vector<Complex> c(grid.size());
  const int K = grid.dealias_cutoff();
  const Complex two_i(0.0, 2.0);
  for (int m = 1; m <= K; m += 2) {
    const double xi = m * grid.dk();
    const double base = 4.0 / (std::numbers::pi * m);
    const Complex b1 = a1 * base * std::exp(-t0 * xi) / two_i;
    const Complex b2 = a2 * base * std::exp(-(t0 + 0.1) * xi) / two_i;
    c[grid.flat(grid.index_of(m), 0)] += b1;
    c[grid.flat(grid.index_of(-m), 0)] -= b1;
    c[grid.flat(0, grid.index_of(m))] += b2;
    c[grid.flat(0, grid.index_of(-m))] -= b2;
  }
  return SpectralField::from_coefficients(grid, std::move(c));
}

SpectralField two_mode(const Grid2D& grid, double amplitude) {
  return SpectralField::from_function(grid, [amplitude](double x, double y) {
    return amplitude * (std::cos(x) + std::cos(2.0 * y));
  });
}

SpectralField rescale(const SpectralField& f, int lambda, double gamma) {
  const auto& g = f.grid();
  std::vector<Complex> c(g.size());
  const double factor = std::pow(lambda, gamma - 1.0);
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      const Complex v = f.coeffs()[g.flat(i, j)];
      if (v == Complex{}) continue;
      const int k1 = lambda * g.wavenumber(i);
      const int k2 = lambda * g.wavenumber(j);
      if (!g.retained(k1, k2)) throw DomainError("rescale: mode leaves the retained band");
      c[g.flat(g.index_of(k1), g.index_of(k2))] = factor * v;
    }
  }
  return SpectralField::from_coefficients(g, std::move(c));
}

SpectralField unscale(const SpectralField& f, int lambda, double gamma) {
  const auto& g = f.grid();
  std::vector<Complex> c(g.size());
  const double factor = std::pow(lambda, gamma - 1.0);
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      const int k1 = lambda * g.wavenumber(i);
      const int k2 = lambda * g.wavenumber(j);
      if (std::abs(k1) >= g.n() / 2 || std::abs(k2) >= g.n() / 2) continue;
      c[g.flat(i, j)] = f.coeffs()[g.flat(g.index_of(k1), g.index_of(k2))] / factor;
    }
  }
  return SpectralField::from_coefficients(g, std::move(c));
}

SolverConfig subcritical_gevrey_config() {
  SolverConfig cfg;
  cfg.params = {1.5, 1.0, 1.0};
  cfg.n = 128;
  cfg.T = 2.0;
  cfg.dt = 0.005;
  cfg.snapshot_every = 10;
  return cfg;
}

SolverConfig critical_config() {
  SolverConfig cfg;
  cfg.params = {1.0, 1.0, 0.25};
  cfg.n = 256;
  cfg.box_length = 16.0 * std::numbers::pi;
  cfg.T = 10.0;
  cfg.dt = 0.05;
  cfg.snapshot_every = 2;
  return cfg;
}

}  // namespace scenarios

namespace {

namespace rc = regression;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Runner = std::function<void(std::uint64_t, const std::map<std::string, double>&,
                                  std::vector<Check>&)>;

struct SuiteDef {
  std::map<std::string, double> tolerances;
  Runner run;
};

void add(std::vector<Check>& out, const std::map<std::string, double>& tol, const std::string& name,
         double measured) {
  const double threshold = tol.at(name);
  out.push_back({name, measured, threshold, std::isfinite(measured) && measured <= threshold});
}

// ---------------------------------------------------------------- frame

void run_frame(std::uint64_t seed, const std::map<std::string, double>& tol, std::vector<Check>& out) {
  const Grid2D g(64);
  const auto frame = build_frame(g);
  const double dk = g.dk();
  double partition = 0.0, support = 0.0, overlap = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      const int k1 = g.wavenumber(i), k2 = g.wavenumber(j);
      if (!g.retained(k1, k2) || (k1 == 0 && k2 == 0)) continue;
      const auto idx = g.flat(i, j);
      const double r = dk * std::hypot(k1, k2);
      double sum = frame.chi_mask()[idx];
      for (int a = frame.j_min(); a <= frame.j_max(); ++a) {
        const double pa = frame.psi_mask(a)[idx];
        sum += pa;
        if (r < std::ldexp(1.0, a - 1) || r > std::ldexp(1.0, a + 1)) support = std::max(support, std::abs(pa));
        for (int b = a + 2; b <= frame.j_max(); ++b) overlap = std::max(overlap, std::abs(pa * frame.psi_mask(b)[idx]));
      }
      partition = std::max(partition, std::abs(sum - 1.0));
    }
  }
  add(out, tol, "partition_of_unity", partition);
  add(out, tol, "annulus_support", support);
  add(out, tol, "adjacent_overlap", overlap);

  const auto bank = random_bank(g, seed, 100, {1.0, 21.0, 0.0, 1.0});
  double telescoping = 0.0, reconstruction = 0.0, para = 0.0;
  for (int f = 0; f < 10; ++f) {
    const auto& u = bank[f];
    for (int j = frame.j_min(); j <= frame.j_max(); ++j) {
      const auto lhs = low_freq_cutoff(u, j + 1, frame);
      const auto rhs = low_freq_cutoff(u, j, frame) + dyadic_block(u, j, frame);
      telescoping = std::max(telescoping, relative_l2_error(lhs, u) > 0 ? std::sqrt((lhs - rhs).coefficient_energy() / u.coefficient_energy()) : 0.0);
    }
    reconstruction = std::max(reconstruction, relative_l2_error(decompose(u, frame).reconstruct(), u));
    const auto& v = bank[f + 10];
    const auto parts = paraproduct_split(u, v, frame);
    para = std::max(para, relative_l2_error(parts.t_f_g + parts.t_g_f + parts.remainder, dealiased_product(u, v)));
  }
  add(out, tol, "telescoping", telescoping);
  add(out, tol, "reconstruction", reconstruction);
  add(out, tol, "paraproduct_reconstruction", para);

  // Bernstein: gradient ratio per block against 2^j, and L^q <= C 2^{2j(1/p-1/q)} L^p.
  std::vector<double> cj;
  const double pq[3][2] = {{2.0, 4.0}, {2.0, kInf}, {4.0, kInf}};
  double second_half[3] = {0.0, 0.0, 0.0};
  double heat = 0.0;
  for (int f = 0; f < 100; ++f) {
    for (int j = frame.j_min(); j <= frame.j_max(); ++j) {
      const auto b = dyadic_block(bank[f], j, frame);
      const auto grad = gradient_magnitude(b);
      for (double p : {2.0, 4.0, kInf}) cj.push_back(lp_norm(g, grad, p) / (std::exp2(j) * lp_norm(b, p)));
      if (f >= 50) {
        for (int k = 0; k < 3; ++k) {
          const double p = pq[k][0], q = pq[k][1];
          second_half[k] = std::max(second_half[k], lp_norm(b, q) / (std::exp2(2.0 * j * (1.0 / p - 1.0 / q)) * lp_norm(b, p)));
        }
      }
      if (f < 20) {
        for (double gamma : {1.0, 1.5, 2.0})
        for (double t : {0.01, 0.1, 1.0}) {
          const auto h = fractional_semigroup(b, t, gamma);
          for (double p : {2.0, kInf}) {
            heat = std::max(heat, lp_norm(h, p) / lp_norm(b, p) * std::exp(std::exp2(-gamma) * t * std::exp2(gamma * j)));
          }
        }
      }
    }
  }
  const auto [lo, hi] = std::minmax_element(cj.begin(), cj.end());
  const double c = std::sqrt(*lo * *hi);
  add(out, tol, "bernstein_frame_constant_log2", std::abs(std::log2(c)));
  add(out, tol, "bernstein_band_log2", std::max(std::log2(c / *lo), std::log2(*hi / c)));
  const double frozen[3] = {rc::kBernsteinC_2_4, rc::kBernsteinC_2_inf, rc::kBernsteinC_4_inf};
  const char* names[3] = {"bernstein_C_2_4_stability", "bernstein_C_2_inf_stability", "bernstein_C_4_inf_stability"};
  for (int k = 0; k < 3; ++k) add(out, tol, names[k], std::abs(second_half[k] / frozen[k] - 1.0));
  add(out, tol, "heat_localization", heat);
}

// ---------------------------------------------------------------- multipliers

void run_multipliers(std::uint64_t seed, const std::map<std::string, double>& tol, std::vector<Check>& out) {
  const Grid2D g(64);
  const auto bank = random_bank(g, seed, 10, {1.0, 30.0, 0.1, 1.0});
  double round_trip = 0.0, realness = 0.0, divergence = 0.0, semigroup = 0.0, parseval = 0.0, inverse = 0.0;
  for (const auto& f : bank) {
    round_trip = std::max(round_trip, relative_l2_error(SpectralField::from_physical(g, f.to_physical()), f));
    for (const auto& m : {symbols::fractional_laplacian(1.5), symbols::l1_norm(), symbols::riesz(1),
                          symbols::derivative(2), symbols::heat(0.3, 1.5, 1.0)}) {
      const auto tab = m.tabulate(g);
      std::vector<Complex> c(g.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = tab[k] * f.coeffs()[k];
      const auto phys = ComplexField(g, c).to_physical();
      double im = 0.0, re = 0.0;
      for (const auto& z : phys) {
        im = std::max(im, std::abs(z.imag()));
        re = std::max(re, std::abs(z));
      }
      if (re > 0.0) realness = std::max(realness, im / re);
    }
    const auto [v1, v2] = riesz_velocity(f);
    double div = 0.0;
    for (int i = 0; i < g.n(); ++i) {
      for (int j = 0; j < g.n(); ++j) {
        const auto k = g.flat(i, j);
        div = std::max(div, std::abs(g.dk() * (double(g.wavenumber(i)) * v1.coeffs()[k] + double(g.wavenumber(j)) * v2.coeffs()[k])));
      }
    }
    divergence = std::max(divergence, div / f.max_abs_coefficient());
    const auto st = fractional_semigroup(fractional_semigroup(f, 0.2, 1.5), 0.3, 1.5);
    semigroup = std::max(semigroup, relative_l2_error(st, fractional_semigroup(f, 0.5, 1.5)));
    const double l2 = lp_norm(f, 2.0);
    parseval = std::max(parseval, std::abs(l2 * l2 / (g.area() * f.coefficient_energy()) - 1.0));
    inverse = std::max(inverse, relative_l2_error(gevrey_damping(gevrey_multiplier(f, 0.3), 0.3), f));
  }
  add(out, tol, "round_trip", round_trip);
  add(out, tol, "realness", realness);
  add(out, tol, "divergence_free", divergence);
  add(out, tol, "semigroup_property", semigroup);
  add(out, tol, "parseval", parseval);
  add(out, tol, "gevrey_inverse", inverse);
}

// ---------------------------------------------------------------- bilinear

void run_bilinear(std::uint64_t seed, const std::map<std::string, double>& tol, std::vector<Check>& out) {
  const Grid2D g(32);
  const RandomFieldSpec spec{1.0, 10.0, 0.0, 1.0};
  const auto fs = random_bank(g, seed, 100, spec);
  const auto gs = random_bank(g, seed + 1, 100, spec);
  double identity = 0.0, ratio2 = 0.0, ratio4 = 0.0;
  for (double gamma : {1.0, 1.5, 2.0}) {
    const GevreyConfig cfg{gamma == 1.0 ? 0.25 : 1.0, gamma};
    for (double t : {0.0, 0.1, 1.0}) {
      for (int i = 0; i < 100; ++i) {
        const auto direct = bilinear_Bt_direct(fs[i], gs[i], t, cfg);
        identity = std::max(identity, relative_l2_error(bilinear_Bt_decomposed(fs[i], gs[i], t, cfg), direct));
        if (t > 0.0) {
          const auto fg = dealiased_product(fs[i], gs[i]);
          ratio2 = std::max(ratio2, lp_norm(direct, 2.0) / lp_norm(fg, 2.0));
          ratio4 = std::max(ratio4, lp_norm(direct, 4.0) / lp_norm(fg, 4.0));
        }
      }
    }
  }
  add(out, tol, "decomposition_identity", identity);
  const Grid2D small(16);
  const int K = small.dealias_cutoff();
  int worst = std::numeric_limits<int>::min();
  for (int p1 = -K; p1 <= K; ++p1)
    for (int p2 = -K; p2 <= K; ++p2)
      for (int q1 = -K; q1 <= K; ++q1)
        for (int q2 = -K; q2 <= K; ++q2) {
          const int e = std::abs(p1 + q1) + std::abs(p2 + q2) - std::abs(p1) - std::abs(p2) - std::abs(q1) - std::abs(q2);
          worst = std::max(worst, e);
        }
  add(out, tol, "weight_exponent_max", worst);
  add(out, tol, "ratio_q2_vs_frozen", std::abs(ratio2 / rc::kBilinearRatioQ2 - 1.0));
  add(out, tol, "ratio_q4_vs_frozen", std::abs(ratio4 / rc::kBilinearRatioQ4 - 1.0));
}

// ---------------------------------------------------------------- dynamics

void run_dynamics(std::uint64_t seed, const std::map<std::string, double>& tol, std::vector<Check>& out) {
  const Grid2D g(64);
  double single = 0.0;
  for (double gamma : {1.0, 1.5, 2.0}) {
    SolverConfig cfg;
    cfg.params = {gamma, 1.0, gamma == 1.0 ? 0.25 : 1.0};
    cfg.T = 1.0;
    cfg.dt = 0.05;
    const auto th = SpectralField::from_function(g, [](double x, double y) { return 0.01 * std::cos(2 * x + y); });
    const auto traj = simulate(th, cfg);
    single = std::max(single, relative_l2_error(traj.back(), th * std::exp(-std::pow(5.0, gamma / 2.0))));
  }
  add(out, tol, "single_mode_exact", single);

  SolverConfig cfg;
  cfg.params = {1.5, 1.0, 1.0};
  cfg.T = 0.5;
  cfg.dt = 0.5 / 256;
  cfg.picard.tol = 1e-12;
  const auto th = scenarios::two_mode(g, 0.1);
  const auto traj = simulate(th, cfg);
  const auto [ptraj, state] = picard_solve(th, cfg);
  add(out, tol, "picard_vs_simulate", relative_l2_error(ptraj.back(), traj.back()));
  double ratio = 0.0;
  for (std::size_t i = 1; i < state.residual_history.size(); ++i) {
    if (state.residual_history[i] < 1e-13) break;
    ratio = std::max(ratio, state.residual_history[i] / state.residual_history[i - 1]);
  }
  add(out, tol, "picard_contraction_ratio", ratio);

  double balance = 0.0, mean = 0.0, maxp = 0.0;
  for (double gamma : {1.0, 1.5}) {
    SolverConfig c2;
    c2.params = {gamma, 1.0, gamma == 1.0 ? 0.25 : 1.0};
    c2.T = 1.0;
    c2.dt = 0.01;
    auto f = random_field(g, seed, {1.0, 12.0, 0.2, 0.1});
    const auto m = monitors(simulate(f, c2));
    balance = std::max(balance, m.max_balance_relative());
    mean = std::max(mean, m.max_mean_drift());
    maxp = std::max(maxp, m.max_linf_increase());
  }
  add(out, tol, "energy_balance", balance);
  add(out, tol, "mean_conservation", mean);
  add(out, tol, "maximum_principle", maxp);

  SolverConfig c3;
  c3.params = {1.5, 1.0, 1.0};
  c3.n = 128;
  c3.T = 0.5;
  c3.dt = 0.005;
  const Grid2D g3(128);
  const auto base = random_field(g3, seed + 1, {1.0, 4.0, 0.0, 0.05});
  const auto ref = simulate(base, c3).back();
  SolverConfig c4 = c3;
  c4.T = c3.T / std::pow(2.0, 1.5);
  c4.dt = c3.dt / std::pow(2.0, 1.5);
  const auto scaled = simulate(scenarios::rescale(base, 2, 1.5), c4).back();
  add(out, tol, "scaling_invariance", relative_l2_error(scenarios::unscale(scaled, 2, 1.5), ref));
}

// ---------------------------------------------------------------- kernels

void run_kernels(std::uint64_t seed, const std::map<std::string, double>& tol, std::vector<Check>& out) {
  double beta = 0.0;
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double b : {0.1, 0.3, 0.5, 0.7, 0.9})
      beta = std::max(beta, std::abs(kernels::singular_time_integral(a, b, 1.0) / kernels::beta_closed_form(a, b, 1.0) - 1.0));
  add(out, tol, "beta_identity", beta);
  const std::vector<double> times = {0.5, 1.0, 2.0, 4.0};
  add(out, tol, "poisson_exponent_p2", kernels::fit_kernel_exponent(false, 2.0, times).relative_error);
  add(out, tol, "poisson_exponent_p4", kernels::fit_kernel_exponent(false, 4.0, times).relative_error);
  add(out, tol, "riesz_poisson_exponent_p2", kernels::fit_kernel_exponent(true, 2.0, times).relative_error);
  add(out, tol, "riesz_poisson_exponent_p4", kernels::fit_kernel_exponent(true, 4.0, times).relative_error);
  double l1 = 0.0;
  for (double t : times) l1 = std::max(l1, std::abs(kernels::poisson_lp_norm(t, 1.0) - 1.0));
  add(out, tol, "poisson_l1_unit", l1);
  double hankel = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double exact = kernels::riesz_poisson_profile(1.0, r);
    hankel = std::max(hankel, std::abs(kernels::riesz_poisson_profile_hankel(1.0, r) / exact - 1.0));
  }
  add(out, tol, "riesz_poisson_hankel", hankel);
  add(out, tol, "hls_ratio", kernels::hls_check(seed, 200, 256).max_ratio);
}

// ---------------------------------------------------------------- gevrey

void run_gevrey(std::uint64_t seed, const std::map<std::string, double>& tol, std::vector<Check>& out) {
  const WeightedNormSpec example{1.5, 2.0, 2.0, 8.0, 0.5};
  add(out, tol, "spec_chain_example", static_cast<double>(example.violations().size()));

  const Grid2D g(64);
  std::vector<Complex> c(g.size());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      const int k1 = g.wavenumber(i), k2 = g.wavenumber(j);
      if (g.retained(k1, k2)) c[g.flat(i, j)] = std::exp(-0.7 * (std::abs(k1) + std::abs(k2)));
    }
  add(out, tol, "radius_exact_fit", std::abs(analyticity_radius(SpectralField::from_coefficients(g, c)).radius - 0.7));

  double neg = 0.0;
  for (double gamma : {1.0, 1.25, 1.5, 2.0})
    for (int a = 1; a <= 40; ++a)
      for (int b = 0; b <= 40; ++b) {
        const double t = 0.1 * a, s = t * b / 40.0;
        neg = std::max(neg, -damping_exponent(s, t, gamma));
      }
  add(out, tol, "damping_exponent_nonnegative", neg);

  const auto bank = random_bank(g, seed, 10, {1.0, 21.0, 0.0, 1.0});
  double growth = 0.0;
  for (double a : {0.01, 0.1, 1.0}) {
    for (const auto& f : bank) growth = std::max(growth, sup_norm(gevrey_damping(f, a)) / sup_norm(f));
  }
  const double kernel_l1 = kernels::poisson_lp_norm(1.0, 1.0);  // 2D Poisson; the 1D factors also have mass 1
  add(out, tol, "damping_sup_bound", growth / (kernel_l1 * kernel_l1));

  const auto l33 = multiplier_lemma33_check(1.5, {0.01, 0.1, 1.0, 10.0, 100.0}, g, regression::kAmplificationSeed, 20);
  add(out, tol, "multiplier_amplification", l33.sup_amplification / regression::kMultiplierAmplification);

  const auto cfg = scenarios::subcritical_gevrey_config();
  const Grid2D g6 = cfg.grid();
  const auto traj = simulate(random_field(g6, seed, {1.0, 40.0, 0.3, 0.1}), cfg);
  const auto theta = gevrey_transform(traj, GevreyConfig{1.0, 1.5});
  const auto frame = build_frame(g6);
  const BesovIndex idx{2.0 / 2.0 + 1.0 - 1.5, 2.0, 2.0};
  const double n0 = besov_norm(theta.snapshots[0], idx, frame);
  double sup_ratio = 0.0, envelope = 0.0, radius = kInf;
  for (std::size_t m = 0; m < theta.size(); ++m) {
    const double t = theta.times[m];
    const double r = besov_norm(theta.snapshots[m], idx, frame) / n0;
    sup_ratio = std::max(sup_ratio, r);
    envelope = std::max(envelope, r / std::exp2(t));
    if (t >= 0.1 - 1e-12 && t <= 1.0 + 1e-12) {
      radius = std::min(radius, analyticity_radius(traj.snapshots[m], t).radius / std::pow(t, 1.0 / 1.5));
    }
  }
  add(out, tol, "gevrey_norm_growth", sup_ratio / rc::kGevreyNormGrowth);
  add(out, tol, "gevrey_envelope", envelope / rc::kGevreyEnvelope);
  add(out, tol, "radius_rate_deficit", 0.8 / radius);
}

const std::map<std::string, SuiteDef>& registry() {
  static const std::map<std::string, SuiteDef> defs = {
      {"frame",
       {{{"partition_of_unity", 1e-12}, {"annulus_support", 0.0}, {"adjacent_overlap", 0.0},
         {"telescoping", 1e-12}, {"reconstruction", 1e-10}, {"paraproduct_reconstruction", 1e-10},
         {"bernstein_frame_constant_log2", 1.0}, {"bernstein_band_log2", 1.0},
         {"bernstein_C_2_4_stability", 0.2}, {"bernstein_C_2_inf_stability", 0.2},
         {"bernstein_C_4_inf_stability", 0.2},
         {"heat_localization", rc::kHeatLocalization * rc::kRegressionSlack}},
        run_frame}},
      {"multipliers",
       {{{"round_trip", 1e-12}, {"realness", 1e-12}, {"divergence_free", 1e-15},
         {"semigroup_property", 1e-12}, {"parseval", 1e-10}, {"gevrey_inverse", 1e-12}},
        run_multipliers}},
      {"bilinear",
       {{{"decomposition_identity", 1e-10}, {"weight_exponent_max", 0.0},
         {"ratio_q2_vs_frozen", 0.1}, {"ratio_q4_vs_frozen", 0.1}},
        run_bilinear}},
      {"dynamics",
       {{{"single_mode_exact", 1e-8}, {"picard_vs_simulate", 1e-5},
         {"picard_contraction_ratio", 0.5}, {"energy_balance", 1e-6}, {"mean_conservation", 1e-13},
         {"maximum_principle", 1e-6}, {"scaling_invariance", 1e-6}},
        run_dynamics}},
      {"kernels",
       {{{"beta_identity", 1e-6}, {"poisson_exponent_p2", 0.02},
         {"poisson_exponent_p4", 0.02}, {"riesz_poisson_exponent_p2", 0.02},
         {"riesz_poisson_exponent_p4", 0.02}, {"poisson_l1_unit", 1e-8},
         {"riesz_poisson_hankel", 1e-8}, {"hls_ratio", rc::kHlsRatio * rc::kRegressionSlack}},
        run_kernels}},
      {"gevrey",
       {{{"spec_chain_example", 0.0}, {"radius_exact_fit", 1e-6},
         {"damping_exponent_nonnegative", 1e-15}, {"damping_sup_bound", 1.0 + 1e-9},
         {"multiplier_amplification", 1.05}, {"gevrey_norm_growth", rc::kRegressionSlack},
         {"gevrey_envelope", rc::kRegressionSlack}, {"radius_rate_deficit", 1.0}},
        run_gevrey}},
  };
  return defs;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"frame", "multipliers", "bilinear", "dynamics", "kernels", "gevrey"};
  return names;
}

std::uint64_t default_seed(const std::string& suite) {
  if (suite == "frame") return rc::kFrameSeed;
  if (suite == "bilinear") return rc::kBilinearSeed;
  if (suite == "kernels") return rc::kHlsSeed;
  if (suite == "gevrey") return rc::kGevreySeed;
  return rc::kDynamicsSeed;
}

std::map<std::string, double> default_tolerances(const std::string& suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw ConfigError({"unknown verify suite '" + suite + "'"});
  return it->second.tolerances;
}

SuiteResult run_verify(const std::string& suite, std::uint64_t seed,
                       const std::map<std::string, double>& overrides) {
  auto tol = default_tolerances(suite);
  std::vector<std::string> problems;
  for (const auto& [name, value] : overrides) {
    const auto it = tol.find(name);
    if (it == tol.end()) {
      problems.push_back("suite " + suite + " has no check '" + name + "'");
    } else if (!(value <= it->second)) {
      problems.push_back("override for '" + name + "' (" + format17(value) +
                         ") is looser than the default " + format17(it->second));
    } else {
      it->second = value;
    }
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));
  SuiteResult result{suite, {}};
  registry().at(suite).run(seed, tol, result.checks);
  return result;
}

void print_suite(std::ostream& out, const SuiteResult& result) {
  for (const auto& c : result.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << result.suite << '.' << c.name
        << " measured=" << format17(c.measured) << " threshold=" << format17(c.threshold) << '\n';
  }
  out << result.suite << ": " << (result.passed() ? "all checks passed" : "FAILED") << '\n';
}

}  // namespace qg
