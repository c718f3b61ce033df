#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "qg/dynamics.hpp"
#include "qg/errors.hpp"
#include "qg/gevrey.hpp"
#include "qg/kernels.hpp"
#include "qg/monitors.hpp"
#include "qg/random_fields.hpp"
#include "qg/regression_constants.hpp"

using namespace qg;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralField mode(const Grid2D& g, int k1, int k2, double amp = 1.0) {
  std::vector<Complex> c(g.size());
  c[g.flat(g.index_of(k1), g.index_of(k2))] += 0.5 * amp;
  c[g.flat(g.index_of(-k1), g.index_of(-k2))] += 0.5 * amp;
  return SpectralField::from_coefficients(g, std::move(c));
}

std::vector<oracle::C> vec(const SpectralField& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

double rel(const std::vector<oracle::C>& a, std::span<const Complex> b) {
  double e = 0.0, n = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    e += std::norm(a[k] - b[k]);
    n += std::norm(a[k]);
  }
  return n > 0.0 ? std::sqrt(e / n) : std::sqrt(e);
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK(GevreyConfig{1.0, 1.5}.violations().empty());
  const auto v = GevreyConfig{1.0, 1.0}.violations();
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("1/4") != std::string::npos);
  CHECK_THROWS_AS(GevreyConfig({0.0, 1.5}).validate(), ConfigError);

  const WeightedNormSpec ok{1.5, 2.0, 2.0, 8.0, 0.5};
  CHECK(ok.violations().empty());
  CHECK(ok.s() == Approx(0.5));
  CHECK(ok.beta() == Approx(1.0 / 6.0));
  CHECK(2.0 / ok.r < ok.gamma - 1.0);
  CHECK(ok.s() - 2.0 / ok.r == Approx(0.25));
  CHECK(ok.beta() < 1.0 - ok.alpha_k / ok.gamma);

  const auto bad = WeightedNormSpec{1.5, 2.0, 2.0, 4.0, 0.5}.violations();
  REQUIRE(!bad.empty());
  CHECK(bad[0].find("(i)") != std::string::npos);
  CHECK(WeightedNormSpec{1.0, 2.0, 2.0, 8.0, 0.5}.violations().empty());
  CHECK_THROWS_AS(WeightedNormSpec({1.5, 2.0, 2.0, 1.0, 0.5}).validate(), ConfigError);
}

TEST_CASE("gevrey_transform examples") {
  const Grid2D g(32);
  const auto f = random_field(g, 1, {1.0, 10.0, 0.0, 1.0});
  CHECK(relative_l2_error(gevrey_transform(f, 0.0, {1.0, 1.5}), f) == 0.0);
  const auto m = gevrey_transform(mode(g, 1, 0), 4.0, {1.0, 2.0});
  CHECK(m.at(1, 0).real() == Approx(0.5 * 7.38905609893065).epsilon(1e-14));

  SUBCASE("overflow names t and shell") {
    try {
      gevrey_transform(f, 1e4, {1.0, 2.0});
      FAIL("expected OverflowError");
    } catch (const OverflowError& e) {
      const std::string what = e.what();
      CHECK(what.find("t = ") != std::string::npos);
      CHECK(what.find("shell") != std::string::npos);
    }
  }

  SUBCASE("noise floor") {
    auto c = vec(mode(g, 1, 0));
    c[g.flat(10, 0)] = 1e-17;
    c[g.flat(g.index_of(-10), 0)] = 1e-17;
    const auto noisy = SpectralField::from_coefficients(g, c);
    CHECK(gevrey_transform(noisy, 1.0, {5.0, 1.5}).at(10, 0) == Complex{});
  }

  SUBCASE("linear evolution stays bounded") {
    // per-mode sup_t exp(t^{1/gamma}|k|_1 - t|k|^gamma), closed form
    const double gamma = 1.5;
    const auto th0 = random_field(g, 5, {1.0, 10.0, 0.0, 1.0});
    double bound_sq = 0.0;
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j) {
        const int k1 = g.wavenumber(i), k2 = g.wavenumber(j);
        const double w = oracle::max_weight(std::abs(k1) + std::abs(k2), std::hypot(k1, k2), gamma, 1.0, 10.0);
        bound_sq += std::norm(th0.coeffs()[g.flat(i, j)] * w);
      }
    const double bound = 2.0 * kPi * std::sqrt(bound_sq);
    double peak = 0.0;
    for (int m = 0; m <= 200; ++m) {
      const double t = 0.05 * m;
      const double v = lp_norm(gevrey_transform(fractional_semigroup(th0, t, gamma), t, {1.0, gamma}), 2.0);
      CHECK(v <= bound * (1.0 + 1e-12));
      peak = std::max(peak, v);
    }
    CHECK(peak >= lp_norm(th0, 2.0));
  }
}

TEST_CASE("weighted norms") {
  const Grid2D g(32);
  const auto frame = build_frame(g);
  const WeightedNormSpec spec{1.5, 2.0, 2.0, 8.0, 0.5};
  TrajectoryRecord zero(g, {});
  for (int m = 0; m < 5; ++m) zero.append(0.25 * m, SpectralField(g));
  const auto z = k_g_e1_norms(zero, spec, frame);
  CHECK(*z.k_norm == 0.0);
  CHECK(*z.g_norm == 0.0);
  const auto zc = k_g_e1_norms(zero, {1.0, 2.0, 2.0, 8.0, 0.5}, frame);
  CHECK(*zc.e1_norm == 0.0);
  CHECK(!zc.k_norm.has_value());

  TrajectoryRecord constant(g, {});
  for (int m = 0; m < 5; ++m) constant.append(0.5 * m, mode(g, 2, 1));
  const auto c = k_g_e1_norms(constant, spec, frame);
  CHECK(*c.k_argmax == 2.0);
  CHECK(*c.g_argmax == 2.0);
  const double base = besov_norm(mode(g, 2, 1), spec.besov(), frame);
  const double extra = besov_norm(mode(g, 2, 1), {spec.s() + 0.5, 2.0, 2.0}, frame);
  CHECK(*c.k_norm == Approx(base + std::pow(2.0, 0.5 / 1.5) * extra));
  CHECK(c.radii.empty());

  const auto rep = analyze_trajectory(constant, {1.0, 1.5}, spec);
  CHECK(rep.radii.size() == 5);
  CHECK_THROWS_AS(k_g_e1_norms(TrajectoryRecord(g, {}), spec, frame), StructuralError);
}

TEST_CASE("bilinear operator") {
  const Grid2D g(16);
  const GevreyConfig cfg{1.0, 2.0};
  const auto f = random_field(g, 3, {1.0, 5.0, 0.0, 1.0});
  const auto h = random_field(g, 4, {1.0, 5.0, 0.0, 1.0});
  CHECK(relative_l2_error(bilinear_Bt_direct(f, h, 0.0, cfg), dealiased_product(f, h)) <= 1e-15);
  CHECK(bilinear_Bt_direct(f, SpectralField(g), 0.7, cfg).is_zero());
  CHECK(bilinear_Bt_decomposed(SpectralField(g), h, 0.7, cfg).is_zero());

  const auto c1 = mode(g, 1, 0);
  const auto b = bilinear_Bt_direct(c1, c1, 1.0, cfg);
  CHECK(b.at(2, 0).real() == Approx(0.25).epsilon(1e-15));
  CHECK(b.at(0, 0).real() == Approx(0.5 * std::exp(-2.0)).epsilon(1e-15));

  for (double t : {0.0, 0.3, 1.0}) {
    const double a = std::pow(t, 1.0 / cfg.gamma);
    const auto ref = oracle::weighted_convolution(g, vec(f), vec(h), a);
    CHECK(rel(ref, bilinear_Bt_direct(f, h, t, cfg).coeffs()) <= 1e-14);
    CHECK(rel(ref, bilinear_Bt_decomposed(f, h, t, cfg).coeffs()) <= 1e-10);
  }

  const Grid2D g32(32);
  const auto f32 = random_field(g32, 5, {1.0, 10.0, 0.0, 1.0});
  const auto h32 = random_field(g32, 6, {1.0, 10.0, 0.0, 1.0});
  CHECK(relative_l2_error(bilinear_Bt_decomposed(f32, h32, 0.3, {1.0, 1.5}),
                          bilinear_Bt_direct(f32, h32, 0.3, {1.0, 1.5})) <= 1e-10);
  CHECK_THROWS_AS(bilinear_Bt_direct(f, f32, 0.3, cfg), StructuralError);
  CHECK_THROWS_AS(bilinear_Bt_direct(f, h, 1e6, cfg), OverflowError);
}

TEST_CASE("bilinear branch bookkeeping") {
  // f on modes +-(1,1), g on modes +-(2,1): branch (alpha, beta, gamma) is active exactly
  // when some p in supp f with sign pattern beta and q in supp g with pattern gamma has
  // p + q with pattern alpha (zero counts as nonnegative).
  const Grid2D g(16);
  const auto f = mode(g, 1, 1), h = mode(g, 2, 1);
  auto pattern = [](int k1, int k2) { return std::array<int, 2>{k1 >= 0 ? 1 : -1, k2 >= 0 ? 1 : -1}; };
  std::set<std::tuple<std::array<int, 2>, std::array<int, 2>, std::array<int, 2>>> expected;
  for (int sp : {1, -1})
    for (int sq : {1, -1}) {
      const int p1 = sp, p2 = sp, q1 = 2 * sq, q2 = sq;
      expected.insert({pattern(p1 + q1, p2 + q2), pattern(p1, p2), pattern(q1, q2)});
    }
  const auto branches = bilinear_Bt_branches(f, h, 0.5, {1.0, 1.5});
  CHECK(branches.size() == 64);
  std::size_t active = 0;
  for (const auto& br : branches) {
    double mag = 0.0;
    for (const auto& z : br.value.coeffs()) mag = std::max(mag, std::abs(z));
    const bool on = mag > 1e-14;
    CHECK(on == (expected.count({br.a, br.b, br.c}) > 0));
    active += on;
  }
  CHECK(active == expected.size());
}

TEST_CASE("weight exponent is nonpositive on the lattice") {
  const int K = Grid2D(16).dealias_cutoff();
  int worst = -1000;
  for (int p1 = -K; p1 <= K; ++p1)
    for (int p2 = -K; p2 <= K; ++p2)
      for (int q1 = -K; q1 <= K; ++q1)
        for (int q2 = -K; q2 <= K; ++q2)
          worst = std::max(worst, std::abs(p1 + q1) + std::abs(p2 + q2) - std::abs(p1) - std::abs(p2) - std::abs(q1) - std::abs(q2));
  CHECK(worst == 0);
}

TEST_CASE("operator E") {
  CHECK(damping_exponent(0.0, 1.0, 1.5) == 0.0);
  CHECK(damping_exponent(1.0, 1.0, 1.5) == 0.0);
  CHECK(damping_exponent(0.5, 1.0, 2.0) == Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
  const Grid2D g(32);
  const auto f = random_field(g, 8, {1.0, 10.0, 0.0, 1.0});
  CHECK(relative_l2_error(operator_E_lemma32(f, 0.0, 1.0, 1.5), f) == 0.0);
  CHECK(relative_l2_error(operator_E_lemma32(f, 0.5, 1.0, 2.0), gevrey_damping(f, std::sqrt(2.0) - 1.0)) <= 1e-15);
  CHECK_THROWS_AS(operator_E_lemma32(f, 1.5, 1.0, 1.5), DomainError);
  CHECK_THROWS_AS(operator_E_lemma32(f, -0.1, 1.0, 1.5), DomainError);

  // the sup-norm gain is at most the L1 mass of the product Poisson kernel
  const double c = kernels::poisson_lp_norm(1.0, 1.0);
  CHECK(c == Approx(1.0).epsilon(1e-10));
  for (double a : {0.01, 0.1, 1.0})
    for (const auto& h : random_bank(g, 9, 5, {1.0, 10.0, 0.0, 1.0}))
      CHECK(sup_norm(gevrey_damping(h, a)) <= c * c * sup_norm(h) * 1.1);
}

TEST_CASE("multiplier amplification") {
  const Grid2D g(64);
  CHECK_THROWS_AS(multiplier_lemma33_check(1.0, {1.0}, g, 1, 2), DomainError);
  const auto zero = multiplier_lemma33_check(1.5, {0.0}, g, 1, 3);
  CHECK(zero.max_amplification[0] == Approx(1.0).epsilon(1e-12));
  CHECK(zero.symbol_max[0] == 1.0);

  const auto one = multiplier_lemma33_check(1.5, {1.0}, g, 1, 2);
  double scan = 0.0;
  const int K = g.dealias_cutoff();
  for (int k1 = -K; k1 <= K; ++k1)
    for (int k2 = -K; k2 <= K; ++k2)
      scan = std::max(scan, std::exp(std::abs(k1) + std::abs(k2) - 0.5 * std::pow(std::hypot(k1, k2), 1.5)));
  CHECK(one.symbol_max[0] == Approx(scan).epsilon(1e-14));
  CHECK(std::isfinite(scan));

  const auto sweep = multiplier_lemma33_check(1.5, {0.01, 0.1, 1.0, 10.0, 100.0}, g, regression::kAmplificationSeed, 20);
  CHECK(sweep.sup_amplification == Approx(regression::kMultiplierAmplification).epsilon(0.05));
}

TEST_CASE("analyticity radius") {
  const Grid2D g(64);
  std::vector<Complex> c(g.size());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      const int k1 = g.wavenumber(i), k2 = g.wavenumber(j);
      if (g.retained(k1, k2)) c[g.flat(i, j)] = std::exp(-0.7 * (std::abs(k1) + std::abs(k2)));
    }
  const auto r = analyticity_radius(SpectralField::from_coefficients(g, c), 0.5);
  CHECK(r.radius == Approx(0.7).epsilon(1e-6));
  CHECK(r.fit_quality == Approx(1.0).epsilon(1e-10));
  CHECK(r.reliable);
  CHECK(r.time == 0.5);

  const auto noise = analyticity_radius(random_field(g, 3, {1.0, 21.0, 0.0, 1.0}));
  CHECK(!noise.reliable);
  CHECK(noise.fit_quality < 0.9);

  const auto few = analyticity_radius(mode(g, 1, 0));
  CHECK(!few.reliable);
  CHECK(few.radius == 0.0);
  CHECK(few.fit_quality == 0.0);
}

TEST_CASE("decay fits") {
  const Grid2D g(32);
  std::vector<double> t, v;
  for (int m = 1; m <= 20; ++m) {
    t.push_back(0.5 * m);
    v.push_back(std::pow(0.5 * m, -2.0));
  }
  const auto exact = fit_power_law(t, v, 1.0, 10.0);
  CHECK(exact.slope == Approx(-2.0).epsilon(1e-10));
  CHECK(exact.r2 == Approx(1.0));
  CHECK(!exact.exponential);
  CHECK_THROWS_AS(fit_power_law(t, v, 1.0, 5.0), DomainError);
  CHECK_THROWS_AS(fit_power_law({1.0, 10.0}, {1.0, 0.1}, 1.0, 10.0), DomainError);

  SolverConfig cfg;
  cfg.n = 32;
  cfg.T = 10.0;
  cfg.dt = 0.05;
  cfg.snapshot_every = 4;
  const auto traj = simulate(mode(g, 1, 0), cfg);
  CHECK(derivative_norm(traj.snapshots[0], 1, DecayNorm::sup_partials) == Approx(1.0).epsilon(1e-12));
  const auto heat = decay_rate_fit(traj, 1, DecayNorm::l2_gradient, 1.0, 10.0);
  CHECK(heat.exponential);
}

TEST_CASE("kernel identities") {
  CHECK(kernels::singular_time_integral(0.5, 0.5, 1.0) == Approx(kPi).epsilon(1e-10));
  for (double a : {0.1, 0.5, 0.9})
    for (double b : {0.1, 0.5, 0.9})
      CHECK(kernels::singular_time_integral(a, b, 2.0) == Approx(kernels::beta_closed_form(a, b, 2.0)).epsilon(1e-6));
  for (double t : {0.1, 1.0, 10.0}) CHECK(kernels::poisson_lp_norm(t, 1.0) == Approx(1.0).epsilon(1e-10));
  const auto fit = kernels::fit_kernel_exponent(false, 2.0, {0.5, 1.0, 2.0, 4.0});
  CHECK(fit.expected == -1.0);
  CHECK(fit.slope == Approx(-1.0).epsilon(0.02));
  const auto fit4 = kernels::fit_kernel_exponent(true, 4.0, {0.5, 1.0, 2.0, 4.0});
  CHECK(fit4.slope == Approx(-1.5).epsilon(0.02));
  CHECK(kernels::poisson_kernel(1.0, 0.0) == Approx(1.0 / (2.0 * kPi)));
  for (double r : {0.3, 1.0, 3.0})
    CHECK(kernels::riesz_poisson_profile_hankel(0.7, r) == Approx(kernels::riesz_poisson_profile(0.7, r)).epsilon(1e-8));
  const auto hls = kernels::hls_check(regression::kHlsSeed, 200, 256);
  CHECK(hls.inputs == 200);
  CHECK(hls.max_ratio <= regression::kHlsRatio * regression::kRegressionSlack);
}
