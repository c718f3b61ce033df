#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "qg/errors.hpp"
#include "qg/multipliers.hpp"
#include "qg/random_fields.hpp"
#include "qg/snapshot_io.hpp"
#include "qg/spectral_field.hpp"

using namespace qg;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

// amp cos(k1 x1 + k2 x2) with exact coefficients.
SpectralField mode(const Grid2D& g, int k1, int k2, double amp = 1.0) {
  std::vector<Complex> c(g.size());
  c[g.flat(g.index_of(k1), g.index_of(k2))] += 0.5 * amp;
  c[g.flat(g.index_of(-k1), g.index_of(-k2))] += 0.5 * amp;
  return SpectralField::from_coefficients(g, std::move(c));
}

double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) m = std::max(m, std::abs(a.coeffs()[k] - b.coeffs()[k]));
  return m;
}

}  // namespace

TEST_CASE("grid wavenumber layout") {
  const Grid2D g(8);
  CHECK(g.wavenumber(0) == 0);
  CHECK(g.wavenumber(3) == 3);
  CHECK(g.wavenumber(4) == -4);
  CHECK(g.wavenumber(7) == -1);
  CHECK(g.index_of(-1) == 7);
  CHECK(g.dealias_cutoff() == 2);
  CHECK(Grid2D(64).dealias_cutoff() == 21);
  CHECK(Grid2D(8, 4 * kPi).dk() == Approx(0.5));
}

TEST_CASE("forward transform agrees with a direct DFT") {
  const Grid2D g(16);
  std::vector<double> v(g.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::sin(0.7 * k) + 0.1 * std::cos(1.3 * k * k);
  const auto ref = oracle::direct_dft(g, v);
  const auto f = SpectralField::from_physical(g, v);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      if (g.is_nyquist(g.wavenumber(i)) || g.is_nyquist(g.wavenumber(j))) {
        CHECK(f.coeffs()[g.flat(i, j)] == Complex{});
      } else {
        CHECK(std::abs(f.coeffs()[g.flat(i, j)] - ref[g.flat(i, j)]) < 1e-13);
      }
    }
}

TEST_CASE("construction enforces the real-field invariants") {
  const Grid2D g(8);
  std::vector<Complex> c(g.size());
  c[g.flat(1, 2)] = {1.0, 0.5};
  CHECK_THROWS_AS(SpectralField::from_coefficients(g, c), StructuralError);
  c[g.flat(g.index_of(-1), g.index_of(-2))] = {1.0, -0.5};
  c[g.flat(4, 1)] = 3.0;
  c[g.flat(4, 7)] = 3.0;
  const auto f = SpectralField::from_coefficients(g, c);
  CHECK(f.at(-4, 1) == Complex{});
  CHECK(f.at(1, 2) == Complex(1.0, 0.5));
  CHECK(f.hermitian_defect() == 0.0);
  CHECK_THROWS_AS(SpectralField::from_coefficients(g, std::vector<Complex>(10)), StructuralError);
}

TEST_CASE("round trip to physical space") {
  const Grid2D g(64);
  for (const auto& f : random_bank(g, 5, 5, {1.0, 30.0, 0.0, 1.0})) {
    CHECK(relative_l2_error(SpectralField::from_physical(g, f.to_physical()), f) <= 1e-12);
  }
}

TEST_CASE("apply_multiplier examples") {
  const Grid2D g(32);
  const auto m10 = mode(g, 1, 0);
  CHECK(max_diff(apply_multiplier(m10, symbols::fractional_laplacian(2.0)), m10) < 1e-15);
  const auto f = random_field(g, 3, {1.0, 8.0, 0.0, 1.0});
  CHECK(max_diff(apply_multiplier(f, symbols::identity()), f) == 0.0);
  const auto m11 = mode(g, 1, 1);
  CHECK(max_diff(apply_multiplier(m11, symbols::l1_norm()), m11 * 2.0) < 1e-15);
  CHECK_THROWS_AS(apply_multiplier(f, MultiplierSymbol("odd", [](double x, double) { return Complex(x, 0.0); }, false)),
                  StructuralError);
  const auto table = MultiplierSymbol::tabulated_real("t", Grid2D(16), std::vector<double>(256, 1.0));
  CHECK_THROWS_AS(apply_multiplier(f, table), StructuralError);
}

TEST_CASE("multipliers use physical wavenumbers") {
  const Grid2D g(32, 4 * kPi);
  const auto f = SpectralField::from_function(g, [](double x, double) { return std::cos(x); });
  CHECK(f.at(2, 0).real() == Approx(0.5));
  const auto lf = apply_multiplier(f, symbols::fractional_laplacian(2.0));
  CHECK(lf.at(2, 0).real() == Approx(0.5));
}

TEST_CASE("riesz_velocity examples") {
  const Grid2D g(32);
  SUBCASE("sin(x1)") {
    const auto th = SpectralField::from_function(g, [](double x, double) { return std::sin(x); });
    const auto [v1, v2] = riesz_velocity(th);
    CHECK(v1.max_abs_coefficient() < 1e-16);
    CHECK(max_diff(v2, SpectralField::from_function(g, [](double x, double) { return std::cos(x); })) < 1e-15);
  }
  SUBCASE("zero") {
    const auto [v1, v2] = riesz_velocity(SpectralField(g));
    CHECK(v1.is_zero());
    CHECK(v2.is_zero());
  }
  SUBCASE("cos(x2)") {
    // symbols on modes (0, +-1): v1 = -i sgn(k2) c, v2 = 0
    const auto th = SpectralField::from_function(g, [](double, double y) { return std::cos(y); });
    const auto [v1, v2] = riesz_velocity(th);
    CHECK(std::abs(v1.at(0, 1) - Complex(0.0, -0.5)) < 1e-16);
    CHECK(std::abs(v1.at(0, -1) - Complex(0.0, 0.5)) < 1e-16);
    CHECK(max_diff(v1, SpectralField::from_function(g, [](double, double y) { return std::sin(y); })) < 1e-15);
    CHECK(v2.max_abs_coefficient() < 1e-16);
  }
}

TEST_CASE("fractional_semigroup examples") {
  const Grid2D g(32);
  const auto m10 = mode(g, 1, 0);
  CHECK(fractional_semigroup(m10, 0.5, 1.5).at(1, 0).real() == Approx(0.5 * 0.6065306597126334).epsilon(1e-14));
  const auto f = random_field(g, 1, {1.0, 10.0, 0.0, 1.0});
  CHECK(max_diff(fractional_semigroup(f, 0.0, 1.5), f) == 0.0);
  const auto m34 = mode(g, 3, 4);
  CHECK(fractional_semigroup(m34, 0.2, 1.0).at(3, 4).real() == Approx(0.5 * std::exp(-1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(fractional_semigroup(f, -0.1, 1.5), DomainError);
}

TEST_CASE("gevrey_multiplier examples") {
  const Grid2D g(32);
  const auto m11 = mode(g, 1, 1);
  CHECK(gevrey_multiplier(m11, 0.1).at(1, 1).real() == Approx(0.5 * 1.2214027581601699).epsilon(1e-14));
  const auto f = random_field(g, 2, {1.0, 10.0, 0.0, 1.0});
  CHECK(max_diff(gevrey_multiplier(f, 0.0), f) == 0.0);
  CHECK(relative_l2_error(gevrey_damping(gevrey_multiplier(f, 0.7), 0.7), f) < 1e-14);
  SUBCASE("overflow names the shell") {
    try {
      gevrey_multiplier(f, 30.0);
      FAIL("expected OverflowError");
    } catch (const OverflowError& e) {
      CHECK(std::string(e.what()).find("shell") != std::string::npos);
    }
  }
}

TEST_CASE("dealiased_product examples") {
  const Grid2D g(16);
  const auto c1 = mode(g, 1, 0);
  const auto prod = dealiased_product(c1, c1);
  CHECK(prod.at(0, 0).real() == Approx(0.5));
  CHECK(prod.at(2, 0).real() == Approx(0.25));
  CHECK(prod.coefficient_energy() == Approx(0.25 + 2 * 0.0625));
  auto one = SpectralField::from_function(g, [](double, double) { return 1.0; });
  const auto f = random_field(g, 9, {1.0, 5.0, 0.0, 1.0});
  CHECK(max_diff(dealiased_product(f, one), f) < 1e-15);

  const auto c2 = SpectralField::from_function(g, [](double, double y) { return std::cos(y); });
  const auto p12 = dealiased_product(c1, c2);
  const std::vector<Complex> a(c1.coeffs().begin(), c1.coeffs().end()), b(c2.coeffs().begin(), c2.coeffs().end());
  const auto ref = oracle::convolution(g, a, b);
  for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(p12.coeffs()[k] - ref[k]) < 1e-16);
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) CHECK(p12.at(s1, s2).real() == Approx(0.25));

  const auto r1 = random_field(g, 10, {1.0, 5.0, 0.0, 1.0});
  const auto r2 = random_field(g, 11, {1.0, 5.0, 0.0, 1.0});
  const auto rr = dealiased_product(r1, r2);
  const auto ref2 = oracle::convolution(g, {r1.coeffs().begin(), r1.coeffs().end()}, {r2.coeffs().begin(), r2.coeffs().end()});
  for (std::size_t k = 0; k < ref2.size(); ++k) CHECK(std::abs(rr.coeffs()[k] - ref2[k]) < 1e-15);

  CHECK_THROWS_AS(dealiased_product(f, SpectralField(Grid2D(32))), StructuralError);
}

TEST_CASE("lp_norm examples") {
  const Grid2D g(32);
  const auto c1 = mode(g, 1, 0);
  CHECK(lp_norm(c1, 2.0) == Approx(std::sqrt(2.0) * kPi).epsilon(1e-13));
  CHECK(lp_norm(c1, 2.0) == Approx(4.442883).epsilon(1e-6));
  CHECK(lp_norm(c1, INFINITY) == Approx(1.0).epsilon(1e-15));
  for (double p : {1.0, 2.0, 3.5, double(INFINITY)}) CHECK(lp_norm(SpectralField(g), p) == 0.0);
  CHECK_THROWS_AS(lp_norm(c1, 0.5), DomainError);
  CHECK_THROWS_AS(lp_norm(c1, NAN), DomainError);
}

TEST_CASE("invariants on a random bank") {
  const Grid2D g(64);
  for (const auto& f : random_bank(g, 77, 8, {1.0, 30.0, 0.1, 1.0})) {
    const auto [v1, v2] = riesz_velocity(f);
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j) {
        const auto k = g.flat(i, j);
        const Complex div = double(g.wavenumber(i)) * v1.coeffs()[k] + double(g.wavenumber(j)) * v2.coeffs()[k];
        CHECK(std::abs(div) <= 1e-15 * f.max_abs_coefficient());
      }
    CHECK(relative_l2_error(fractional_semigroup(fractional_semigroup(f, 0.3, 1.2), 0.4, 1.2),
                            fractional_semigroup(f, 0.7, 1.2)) <= 1e-12);
    const double l2 = lp_norm(f, 2.0);
    CHECK(l2 * l2 == Approx(4 * kPi * kPi * f.coefficient_energy()).epsilon(1e-10));
    for (const auto& m : {symbols::riesz(1), symbols::derivative(2), symbols::heat(0.1, 1.5, 2.0)}) {
      const auto img = apply_multiplier(f.as_complex(), m).to_physical();
      double im = 0.0, mag = 0.0;
      for (const auto& z : img) {
        im = std::max(im, std::abs(z.imag()));
        mag = std::max(mag, std::abs(z));
      }
      CHECK(im <= 1e-12 * mag);
    }
  }
}

TEST_CASE("physical parameter constraints") {
  CHECK(PhysicalParams{1.5, 1.0, 1.0}.violations().empty());
  const auto v = PhysicalParams{1.0, 1.0, 1.0}.violations();
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("1/4") != std::string::npos);
  CHECK(PhysicalParams{0.5, 1.0, 0.2}.violations().size() == 1);
  CHECK(PhysicalParams{2.5, -1.0, 0.0}.violations().size() == 3);
  CHECK_THROWS_AS(PhysicalParams({1.0, 1.0, 0.3}).validate(), ConfigError);
}

TEST_CASE("snapshot format round trip") {
  const Grid2D g(16, 3.0);
  const Snapshot s{random_field(g, 4, {1.0, 5.0, 0.0, 1.0}), 0.125, 1.5};
  std::stringstream buf;
  write_snapshot(buf, s);
  const std::string bytes = buf.str();
  CHECK(bytes.substr(0, 4) == "QGSF");
  CHECK(bytes.size() == 4 + 4 + 4 + 3 * 8 + 16 * 16 * 16);
  const auto back = read_snapshot(buf);
  CHECK(back.time == s.time);
  CHECK(back.gamma == s.gamma);
  CHECK(back.field.grid() == g);
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(back.field.coeffs()[k] == s.field.coeffs()[k]);
  std::stringstream again;
  write_snapshot(again, back);
  CHECK(again.str() == bytes);

  std::stringstream bad(std::string("QGXX") + bytes.substr(4));
  CHECK_THROWS_AS(read_snapshot(bad), FormatError);
  std::stringstream truncated(bytes.substr(0, 100));
  CHECK_THROWS_AS(read_snapshot(truncated), FormatError);
}
