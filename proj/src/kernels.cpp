#include "qg/kernels.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qg/errors.hpp"

namespace qg::kernels {

namespace bq = boost::math::quadrature;
using std::numbers::pi;

double singular_time_integral(double a, double b, double t) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0 && t > 0.0)) {
    throw DomainError("singular time integral needs 0 < a, b < 1 and t > 0");
  }
  bq::tanh_sinh<double> ts;
  // Split at t/2 and write each half with its singular end at 0: s = t/2 - u style
  // substitutions keep the distance to the singularity exact.
  const double h = 0.5 * t;
  auto left = [&](double s) { return std::pow(t - s, -a) * std::pow(s, -b); };
  auto right = [&](double u) { return std::pow(u, -a) * std::pow(t - u, -b); };
  const double tol = std::sqrt(std::numeric_limits<double>::epsilon());
  return ts.integrate(left, 0.0, h, tol) + ts.integrate(right, 0.0, h, tol);
}

double beta_closed_form(double a, double b, double t) {
  return boost::math::beta(1.0 - a, 1.0 - b) * std::pow(t, 1.0 - a - b);
}

double poisson_kernel(double t, double r) {
  return t / (2.0 * pi * std::pow(t * t + r * r, 1.5));
}

double riesz_poisson_profile(double t, double r) {
  return -r / (2.0 * pi * std::pow(t * t + r * r, 1.5));
}

double riesz_poisson_profile_hankel(double t, double r) {
  if (r == 0.0) return 0.0;
  bq::exp_sinh<double> es;
  auto f = [&](double rho) { return rho * std::exp(-t * rho) * boost::math::cyl_bessel_j(1, rho * r); };
  return -es.integrate(f, 0.0, std::numeric_limits<double>::infinity()) / (2.0 * pi);
}

double poisson_lp_norm(double t, double p) {
  if (!(p >= 1.0)) throw DomainError("poisson_lp_norm: p must be >= 1");
  bq::exp_sinh<double> es;
  auto f = [&](double r) { return 2.0 * pi * r * std::pow(poisson_kernel(t, r), p); };
  return std::pow(es.integrate(f, 0.0, std::numeric_limits<double>::infinity()), 1.0 / p);
}

double riesz_poisson_lp_norm(double t, double p) {
  if (!(p > 1.0)) throw DomainError("riesz_poisson_lp_norm: p must be > 1");
  bq::exp_sinh<double> es;
  bq::tanh_sinh<double> ts;
  // Angular factor int_0^{2 pi} |cos psi|^p d psi.
  const double angular =
      4.0 * ts.integrate([&](double psi) { return std::pow(std::cos(psi), p); }, 0.0, pi / 2);
  auto f = [&](double r) { return r * std::pow(std::abs(riesz_poisson_profile(t, r)), p); };
  return std::pow(angular * es.integrate(f, 0.0, std::numeric_limits<double>::infinity()),
                  1.0 / p);
}

ExponentFit fit_kernel_exponent(bool riesz, double p, const std::vector<double>& times) {
  if (times.size() < 2) throw DomainError("fit_kernel_exponent: need two times");
  double mx = 0.0, my = 0.0;
  std::vector<double> xs, ys;
  for (double t : times) {
    xs.push_back(std::log(t));
    ys.push_back(std::log(riesz ? riesz_poisson_lp_norm(t, p) : poisson_lp_norm(t, p)));
    mx += xs.back();
    my += ys.back();
  }
  mx /= xs.size();
  my /= xs.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.expected = -2.0 * (1.0 - 1.0 / p);
  fit.relative_error = std::abs(fit.slope - fit.expected) / std::abs(fit.expected);
  return fit;
}

HlsReport hls_check(std::uint64_t seed, int inputs, int cells) {
  if (inputs < 1 || cells < 2) throw DomainError("hls_check: need inputs >= 1 and cells >= 2");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double h = 1.0 / cells;
  HlsReport rep;
  rep.inputs = inputs;
  std::vector<double> a(cells);
  for (int it = 0; it < inputs; ++it) {
    double l2 = 0.0;
    for (auto& v : a) {
      v = normal(rng);
      l2 += v * v * h;
    }
    l2 = std::sqrt(l2);
    double sup = 0.0;
    // Evaluate at the cell edges t_m = m h; each cell contributes its exact integral.
    for (int m = 1; m <= cells; ++m) {
      const double t = m * h;
      double acc = 0.0;
      for (int c = 0; c < m; ++c) {
        const double s0 = c * h;
        const double s1 = (c + 1) * h;
        acc += a[c] * 2.0 * (std::sqrt(t - s0) - std::sqrt(t - s1));
      }
      sup = std::max(sup, std::abs(acc));
    }
    rep.max_ratio = std::max(rep.max_ratio, sup / l2);
  }
  return rep;
}

}  // namespace qg::kernels
