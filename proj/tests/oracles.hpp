#pragma once

// Slow, independent reference computations used to pin expected values.

#include <cmath>
#include <complex>
#include <numbers>
#include <algorithm>
#include <vector>

#include "qg/grid.hpp"

namespace oracle {

using C = std::complex<double>;

// c(k) = n^-2 sum_x f(x) exp(-i k.x), by direct summation.
inline std::vector<C> direct_dft(const qg::Grid2D& g, const std::vector<double>& f) {
  const int n = g.n();
  std::vector<C> out(g.size());
  const double two_pi_n = 2.0 * std::numbers::pi / n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      C s = 0.0;
      const int k1 = g.wavenumber(a), k2 = g.wavenumber(b);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += f[g.flat(i, j)] * std::polar(1.0, -two_pi_n * (k1 * i + k2 * j));
      out[g.flat(a, b)] = s / double(n * n);
    }
  return out;
}

// Coefficients of the product, with inputs and output restricted to |k_i| <= K.
inline std::vector<C> convolution(const qg::Grid2D& g, const std::vector<C>& f, const std::vector<C>& h) {
  const int K = g.dealias_cutoff();
  std::vector<C> out(g.size());
  for (int p1 = -K; p1 <= K; ++p1)
    for (int p2 = -K; p2 <= K; ++p2) {
      const C fp = f[g.flat(g.index_of(p1), g.index_of(p2))];
      if (fp == C{}) continue;
      for (int q1 = -K; q1 <= K; ++q1)
        for (int q2 = -K; q2 <= K; ++q2) {
          const int k1 = p1 + q1, k2 = p2 + q2;
          if (std::abs(k1) > K || std::abs(k2) > K) continue;
          out[g.flat(g.index_of(k1), g.index_of(k2))] += fp * h[g.flat(g.index_of(q1), g.index_of(q2))];
        }
    }
  return out;
}

// Same, each product weighted by exp(a (|k|_1 - |p|_1 - |q|_1)) in lattice units.
inline std::vector<C> weighted_convolution(const qg::Grid2D& g, const std::vector<C>& f,
                                           const std::vector<C>& h, double a) {
  const int K = g.dealias_cutoff();
  std::vector<C> out(g.size());
  for (int p1 = -K; p1 <= K; ++p1)
    for (int p2 = -K; p2 <= K; ++p2)
      for (int q1 = -K; q1 <= K; ++q1)
        for (int q2 = -K; q2 <= K; ++q2) {
          const int k1 = p1 + q1, k2 = p2 + q2;
          if (std::abs(k1) > K || std::abs(k2) > K) continue;
          const int e = std::abs(k1) + std::abs(k2) - std::abs(p1) - std::abs(p2) - std::abs(q1) - std::abs(q2);
          out[g.flat(g.index_of(k1), g.index_of(k2))] += std::exp(a * g.dk() * e) *
              f[g.flat(g.index_of(p1), g.index_of(p2))] * h[g.flat(g.index_of(q1), g.index_of(q2))];
        }
  return out;
}

// sup over 0 <= t <= t_max of exp(a t^{1/gamma} m - t r^gamma), gamma > 1, closed form.
inline double max_weight(double m, double r, double gamma, double a, double t_max) {
  if (m == 0.0) return 1.0;
  const double t_star = std::pow(a * m / (gamma * std::pow(r, gamma)), gamma / (gamma - 1.0));
  const double t = std::min(t_star, t_max);
  return std::exp(a * std::pow(t, 1.0 / gamma) * m - t * std::pow(r, gamma));
}

}  // namespace oracle
