#include <cmath>
#include <cstdlib>
#include <sstream>

#include "qg/errors.hpp"
#include "qg/gevrey.hpp"

namespace qg {

namespace {

double weight_exponent(double t, const GevreyConfig& cfg) {
  if (!(t >= 0.0)) throw DomainError("B_t: t must be >= 0");
  cfg.validate();
  return std::pow(t, 1.0 / cfg.gamma);
}

void guard_outer(const Grid2D& g, double a, const GevreyConfig& cfg) {
  const int shell = 2 * g.dealias_cutoff();
  if (a * g.dk() * shell > cfg.exp_cap) {
    std::ostringstream msg;
    msg << "B_t outer weight overflow: a*|k|_1 = " << a * g.dk() * shell << " on shell |k|_1 = "
        << shell << " exceeds cap " << cfg.exp_cap;
    throw OverflowError(msg.str());
  }
}

struct Entry {
  int k1, k2;
  Complex c;
};

std::vector<Entry> band_entries(const SpectralField& f) {
  const auto& g = f.grid();
  std::vector<Entry> out;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      const int k1 = g.wavenumber(i);
      const int k2 = g.wavenumber(j);
      const Complex c = f.coeffs()[g.flat(i, j)];
      if (c != Complex{} && g.retained(k1, k2)) out.push_back({k1, k2, c});
    }
  }
  return out;
}

}  // namespace

SpectralField bilinear_Bt_direct(const SpectralField& f, const SpectralField& g, double t,
                                 const GevreyConfig& cfg) {
  require_same_grid(f.grid(), g.grid(), "bilinear_Bt_direct");
  const Grid2D& grid = f.grid();
  const double a = weight_exponent(t, cfg) * grid.dk();
  guard_outer(grid, a / grid.dk(), cfg);
  const auto ef = band_entries(f);
  const auto eg = band_entries(g);
  const int cut = grid.dealias_cutoff();
  std::vector<Complex> out(grid.size());
  for (const auto& p : ef) {
    for (const auto& q : eg) {
      const int k1 = p.k1 + q.k1;
      const int k2 = p.k2 + q.k2;
      if (std::abs(k1) > cut || std::abs(k2) > cut) continue;
      const int excess = std::abs(k1) + std::abs(k2) - std::abs(p.k1) - std::abs(p.k2) -
                         std::abs(q.k1) - std::abs(q.k2);
      const double w = excess == 0 ? 1.0 : std::exp(a * excess);
      out[grid.flat(grid.index_of(k1), grid.index_of(k2))] += w * p.c * q.c;
    }
  }
  return SpectralField::from_coefficients(grid, std::move(out), 1e-8);
}

std::vector<BilinearBranch> bilinear_Bt_branches(const SpectralField& f, const SpectralField& g,
                                                 double t, const GevreyConfig& cfg) {
  require_same_grid(f.grid(), g.grid(), "bilinear_Bt_decomposed");
  const Grid2D& grid = f.grid();
  const double a = weight_exponent(t, cfg);
  guard_outer(grid, a, cfg);
  const int n = grid.n();
  const double dk = grid.dk();

  // K_s keeps xi_i >= 0 (s = +1) or xi_i < 0 (s = -1); L_{+1} = I, L_{-1} = exp(-2a|xi_i|).
  auto half = [](int s, int k) { return s > 0 ? k >= 0 : k < 0; };
  auto z_operator = [&](std::array<int, 2> al, std::array<int, 2> be, const SpectralField& h) {
    std::vector<Complex> c(grid.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int k[2] = {grid.wavenumber(i), grid.wavenumber(j)};
        double w = 1.0;
        for (int ax = 0; ax < 2; ++ax) {
          if (!half(be[ax], k[ax])) w = 0.0;
          else if (al[ax] * be[ax] < 0) w *= std::exp(-2.0 * a * dk * std::abs(k[ax]));
        }
        c[grid.flat(i, j)] = w * h.coeffs()[grid.flat(i, j)];
      }
    }
    return ComplexField(grid, std::move(c));
  };

  const std::array<std::array<int, 2>, 4> signs = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  std::vector<BilinearBranch> out;
  for (const auto& al : signs) {
    for (const auto& be : signs) {
      const auto zf = z_operator(al, be, f);
      for (const auto& ga : signs) {
        auto prod = dealiased_product(zf, z_operator(al, ga, g));
        auto c = prod.coeffs();
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (!half(al[0], grid.wavenumber(i)) || !half(al[1], grid.wavenumber(j))) {
              c[grid.flat(i, j)] = 0.0;
            }
          }
        }
        out.push_back({al, be, ga, std::move(prod)});
      }
    }
  }
  return out;
}

SpectralField bilinear_Bt_decomposed(const SpectralField& f, const SpectralField& g, double t,
                                     const GevreyConfig& cfg) {
  ComplexField sum(f.grid());
  for (const auto& b : bilinear_Bt_branches(f, g, t, cfg)) sum += b.value;
  return SpectralField::from_complex(sum, 1e-8);
}

}  // namespace qg
