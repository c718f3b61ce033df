#include "qg/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qg/errors.hpp"

namespace qg {

MultiplierSymbol::MultiplierSymbol(std::string label, Function symbol, bool conjugate_symmetric)
    : label_(std::move(label)), symbol_(std::move(symbol)), conjugate_symmetric_(conjugate_symmetric) {}

MultiplierSymbol MultiplierSymbol::tabulated(std::string label, const Grid2D& grid,
                                             std::vector<Complex> table, bool conjugate_symmetric) {
  if (table.size() != grid.size()) throw StructuralError("multiplier table size mismatch");
  MultiplierSymbol m(std::move(label), nullptr, conjugate_symmetric);
  m.table_grid_ = grid;
  m.table_ = std::move(table);
  return m;
}

MultiplierSymbol MultiplierSymbol::tabulated_real(std::string label, const Grid2D& grid,
                                                  std::span<const double> table) {
  std::vector<Complex> t(table.begin(), table.end());
  return tabulated(std::move(label), grid, std::move(t), true);
}

Complex MultiplierSymbol::at(const Grid2D& grid, int k1, int k2) const {
  if (table_grid_) {
    require_same_grid(*table_grid_, grid, label_.c_str());
    return table_[grid.flat(grid.index_of(k1), grid.index_of(k2))];
  }
  return symbol_(grid.dk() * k1, grid.dk() * k2);
}

std::vector<Complex> MultiplierSymbol::tabulate(const Grid2D& grid) const {
  if (table_grid_) {
    require_same_grid(*table_grid_, grid, label_.c_str());
    return table_;
  }
  const int n = grid.n();
  const double dk = grid.dk();
  std::vector<Complex> out(grid.size());
  for (int i = 0; i < n; ++i) {
    const double xi1 = dk * grid.wavenumber(i);
    for (int j = 0; j < n; ++j) out[grid.flat(i, j)] = symbol_(xi1, dk * grid.wavenumber(j));
  }
  return out;
}

namespace symbols {

MultiplierSymbol identity() {
  return MultiplierSymbol("identity", [](double, double) { return Complex(1.0, 0.0); });
}

MultiplierSymbol fractional_laplacian(double gamma) {
  return MultiplierSymbol("|xi|^" + std::to_string(gamma), [gamma](double a, double b) {
    const double r = std::hypot(a, b);
    return Complex(r == 0.0 ? 0.0 : std::pow(r, gamma), 0.0);
  });
}

MultiplierSymbol l1_norm() {
  return MultiplierSymbol("|xi|_1",
                          [](double a, double b) { return Complex(std::abs(a) + std::abs(b)); });
}

MultiplierSymbol riesz(int axis) {
  if (axis != 1 && axis != 2) throw DomainError("riesz: axis must be 1 or 2");
  return MultiplierSymbol("R" + std::to_string(axis), [axis](double a, double b) {
    const double r = std::hypot(a, b);
    if (r == 0.0) return Complex{};
    return Complex(0.0, (axis == 1 ? a : b) / r);
  });
}

MultiplierSymbol derivative(int axis) {
  if (axis != 1 && axis != 2) throw DomainError("derivative: axis must be 1 or 2");
  return MultiplierSymbol("d" + std::to_string(axis),
                          [axis](double a, double b) { return Complex(0.0, axis == 1 ? a : b); });
}

MultiplierSymbol heat(double t, double gamma, double kappa) {
  return MultiplierSymbol("exp(-t k |xi|^g)", [=](double a, double b) {
    const double r = std::hypot(a, b);
    return Complex(std::exp(-t * kappa * (r == 0.0 ? 0.0 : std::pow(r, gamma))), 0.0);
  });
}

MultiplierSymbol gevrey_weight(double a) {
  return MultiplierSymbol("exp(a |xi|_1)", [a](double x, double y) {
    return Complex(std::exp(a * (std::abs(x) + std::abs(y))), 0.0);
  });
}

}  // namespace symbols

namespace {

std::vector<Complex> multiply(std::span<const Complex> c, const std::vector<Complex>& table) {
  std::vector<Complex> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * table[i];
  return out;
}

// Zeroes modes outside the 2/3 band.
void truncate(const Grid2D& g, std::span<Complex> c) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const bool row = std::abs(g.wavenumber(i)) <= g.dealias_cutoff();
    for (int j = 0; j < n; ++j) {
      if (!row || !g.retained(g.wavenumber(i), g.wavenumber(j))) c[g.flat(i, j)] = 0.0;
    }
  }
}

}  // namespace

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& m) {
  if (!m.conjugate_symmetric()) {
    throw StructuralError("multiplier '" + m.label() + "' does not preserve real fields");
  }
  auto out = multiply(f.coeffs(), m.tabulate(f.grid()));
  return SpectralField::from_coefficients(f.grid(), std::move(out), 1e-8);
}

ComplexField apply_multiplier(const ComplexField& f, const MultiplierSymbol& m) {
  return ComplexField(f.grid(), multiply(f.coeffs(), m.tabulate(f.grid())));
}

std::pair<SpectralField, SpectralField> riesz_velocity(const SpectralField& theta) {
  const auto& g = theta.grid();
  const int n = g.n();
  const double dk = g.dk();
  std::vector<Complex> v1(g.size());
  std::vector<Complex> v2(g.size());
  const auto c = theta.coeffs();
  for (int i = 0; i < n; ++i) {
    const double xi1 = dk * g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double xi2 = dk * g.wavenumber(j);
      const double r = std::hypot(xi1, xi2);
      if (r == 0.0) continue;
      const auto k = g.flat(i, j);
      const Complex I(0.0, 1.0);
      v1[k] = -I * (xi2 / r) * c[k];
      v2[k] = I * (xi1 / r) * c[k];
    }
  }
  return {SpectralField::from_coefficients(g, std::move(v1), 1e-8),
          SpectralField::from_coefficients(g, std::move(v2), 1e-8)};
}

SpectralField fractional_semigroup(const SpectralField& f, double t, double gamma, double kappa) {
  if (!(t >= 0.0)) throw DomainError("fractional_semigroup: t must be >= 0");
  if (t == 0.0) return f;
  return apply_multiplier(f, symbols::heat(t, gamma, kappa));
}

SpectralField gevrey_multiplier(const SpectralField& f, double a, double exp_cap) {
  if (!(a >= 0.0)) throw DomainError("gevrey_multiplier: a must be >= 0");
  if (a == 0.0) return f;
  const auto& g = f.grid();
  const int n = g.n();
  const double dk = g.dk();
  const auto c = f.coeffs();
  std::vector<Complex> out(g.size());
  int worst_shell = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto k = g.flat(i, j);
      if (c[k] == Complex{}) continue;
      const int shell = std::abs(g.wavenumber(i)) + std::abs(g.wavenumber(j));
      const double e = a * dk * shell;
      if (e > exp_cap) {
        worst_shell = std::max(worst_shell, shell);
        continue;
      }
      out[k] = c[k] * std::exp(e);
    }
  }
  if (worst_shell >= 0) {
    std::ostringstream msg;
    msg << "gevrey weight overflow: a*|k|_1 = " << a * dk * worst_shell << " on shell |k|_1 = "
        << worst_shell << " exceeds cap " << exp_cap;
    throw OverflowError(msg.str());
  }
  return SpectralField::from_coefficients(g, std::move(out), 1e-8);
}

SpectralField gevrey_damping(const SpectralField& f, double a) {
  if (!(a >= 0.0)) throw DomainError("gevrey_damping: a must be >= 0");
  if (a == 0.0) return f;
  return apply_multiplier(f, symbols::gevrey_weight(-a));
}

ComplexField dealiased_product(const ComplexField& f, const ComplexField& g) {
  require_same_grid(f.grid(), g.grid(), "dealiased_product");
  const auto& grid = f.grid();
  std::vector<Complex> a(f.coeffs().begin(), f.coeffs().end());
  std::vector<Complex> b(g.coeffs().begin(), g.coeffs().end());
  truncate(grid, a);
  truncate(grid, b);
  std::vector<Complex> pa(grid.size());
  std::vector<Complex> pb(grid.size());
  fft::inverse(grid.n(), a, pa);
  fft::inverse(grid.n(), b, pb);
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
  fft::forward(grid.n(), pa, a);
  truncate(grid, a);
  return ComplexField(grid, std::move(a));
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f.grid(), g.grid(), "dealiased_product");
  const auto& grid = f.grid();
  // Real fields: one complex transform carries both factors, (a + i b)^2 = a^2 - b^2 + 2iab.
  std::vector<Complex> a(f.coeffs().begin(), f.coeffs().end());
  std::vector<Complex> b(g.coeffs().begin(), g.coeffs().end());
  truncate(grid, a);
  truncate(grid, b);
  std::vector<Complex> packed(grid.size());
  for (std::size_t i = 0; i < packed.size(); ++i) packed[i] = a[i] + Complex(0.0, 1.0) * b[i];
  std::vector<Complex> phys(grid.size());
  fft::inverse(grid.n(), packed, phys);
  for (auto& z : phys) z = Complex(z.real() * z.imag(), 0.0);
  fft::forward(grid.n(), phys, a);
  truncate(grid, a);
  return SpectralField::from_coefficients(grid, std::move(a), 1e-8);
}

double lp_norm(const Grid2D& grid, std::span<const double> values, double p) {
  if (values.size() != grid.size()) throw StructuralError("lp_norm: size mismatch");
  if (std::isnan(p) || p < 1.0) throw DomainError("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (double v : values) s += v * v;
    return std::sqrt(s * grid.cell_area());
  }
  // Scale by the max to keep large p away from overflow.
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  for (double v : values) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s * grid.cell_area(), 1.0 / p);
}

double lp_norm(const SpectralField& f, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("lp_norm: p must be >= 1");
  return lp_norm(f.grid(), f.to_physical(), p);
}

std::vector<double> gradient_magnitude(const SpectralField& f) {
  const auto dx = apply_multiplier(f, symbols::derivative(1)).to_physical();
  const auto dy = apply_multiplier(f, symbols::derivative(2)).to_physical();
  std::vector<double> out(dx.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::hypot(dx[i], dy[i]);
  return out;
}

}  // namespace qg
