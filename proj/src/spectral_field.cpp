#include "qg/spectral_field.hpp"

#include <algorithm>
#include <cmath>

#include "qg/errors.hpp"

namespace qg {

namespace {

std::vector<Complex> real_to_complex(std::span<const double> values) {
  std::vector<Complex> out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [](double v) { return Complex(v, 0.0); });
  return out;
}

void check_size(const Grid2D& grid, std::size_t size, const char* where) {
  if (size != grid.size()) {
    throw StructuralError(std::string(where) + ": expected " + std::to_string(grid.size()) +
                          " values, got " + std::to_string(size));
  }
}

// Index of -k in storage order.
std::size_t mirror(const Grid2D& g, int i, int j) {
  const int n = g.n();
  return g.flat((n - i) % n, (n - j) % n);
}

}  // namespace

ComplexField::ComplexField(const Grid2D& grid) : grid_(grid), coeffs_(grid.size()) {}

ComplexField::ComplexField(const Grid2D& grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
  check_size(grid_, coeffs_.size(), "ComplexField");
}

Complex ComplexField::at(int k1, int k2) const {
  return coeffs_[grid_.flat(grid_.index_of(k1), grid_.index_of(k2))];
}

std::vector<Complex> ComplexField::to_physical() const {
  std::vector<Complex> out(coeffs_.size());
  fft::inverse(grid_.n(), coeffs_, out);
  return out;
}

ComplexField ComplexField::from_physical(const Grid2D& grid, std::span<const Complex> values) {
  check_size(grid, values.size(), "ComplexField::from_physical");
  std::vector<Complex> coeffs(values.size());
  fft::forward(grid.n(), values, coeffs);
  return ComplexField(grid, std::move(coeffs));
}

ComplexField& ComplexField::operator+=(const ComplexField& other) {
  require_same_grid(grid_, other.grid_, "ComplexField::operator+=");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField::SpectralField(const Grid2D& grid) : grid_(grid), coeffs_(grid.size()) {}

SpectralField::SpectralField(const Grid2D& grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {}

SpectralField SpectralField::from_physical(const Grid2D& grid, std::span<const double> values) {
  check_size(grid, values.size(), "SpectralField::from_physical");
  auto in = real_to_complex(values);
  std::vector<Complex> coeffs(in.size());
  fft::forward(grid.n(), in, coeffs);
  // Real input: only rounding separates the result from exact Hermitian symmetry.
  return from_coefficients(grid, std::move(coeffs), 1e-8);
}

SpectralField SpectralField::from_function(const Grid2D& grid,
                                           const std::function<double(double, double)>& f) {
  const int n = grid.n();
  const double h = grid.spacing();
  std::vector<double> values(grid.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) values[grid.flat(i, j)] = f(i * h, j * h);
  }
  return from_physical(grid, values);
}

SpectralField SpectralField::from_coefficients(const Grid2D& grid, std::vector<Complex> coeffs,
                                               double tolerance) {
  check_size(grid, coeffs.size(), "SpectralField::from_coefficients");
  const int n = grid.n();
  double scale = 0.0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  std::vector<Complex> sym(coeffs.size());
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto a = grid.flat(i, j);
      const auto b = mirror(grid, i, j);
      defect = std::max(defect, std::abs(coeffs[a] - std::conj(coeffs[b])));
      sym[a] = 0.5 * (coeffs[a] + std::conj(coeffs[b]));
    }
  }
  if (defect > tolerance * std::max(scale, 1e-300) && defect > 0.0) {
    throw StructuralError("coefficients are not Hermitian: defect " + std::to_string(defect) +
                          " relative to max " + std::to_string(scale));
  }
  const int ny = n / 2;
  for (int m = 0; m < n; ++m) {
    sym[grid.flat(ny, m)] = 0.0;
    sym[grid.flat(m, ny)] = 0.0;
  }
  return SpectralField(grid, std::move(sym));
}

SpectralField SpectralField::from_complex(const ComplexField& field, double tolerance) {
  const auto c = field.coeffs();
  return from_coefficients(field.grid(), std::vector<Complex>(c.begin(), c.end()), tolerance);
}

Complex SpectralField::at(int k1, int k2) const {
  return coeffs_[grid_.flat(grid_.index_of(k1), grid_.index_of(k2))];
}

std::vector<double> SpectralField::to_physical() const {
  std::vector<Complex> out(coeffs_.size());
  fft::inverse(grid_.n(), coeffs_, out);
  std::vector<double> values(out.size());
  std::transform(out.begin(), out.end(), values.begin(), [](Complex c) { return c.real(); });
  return values;
}

double SpectralField::hermitian_defect() const {
  double defect = 0.0;
  const int n = grid_.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      defect = std::max(defect, std::abs(coeffs_[grid_.flat(i, j)] -
                                         std::conj(coeffs_[mirror(grid_, i, j)])));
    }
  }
  return defect;
}

double SpectralField::coefficient_energy() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

double SpectralField::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool SpectralField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

SpectralField SpectralField::operator+(const SpectralField& other) const {
  require_same_grid(grid_, other.grid_, "SpectralField::operator+");
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] + other.coeffs_[i];
  return SpectralField(grid_, std::move(out));
}

SpectralField SpectralField::operator-(const SpectralField& other) const {
  require_same_grid(grid_, other.grid_, "SpectralField::operator-");
  std::vector<Complex> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] - other.coeffs_[i];
  return SpectralField(grid_, std::move(out));
}

SpectralField SpectralField::operator*(double scale) const {
  std::vector<Complex> out(coeffs_);
  for (auto& c : out) c *= scale;
  return SpectralField(grid_, std::move(out));
}

SpectralField SpectralField::truncated() const {
  std::vector<Complex> out(coeffs_);
  const int n = grid_.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!grid_.retained(grid_.wavenumber(i), grid_.wavenumber(j))) out[grid_.flat(i, j)] = 0.0;
    }
  }
  return SpectralField(grid_, std::move(out));
}

double relative_l2_error(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a.grid(), b.grid(), "relative_l2_error");
  double num = 0.0;
  double den = 0.0;
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    num += std::norm(ca[i] - cb[i]);
    den += std::norm(cb[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::sqrt(num);
  return std::sqrt(num / den);
}

std::vector<std::string> PhysicalParams::violations() const {
  std::vector<std::string> out;
  if (!(gamma >= 1.0 && gamma <= 2.0)) {
    out.push_back("gamma must lie in [1, 2] (got " + std::to_string(gamma) + ")");
  }
  if (!(kappa > 0.0) || !std::isfinite(kappa)) out.push_back("kappa must be > 0");
  if (!(alpha > 0.0 && alpha <= 1.0)) out.push_back("alpha must lie in (0, 1]");
  if (gamma == 1.0 && alpha > 0.25) {
    out.push_back("alpha <= 1/4 required when gamma = 1 (got alpha = " + std::to_string(alpha) +
                  ")");
  }
  return out;
}

void PhysicalParams::validate() const {
  auto v = violations();
  if (!v.empty()) throw ConfigError(std::move(v));
}

}  // namespace qg
