#include "qg/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "qg/errors.hpp"
#include "qg/multipliers.hpp"
#include "qg/trajectory.hpp"

namespace qg {

void BesovIndex::validate() const {
  std::vector<std::string> v;
  if (!std::isfinite(s)) v.push_back("Besov s must be finite");
  if (std::isnan(p) || p < 1.0) v.push_back("Besov p must be >= 1");
  if (std::isnan(q) || q < 1.0) v.push_back("Besov q must be >= 1");
  if (!v.empty()) throw ConfigError(std::move(v));
}

namespace lp_profile {

namespace {
double bump(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
}  // namespace

double eta(double r) {
  constexpr double a = 0.5;
  constexpr double b = 1.0;
  if (r <= a) return 1.0;
  if (r >= b) return 0.0;
  const double u = bump(b - r);
  return u / (u + bump(r - a));
}

double phi(double radius) { return eta(radius); }
double psi(double radius) { return eta(0.5 * radius) - eta(radius); }

}  // namespace lp_profile

namespace {

std::vector<double> radial_table(const Grid2D& g, double scale, double (*profile)(double)) {
  const int n = g.n();
  const double dk = g.dk();
  std::vector<double> out(g.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[g.flat(i, j)] = profile(scale * dk * std::hypot(g.wavenumber(i), g.wavenumber(j)));
    }
  }
  return out;
}

SpectralField scale_by(const SpectralField& f, const std::vector<double>& mask) {
  const auto c = f.coeffs();
  std::vector<Complex> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * mask[i];
  return SpectralField::from_coefficients(f.grid(), std::move(out), 1e-8);
}

double lq_sum(const std::vector<double>& terms, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  double s = 0.0;
  for (double t : terms) s += std::pow(t, q);
  return std::pow(s, 1.0 / q);
}

}  // namespace

LPFrame build_frame(const Grid2D& grid) {
  LPFrame frame(grid);
  const double kmax = std::sqrt(2.0) * grid.max_retained_wavenumber();
  frame.j_min_ = static_cast<int>(std::floor(std::log2(grid.dk()) + 1e-12));
  frame.j_max_ = static_cast<int>(std::ceil(std::log2(kmax) - 1e-12));
  if (frame.levels() < 3) {
    throw ConfigError({"grid n=" + std::to_string(grid.n()) + " hosts only " +
                       std::to_string(std::max(frame.levels(), 0)) +
                       " dyadic levels, at least 3 are required"});
  }
  for (int j = frame.j_min_; j <= frame.j_max_; ++j) {
    if (j < frame.j_max_) {
      frame.psi_.push_back(radial_table(grid, std::ldexp(1.0, -j), lp_profile::psi));
    } else {
      auto low = radial_table(grid, std::ldexp(1.0, -j), lp_profile::phi);
      for (auto& v : low) v = 1.0 - v;
      frame.psi_.push_back(std::move(low));
    }
  }
  frame.chi_ = radial_table(grid, std::ldexp(1.0, -frame.j_min_), lp_profile::phi);
  return frame;
}

const std::vector<double>& LPFrame::psi_mask(int j) const {
  if (!has_block(j)) {
    throw DomainError("dyadic level " + std::to_string(j) + " outside [" +
                      std::to_string(j_min_) + ", " + std::to_string(j_max_) + "]");
  }
  return psi_[j - j_min_];
}

std::vector<double> LPFrame::chi_mask(int j) const {
  if (j < j_min_ || j > j_max_ + 1) {
    throw DomainError("cutoff level " + std::to_string(j) + " outside [" +
                      std::to_string(j_min_) + ", " + std::to_string(j_max_ + 1) + "]");
  }
  // Telescoping sum keeps S_{j+1} = S_j + Delta_j exact in floating point terms.
  auto out = chi_;
  for (int i = j_min_; i < j; ++i) {
    const auto& p = psi_mask(i);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += p[k];
  }
  return out;
}

SpectralField dyadic_block(const SpectralField& f, int j, const LPFrame& frame) {
  require_same_grid(f.grid(), frame.grid(), "dyadic_block");
  return scale_by(f, frame.psi_mask(j));
}

SpectralField low_freq_cutoff(const SpectralField& f, int j, const LPFrame& frame) {
  require_same_grid(f.grid(), frame.grid(), "low_freq_cutoff");
  return scale_by(f, frame.chi_mask(j));
}

SpectralField DyadicDecomposition::reconstruct() const {
  SpectralField out = remainder;
  for (const auto& [j, b] : blocks) out = out + b;
  return out;
}

DyadicDecomposition decompose(const SpectralField& f, const LPFrame& frame) {
  DyadicDecomposition d{{}, low_freq_cutoff(f, frame.j_min(), frame)};
  for (int j = frame.j_min(); j <= frame.j_max(); ++j) d.blocks.emplace(j, dyadic_block(f, j, frame));
  return d;
}

std::vector<double> block_lp_norms(const SpectralField& f, double p, const LPFrame& frame) {
  std::vector<double> out;
  for (int j = frame.j_min(); j <= frame.j_max(); ++j) {
    out.push_back(lp_norm(dyadic_block(f, j, frame), p));
  }
  return out;
}

double besov_norm(const SpectralField& f, const BesovIndex& idx, const LPFrame& frame) {
  idx.validate();
  auto terms = block_lp_norms(f, idx.p, frame);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] *= std::exp2(idx.s * (frame.j_min() + static_cast<int>(i)));
  }
  return lq_sum(terms, idx.q);
}

double tilde_besov_norm(const TrajectoryRecord& traj, double r, const BesovIndex& idx,
                        const LPFrame& frame) {
  idx.validate();
  if (traj.empty()) throw StructuralError("tilde_besov_norm: empty trajectory");
  if (std::isnan(r) || r < 1.0) throw DomainError("tilde_besov_norm: r must be >= 1");
  const int levels = frame.levels();
  std::vector<std::vector<double>> series(levels);
  for (const auto& snap : traj.snapshots) {
    const auto norms = block_lp_norms(snap, idx.p, frame);
    for (int l = 0; l < levels; ++l) series[l].push_back(norms[l]);
  }
  std::vector<double> terms(levels);
  for (int l = 0; l < levels; ++l) {
    const auto& a = series[l];
    double v = 0.0;
    if (std::isinf(r)) {
      v = *std::max_element(a.begin(), a.end());
    } else {
      for (std::size_t m = 1; m < a.size(); ++m) {
        v += 0.5 * (traj.times[m] - traj.times[m - 1]) * (std::pow(a[m], r) + std::pow(a[m - 1], r));
      }
      v = std::pow(v, 1.0 / r);
    }
    terms[l] = std::exp2(idx.s * (frame.j_min() + l)) * v;
  }
  return lq_sum(terms, idx.q);
}

Paraproduct paraproduct_split(const SpectralField& f, const SpectralField& g,
                              const LPFrame& frame) {
  require_same_grid(f.grid(), g.grid(), "paraproduct_split");
  require_same_grid(f.grid(), frame.grid(), "paraproduct_split");
  // Block index j_min - 1 holds S_{j_min}; then f = sum of bf over all indices.
  std::vector<SpectralField> bf;
  std::vector<SpectralField> bg;
  bf.push_back(low_freq_cutoff(f, frame.j_min(), frame));
  bg.push_back(low_freq_cutoff(g, frame.j_min(), frame));
  for (int j = frame.j_min(); j <= frame.j_max(); ++j) {
    bf.push_back(dyadic_block(f, j, frame));
    bg.push_back(dyadic_block(g, j, frame));
  }
  const int m = static_cast<int>(bf.size());
  const Grid2D& grid = f.grid();
  SpectralField tfg(grid), tgf(grid), rem(grid);
  SpectralField low_f(grid), low_g(grid);  // S_{j-1} = sum of blocks with index <= j - 2
  for (int j = 0; j < m; ++j) {
    if (j >= 2) {
      low_f = low_f + bf[j - 2];
      low_g = low_g + bg[j - 2];
      tfg = tfg + dealiased_product(low_f, bg[j]);
      tgf = tgf + dealiased_product(low_g, bf[j]);
    }
    SpectralField near = bg[j];
    if (j > 0) near = near + bg[j - 1];
    if (j + 1 < m) near = near + bg[j + 1];
    rem = rem + dealiased_product(bf[j], near);
  }
  return {tfg, tgf, rem};
}

void write_frame_csv(std::ostream& out, const LPFrame& frame) {
  const auto& g = frame.grid();
  const double dk = g.dk();
  const double top = std::sqrt(2.0) * (g.n() / 2) * dk;
  const auto prec = out.precision(17);
  out << "kind,j,xi,mask\n";
  for (int j = frame.j_min(); j <= frame.j_max(); ++j) {
    for (double xi = 0.0; xi <= top; xi += 0.25 * dk) {
      const double s = std::ldexp(xi, -j);
      const double v = j == frame.j_max() ? 1.0 - lp_profile::phi(s) : lp_profile::psi(s);
      out << "psi," << j << ',' << xi << ',' << v << '\n';
    }
  }
  for (double xi = 0.0; xi <= top; xi += 0.25 * dk) {
    out << "chi," << frame.j_min() << ',' << xi << ','
        << lp_profile::phi(std::ldexp(xi, -frame.j_min())) << '\n';
  }
  out.precision(prec);
}

}  // namespace qg
