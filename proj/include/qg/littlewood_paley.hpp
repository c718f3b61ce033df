#pragma once

#include <iosfwd>
#include <map>
#include <tuple>
#include <vector>

#include "qg/spectral_field.hpp"

namespace qg {

struct TrajectoryRecord;

/// Index (s, p, q) of a homogeneous Besov norm; p, q may be infinity.
struct BesovIndex {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;

  void validate() const;
};

namespace lp_profile {

/// Smooth radial cutoff: 1 on [0, 1/2], 0 on [1, inf), C-infinity in between.
double eta(double r);
/// phi(xi) = eta(|xi|); psi(xi) = phi(xi/2) - phi(xi).
double phi(double radius);
double psi(double radius);

}  // namespace lp_profile

/// Dyadic partition sampled on one lattice.
///
/// psi_j = psi(2^-j xi) for j_min <= j <= j_max; chi_j = phi(2^-j xi). The top
/// block absorbs every mode above 2^j_max (only unretained modes live there),
/// so chi_{j_min} + sum_j psi_j = 1 on the whole lattice and S_{j_max+1} = I.
class LPFrame {
 public:
  const Grid2D& grid() const { return grid_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  int levels() const { return j_max_ - j_min_ + 1; }
  bool has_block(int j) const { return j >= j_min_ && j <= j_max_; }

  /// Table of psi_j in storage order; throws DomainError if j is outside the range.
  const std::vector<double>& psi_mask(int j) const;
  /// Table of chi_j for j_min <= j <= j_max + 1.
  std::vector<double> chi_mask(int j) const;
  const std::vector<double>& chi_mask() const { return chi_; }

  friend LPFrame build_frame(const Grid2D& grid);

 private:
  explicit LPFrame(const Grid2D& grid) : grid_(grid) {}
  Grid2D grid_;
  int j_min_ = 0;
  int j_max_ = 0;
  std::vector<std::vector<double>> psi_;
  std::vector<double> chi_;
};

/// j_min is the level whose annulus holds the smallest nonzero lattice
/// wavenumber; j_max = ceil(log2 of the largest retained |xi|). Throws
/// ConfigError when fewer than 3 levels fit.
LPFrame build_frame(const Grid2D& grid);

SpectralField dyadic_block(const SpectralField& f, int j, const LPFrame& frame);
SpectralField low_freq_cutoff(const SpectralField& f, int j, const LPFrame& frame);

/// Blocks Delta_j f keyed by j, plus the low-frequency remainder S_{j_min} f.
struct DyadicDecomposition {
  std::map<int, SpectralField> blocks;
  SpectralField remainder;

  SpectralField reconstruct() const;
};
DyadicDecomposition decompose(const SpectralField& f, const LPFrame& frame);

/// lq over j of 2^{js} ||Delta_j f||_{L^p}. The mean never enters.
double besov_norm(const SpectralField& f, const BesovIndex& idx, const LPFrame& frame);
/// Per-block L^p norms, j_min first.
std::vector<double> block_lp_norms(const SpectralField& f, double p, const LPFrame& frame);

/// Time-L^r of each block norm (trapezoid, or max for r = inf), weighted, then lq.
double tilde_besov_norm(const TrajectoryRecord& traj, double r, const BesovIndex& idx,
                        const LPFrame& frame);

struct Paraproduct {
  SpectralField t_f_g;
  SpectralField t_g_f;
  SpectralField remainder;
};

/// fg = T_f g + T_g f + R(f, g), each piece built from dealiased block products.
/// S_{j_min} f is treated as the block below j_min so the identity is exact.
Paraproduct paraproduct_split(const SpectralField& f, const SpectralField& g,
                              const LPFrame& frame);

/// CSV rows kind,j,xi,mask sampling the radial profiles at quarter-lattice spacing.
void write_frame_csv(std::ostream& out, const LPFrame& frame);

}  // namespace qg
