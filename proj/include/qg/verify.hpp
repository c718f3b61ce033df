#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qg/dynamics.hpp"
#include "qg/spectral_field.hpp"

namespace qg {

/// One invariant check: passes when measured <= threshold.
struct Check {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

const std::vector<std::string>& suite_names();
/// Seed the frozen constants of a suite were measured with.
std::uint64_t default_seed(const std::string& suite);

/// Default thresholds of a suite, by check name.
std::map<std::string, double> default_tolerances(const std::string& suite);

/// Deterministic given the seed. Throws ConfigError for an unknown suite, an
/// unknown check name in `overrides`, or an override looser than the default.
SuiteResult run_verify(const std::string& suite, std::uint64_t seed,
                       const std::map<std::string, double>& overrides = {});
void print_suite(std::ostream& out, const SuiteResult& result);

namespace scenarios {

/// Poisson-smoothed square-wave fronts a1 S(x1) + a2 S(x2) on any box.
SpectralField smoothed_fronts(const Grid2D& grid, double a1, double a2, double t0);
/// a (cos(x1) + cos(2 x2)) on the standard box.
SpectralField two_mode(const Grid2D& grid, double amplitude);
/// lambda^{gamma-1} f(lambda x): mode k moves to lambda k. Throws if it leaves the band.
SpectralField rescale(const SpectralField& f, int lambda, double gamma);
/// Restriction of g to the modes lambda k, relabelled as k, divided by lambda^{gamma-1}.
SpectralField unscale(const SpectralField& g, int lambda, double gamma);

SolverConfig subcritical_gevrey_config();
SolverConfig critical_config();

}  // namespace scenarios

}  // namespace qg
