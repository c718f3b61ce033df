#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qg/dynamics.hpp"
#include "qg/gevrey.hpp"
#include "qg/random_fields.hpp"

namespace qg {

/// Flat `key = value` document. Values are numbers, booleans or quoted
/// strings; `#` starts a comment. Duplicate keys and malformed lines raise
/// ParseError with the 1-based line number.
struct KeyValueDocument {
  struct Entry {
    std::string value;
    bool quoted = false;
    int line = 0;
  };
  std::map<std::string, Entry> entries;

  static KeyValueDocument parse(const std::string& text);
  static KeyValueDocument load(const std::string& path);
};

/// Initial datum of a run.
struct InitSpec {
  std::string kind = "random";  // random | mode | snapshot
  RandomFieldSpec random{1.0, 8.0, 0.3, 0.1};
  int k1 = 1;
  int k2 = 0;
  std::string path;

  std::vector<std::string> violations() const;
};

struct NamedNormSpec {
  std::string name;
  WeightedNormSpec spec;
};

struct RunConfig {
  SolverConfig solver;
  double exp_cap = kDefaultExpCap;
  std::vector<NamedNormSpec> norms;
  InitSpec init;
  std::string output_dir = "out";
  std::uint64_t seed = 1;

  GevreyConfig gevrey() const { return {solver.params.alpha, solver.params.gamma, exp_cap}; }
  std::vector<std::string> violations() const;
};

/// Every problem found (unknown keys, bad values, violated constraints) is
/// collected into one ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
/// Sorted keys, numbers with 17 significant digits; parse(dump(c)) == c.
std::string dump_config(const RunConfig& cfg);

/// Settings of `qg analyze`: one weighted norm plus decay-fit window.
struct AnalyzeSpec {
  double alpha = 1.0;
  double exp_cap = kDefaultExpCap;
  double p = 2.0;
  double q = 2.0;
  double r = 8.0;
  double alpha_k = 0.5;
  int decay_max_order = 1;
  double decay_t_lo = 0.0;  // 0 disables the decay fit
  double decay_t_hi = 0.0;
};
AnalyzeSpec load_analyze_spec(const std::string& path);
AnalyzeSpec parse_analyze_spec(const std::string& text);

SpectralField make_initial(const RunConfig& cfg);

}  // namespace qg
