#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qg/config.hpp"
#include "qg/errors.hpp"
#include "qg/gevrey.hpp"
#include "qg/monitors.hpp"
#include "qg/report.hpp"
#include "qg/snapshot_io.hpp"
#include "qg/verify.hpp"

namespace fs = std::filesystem;
using namespace qg;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kUsage = 2, kBadInput = 3, kNumerical = 4, kIo = 5 };

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw FormatError("cannot write " + p.string());
  return out;
}

void write_run_outputs(const fs::path& dir, const RunConfig& cfg, const TrajectoryRecord& traj) {
  fs::create_directories(dir);
  open_out(dir / "config.echo") << dump_config(cfg);
  save_trajectory((dir / "trajectory.qgt").string(), traj);
  save_snapshot((dir / "final.qgs").string(), {traj.back(), traj.times.back(), traj.params.gamma});
  auto diag = open_out(dir / "diagnostics.csv");
  write_diagnostics_csv(diag, traj);
  if (traj.size() >= 2) {
    auto mon = open_out(dir / "monitors.csv");
    write_monitors_csv(mon, monitors(traj));
  }
  for (const auto& norm : cfg.norms) {
    open_out(dir / ("report_" + norm.name + ".json"))
        << emit_report(analyze_trajectory(traj, cfg.gevrey(), norm.spec), ReportFormat::json);
  }
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  auto cfg = load_config(config_path);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  const auto traj = simulate(make_initial(cfg), cfg.solver);
  write_run_outputs(cfg.output_dir, cfg, traj);
  const auto& last = traj.diagnostics.back();
  std::printf("run: %zu snapshots, t=%s, l2=%s, linf=%s -> %s\n", traj.size(),
              format17(last.time).c_str(), format17(last.l2).c_str(), format17(last.linf).c_str(),
              cfg.output_dir.c_str());
  return kOk;
}

int cmd_picard(const std::string& config_path, const std::string& out_dir) {
  auto cfg = load_config(config_path);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  const auto [traj, state] = picard_solve(make_initial(cfg), cfg.solver);
  write_run_outputs(cfg.output_dir, cfg, traj);
  auto res = open_out(fs::path(cfg.output_dir) / "picard_residuals.csv");
  res << "iterate,residual\n";
  for (std::size_t i = 0; i < state.residual_history.size(); ++i) {
    res << i + 1 << ',' << format17(state.residual_history[i]) << '\n';
  }
  std::printf("picard: %d iterates, final residual %s, %d non-monotone steps -> %s\n",
              state.iterate_index, format17(state.residual_history.back()).c_str(),
              state.non_monotone_steps, cfg.output_dir.c_str());
  return kOk;
}

int cmd_analyze(const std::string& traj_path, const std::string& spec_path,
                const std::string& format, const std::string& out_path) {
  const auto traj = load_trajectory(traj_path);
  const auto a = load_analyze_spec(spec_path);
  const double gamma = traj.params.gamma;
  const WeightedNormSpec spec{gamma, a.p, a.q, a.r, a.alpha_k};
  const GevreyConfig gcfg{a.alpha, gamma, a.exp_cap};
  gcfg.validate();
  auto rep = analyze_trajectory(traj, gcfg, spec);
  if (a.decay_t_lo > 0.0) {
    for (int k = 1; k <= a.decay_max_order; ++k) {
      const auto fit = decay_rate_fit(traj, k, DecayNorm::sup_partials, a.decay_t_lo, a.decay_t_hi);
      rep.decay_slopes.emplace_back(k, fit.slope);
      std::fprintf(stderr, "decay k=%d slope=%s band=%s r2=%s%s\n", k, format17(fit.slope).c_str(),
                   format17(fit.band).c_str(), format17(fit.r2).c_str(),
                   fit.exponential ? " (exponential decay suspected)" : "");
    }
  }
  const auto text = emit_report(rep, format == "csv" ? ReportFormat::csv : ReportFormat::json);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    open_out(out_path) << text;
  }
  return kOk;
}

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed,
               const std::vector<std::string>& tols) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::fprintf(stderr, "unknown suite '%s'; expected one of:", suite.c_str());
    for (const auto& n : names) std::fprintf(stderr, " %s", n.c_str());
    std::fprintf(stderr, "\n");
    return kUsage;
  }
  std::map<std::string, double> overrides;
  for (const auto& t : tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "--tol expects name=value, got '%s'\n", t.c_str());
      return kUsage;
    }
    try {
      overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      std::fprintf(stderr, "--tol value is not a number: '%s'\n", t.c_str());
      return kUsage;
    }
  }
  const auto result = run_verify(suite, seed.value_or(default_seed(suite)), overrides);
  print_suite(std::cout, result);
  return result.passed() ? kOk : kChecksFailed;
}

int cmd_inspect(const std::string& path) {
  const auto snap = load_snapshot(path);
  const auto& f = snap.field;
  const auto r = analyticity_radius(f, snap.time);
  std::printf("n            %d\n", f.grid().n());
  std::printf("box_length   %s\n", format17(f.grid().box_length()).c_str());
  std::printf("time         %s\n", format17(snap.time).c_str());
  std::printf("gamma        %s\n", format17(snap.gamma).c_str());
  std::printf("l2           %s\n", format17(lp_norm(f, 2.0)).c_str());
  std::printf("linf         %s\n", format17(sup_norm(f)).c_str());
  std::printf("max_coeff    %s\n", format17(f.max_abs_coefficient()).c_str());
  std::printf("radius       %s (R2 %s, %d shells%s)\n", format17(r.radius).c_str(),
              format17(r.fit_quality).c_str(), r.shells_used, r.reliable ? "" : ", unreliable");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissipative quasi-geostrophic solver and Gevrey-norm diagnostics"};
  app.require_subcommand(1);

  std::string config_path, out_dir, traj_path, spec_path, format = "json", out_path, suite, snap_path;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> tols;

  auto* run = app.add_subcommand("run", "Integrate a configuration and write its artifacts");
  run->add_option("--config", config_path, "key = value configuration")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Override output_dir");

  auto* picard = app.add_subcommand("picard", "Solve the mild formulation by fixed-point iteration");
  picard->add_option("--config", config_path, "key = value configuration")->required()->check(CLI::ExistingFile);
  picard->add_option("--out", out_dir, "Override output_dir");

  auto* analyze = app.add_subcommand("analyze", "Gevrey norms, analyticity radii and decay fits of a trajectory");
  analyze->add_option("--traj", traj_path, "Trajectory file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--spec", spec_path, "Norm specification")->required()->check(CLI::ExistingFile);
  analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "frame|multipliers|bilinear|dynamics|kernels|gevrey")->required();
  verify->add_option("--seed", seed, "Seed of the random field banks");
  verify->add_option("--tol", tols, "Tighten a threshold: name=value");

  auto* inspect = app.add_subcommand("inspect-snapshot", "Summarize a snapshot file");
  inspect->add_option("path", snap_path, "Snapshot file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) return cmd_run(config_path, out_dir);
    if (*picard) return cmd_picard(config_path, out_dir);
    if (*analyze) return cmd_analyze(traj_path, spec_path, format, out_path);
    if (*verify) return cmd_verify(suite, seed, tols);
    if (*inspect) return cmd_inspect(snap_path);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "invalid configuration:\n");
    for (const auto& v : e.violations()) std::fprintf(stderr, "  - %s\n", v.c_str());
    return kBadInput;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kBadInput;
  } catch (const CflError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kNumerical;
  } catch (const BlowUpError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kNumerical;
  } catch (const DivergenceError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kNumerical;
  } catch (const OverflowError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kNumerical;
  } catch (const FormatError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kBadInput;
  }
  return kUsage;
}
