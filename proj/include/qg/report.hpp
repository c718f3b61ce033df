#pragma once

#include <iosfwd>
#include <string>

#include "qg/gevrey.hpp"
#include "qg/monitors.hpp"
#include "qg/trajectory.hpp"

namespace qg {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { json, csv };

/// Stable key order, floats with 17 significant digits, absent values as null
/// (JSON) or empty cells (CSV). CSV columns: time,radius,fit_quality,k_norm,g_norm,e1_norm.
std::string emit_report(const NormReport& report, ReportFormat fmt);
NormReport parse_report_json(const std::string& text);

/// Per-step diagnostics: time,l2,linf,h1,dissipation,mean.
void write_diagnostics_csv(std::ostream& out, const TrajectoryRecord& traj);
/// time,linf_sup,mean,balance_residual,balance_relative,h1_margin,h1_bound.
void write_monitors_csv(std::ostream& out, const MonitorSeries& m);

/// Trajectory file: "QGTR", u32 version, u32 count, f64 kappa, then `count`
/// snapshot records in the snapshot format.
void save_trajectory(const std::string& path, const TrajectoryRecord& traj);
TrajectoryRecord load_trajectory(const std::string& path);

std::string format17(double v);

}  // namespace qg
