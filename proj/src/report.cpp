#include "qg/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "qg/errors.hpp"

namespace qg {

using ordered_json = nlohmann::ordered_json;

std::string format17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

ordered_json opt(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

// nlohmann prints the shortest round-trip form; the contract asks for 17 digits.
void write_json(std::ostream& out, const ordered_json& j, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out << inner << ordered_json(it.key()).dump() << ": ";
      write_json(out, it.value(), indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out << "[]";
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << inner;
      write_json(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "]";
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    out << (std::isfinite(v) ? format17(v) : "null");
  } else {
    out << j.dump();
  }
}

std::optional<double> get_opt(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

std::string cell(double v) { return std::isfinite(v) ? format17(v) : ""; }

}  // namespace

std::string emit_report(const NormReport& r, ReportFormat fmt) {
  std::ostringstream out;
  const std::size_t count = r.times.size();
  auto series_value = [&](const std::vector<double>& v, std::size_t i) {
    return i < v.size() ? v[i] : NAN;
  };
  if (fmt == ReportFormat::csv) {
    out << "time,radius,fit_quality,k_norm,g_norm,e1_norm\n";
    for (std::size_t i = 0; i < count; ++i) {
      const double radius = i < r.radii.size() ? r.radii[i].radius : NAN;
      const double quality = i < r.radii.size() ? r.radii[i].fit_quality : NAN;
      out << cell(r.times[i]) << ',' << cell(radius) << ',' << cell(quality) << ','
          << cell(series_value(r.k_series, i)) << ',' << cell(series_value(r.g_series, i)) << ','
          << (i + 1 == count && r.e1_norm ? cell(*r.e1_norm) : "") << '\n';
    }
    return out.str();
  }
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["spec"] = r.spec_label;
  j["k_norm"] = opt(r.k_norm);
  j["k_argmax"] = opt(r.k_argmax);
  j["g_norm"] = opt(r.g_norm);
  j["g_argmax"] = opt(r.g_argmax);
  j["e1_norm"] = opt(r.e1_norm);
  j["decay_slopes"] = ordered_json::array();
  for (const auto& [k, slope] : r.decay_slopes) {
    j["decay_slopes"].push_back(ordered_json{{"k", k}, {"slope", slope}});
  }
  j["series"] = ordered_json::array();
  for (std::size_t i = 0; i < count; ++i) {
    ordered_json row;
    row["time"] = r.times[i];
    if (i < r.radii.size()) {
      row["radius"] = r.radii[i].radius;
      row["fit_quality"] = r.radii[i].fit_quality;
      row["shells_used"] = r.radii[i].shells_used;
      row["reliable"] = r.radii[i].reliable;
    }
    if (i < r.k_series.size()) row["k_norm"] = r.k_series[i];
    if (i < r.g_series.size()) row["g_norm"] = r.g_series[i];
    j["series"].push_back(row);
  }
  write_json(out, j, 0);
  out << '\n';
  return out.str();
}

NormReport parse_report_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  if (!j.is_object() || j.value("schema_version", -1) != kReportSchemaVersion) {
    throw FormatError("report: missing or unsupported schema_version");
  }
  NormReport r;
  r.spec_label = j.value("spec", "");
  r.k_norm = get_opt(j, "k_norm");
  r.k_argmax = get_opt(j, "k_argmax");
  r.g_norm = get_opt(j, "g_norm");
  r.g_argmax = get_opt(j, "g_argmax");
  r.e1_norm = get_opt(j, "e1_norm");
  for (const auto& d : j.value("decay_slopes", ordered_json::array())) {
    r.decay_slopes.emplace_back(d.at("k").get<int>(), d.at("slope").get<double>());
  }
  for (const auto& row : j.value("series", ordered_json::array())) {
    const double t = row.at("time").get<double>();
    r.times.push_back(t);
    if (row.contains("radius")) {
      RadiusEstimate e;
      e.time = t;
      e.radius = row.at("radius").get<double>();
      e.fit_quality = row.at("fit_quality").get<double>();
      e.shells_used = row.at("shells_used").get<int>();
      e.reliable = row.at("reliable").get<bool>();
      r.radii.push_back(e);
    }
    if (row.contains("k_norm")) r.k_series.push_back(row.at("k_norm").get<double>());
    if (row.contains("g_norm")) r.g_series.push_back(row.at("g_norm").get<double>());
  }
  return r;
}

void write_diagnostics_csv(std::ostream& out, const TrajectoryRecord& traj) {
  out << "time,l2,linf,h1,dissipation,mean\n";
  for (const auto& d : traj.diagnostics) {
    out << format17(d.time) << ',' << format17(d.l2) << ',' << format17(d.linf) << ','
        << format17(d.h1) << ',' << format17(d.dissipation) << ',' << format17(d.mean) << '\n';
  }
}

void write_monitors_csv(std::ostream& out, const MonitorSeries& m) {
  out << "time,linf_sup,mean,balance_residual,balance_relative,h1_margin,h1_bound\n";
  for (std::size_t i = 0; i < m.times.size(); ++i) {
    out << format17(m.times[i]) << ',' << format17(m.linf[i]) << ',' << format17(m.mean[i]) << ','
        << cell(m.balance_residual[i]) << ',' << cell(m.balance_relative[i]) << ','
        << format17(m.h1_margin[i]) << ',' << format17(m.h1_bound[i]) << '\n';
  }
}

}  // namespace qg
