#include <cstring>
#include <fstream>

#include "qg/errors.hpp"
#include "qg/report.hpp"
#include "qg/snapshot_io.hpp"

namespace qg {

namespace {
constexpr std::uint32_t kTrajectoryVersion = 1;
}

void save_trajectory(const std::string& path, const TrajectoryRecord& traj) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out.write("QGTR", 4);
  binio::write_u32(out, kTrajectoryVersion);
  binio::write_u32(out, static_cast<std::uint32_t>(traj.size()));
  binio::write_f64(out, traj.params.kappa);
  for (std::size_t m = 0; m < traj.size(); ++m) {
    write_snapshot(out, Snapshot{traj.snapshots[m], traj.times[m], traj.params.gamma});
  }
  if (!out) throw FormatError("failed writing " + path);
}

TrajectoryRecord load_trajectory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "QGTR", 4) != 0) {
    throw FormatError(path + ": bad trajectory magic");
  }
  if (binio::read_u32(in) != kTrajectoryVersion) throw FormatError(path + ": unsupported version");
  const auto count = binio::read_u32(in);
  const double kappa = binio::read_f64(in);
  if (count == 0) throw FormatError(path + ": empty trajectory");
  auto first = read_snapshot(in);
  PhysicalParams params;
  params.gamma = first.gamma;
  params.kappa = kappa;
  TrajectoryRecord traj(first.field.grid(), params);
  traj.append(first.time, std::move(first.field));
  for (std::uint32_t m = 1; m < count; ++m) {
    auto s = read_snapshot(in);
    if (s.gamma != params.gamma) throw FormatError(path + ": snapshots disagree on gamma");
    traj.append(s.time, std::move(s.field));
  }
  return traj;
}

}  // namespace qg
