#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qg/spectral_field.hpp"

namespace qg {

/// One field with its time stamp, as stored on disk.
struct Snapshot {
  SpectralField field;
  double time = 0.0;
  double gamma = 0.0;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

/// Binary layout (little-endian): "QGSF", u32 version, u32 n, f64 box_length,
/// f64 time, f64 gamma, then n*n complex128 coefficients in storage order.
void write_snapshot(std::ostream& out, const Snapshot& snap);
Snapshot read_snapshot(std::istream& in);
void save_snapshot(const std::string& path, const Snapshot& snap);
Snapshot load_snapshot(const std::string& path);

namespace binio {

void write_u32(std::ostream& out, std::uint32_t v);
void write_f64(std::ostream& out, double v);
std::uint32_t read_u32(std::istream& in);
double read_f64(std::istream& in);

}  // namespace binio

}  // namespace qg
