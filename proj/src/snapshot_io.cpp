#include "qg/snapshot_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include "qg/errors.hpp"

namespace qg {

namespace binio {

namespace {

template <typename T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::array<unsigned char, sizeof(T)> b;
    std::memcpy(b.data(), &v, sizeof(T));
    std::reverse(b.begin(), b.end());
    std::memcpy(&v, b.data(), sizeof(T));
    return v;
  }
}

template <typename T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) throw FormatError("unexpected end of file");
  return to_little(v);
}

}  // namespace

void write_u32(std::ostream& out, std::uint32_t v) { put(out, v); }
void write_f64(std::ostream& out, double v) { put(out, std::bit_cast<std::uint64_t>(v)); }
std::uint32_t read_u32(std::istream& in) { return get<std::uint32_t>(in); }
double read_f64(std::istream& in) { return std::bit_cast<double>(get<std::uint64_t>(in)); }

}  // namespace binio

void write_snapshot(std::ostream& out, const Snapshot& snap) {
  const auto& g = snap.field.grid();
  out.write("QGSF", 4);
  binio::write_u32(out, kSnapshotVersion);
  binio::write_u32(out, static_cast<std::uint32_t>(g.n()));
  binio::write_f64(out, g.box_length());
  binio::write_f64(out, snap.time);
  binio::write_f64(out, snap.gamma);
  for (const auto& c : snap.field.coeffs()) {
    binio::write_f64(out, c.real());
    binio::write_f64(out, c.imag());
  }
  if (!out) throw FormatError("failed to write snapshot");
}

Snapshot read_snapshot(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4)) throw FormatError("unexpected end of file");
  if (std::memcmp(magic, "QGSF", 4) != 0) throw FormatError("bad snapshot magic");
  const auto version = binio::read_u32(in);
  if (version != kSnapshotVersion) {
    throw FormatError("unsupported snapshot version " + std::to_string(version));
  }
  const auto n = binio::read_u32(in);
  if (n < 8 || n > (1u << 14) || (n & (n - 1)) != 0) {
    throw FormatError("bad grid size " + std::to_string(n));
  }
  const double box = binio::read_f64(in);
  const double time = binio::read_f64(in);
  const double gamma = binio::read_f64(in);
  Grid2D grid(static_cast<int>(n), box);
  std::vector<Complex> coeffs(grid.size());
  for (auto& c : coeffs) {
    const double re = binio::read_f64(in);
    const double im = binio::read_f64(in);
    c = Complex(re, im);
  }
  return Snapshot{SpectralField::from_coefficients(grid, std::move(coeffs)), time, gamma};
}

void save_snapshot(const std::string& path, const Snapshot& snap) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  write_snapshot(out, snap);
}

Snapshot load_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  return read_snapshot(in);
}

}  // namespace qg
