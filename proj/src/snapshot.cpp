#include "obmhd/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "obmhd/error.hpp"

namespace obmhd {

namespace {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

constexpr char kMagic[4] = {'O', 'B', 'M', 'Q'};

void put_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }

std::uint32_t get_u32(std::istream& is) {
  std::uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), 4);
  if (!is) throw std::runtime_error("truncated snapshot header");
  return v;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\0')) s.pop_back();
  return s;
}

}  // namespace

const ScalarField& Snapshot::get(const std::string& name) const {
  for (const auto& [n, f] : fields)
    if (n == name) return f;
  throw std::out_of_range("snapshot has no field '" + name + "'");
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os.write(kMagic, 4);
  put_u32(os, kSnapshotVersion);
  put_u32(os, static_cast<std::uint32_t>(snap.grid.geometry()));
  put_u32(os, static_cast<std::uint32_t>(snap.grid.n1()));
  put_u32(os, static_cast<std::uint32_t>(snap.grid.n2()));
  put_u32(os, static_cast<std::uint32_t>(snap.grid.n3()));
  for (const auto& [name, f] : snap.fields) {
    if (name.empty() || name.size() > 8) throw DomainError("snapshot field names have 1 to 8 characters");
    if (f.grid() != snap.grid) throw DomainError("snapshot field '" + name + "' is on a different grid");
    char label[8];
    std::memset(label, ' ', 8);
    std::memcpy(label, name.data(), name.size());
    os.write(label, 8);
    os.write(reinterpret_cast<const char*>(f.data()), static_cast<std::streamsize>(f.size() * sizeof(double)));
  }
  if (!os) throw std::runtime_error("write to " + path + " failed");
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error(path + " is not a snapshot file");
  const std::uint32_t version = get_u32(is);
  if (version != kSnapshotVersion) throw std::runtime_error("unsupported snapshot version " + std::to_string(version));
  const std::uint32_t geom = get_u32(is);
  if (geom > 2) throw std::runtime_error("bad geometry tag in snapshot");
  const int n1 = static_cast<int>(get_u32(is));
  const int n2 = static_cast<int>(get_u32(is));
  const int n3 = static_cast<int>(get_u32(is));
  Snapshot snap{Grid(static_cast<Geometry>(geom), n1, n2, n3), {}};
  char label[8];
  while (is.read(label, 8)) {
    ScalarField f(snap.grid);
    is.read(reinterpret_cast<char*>(f.data()), static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!is) throw std::runtime_error("truncated field record in " + path);
    snap.fields.emplace_back(trim(std::string(label, 8)), std::move(f));
  }
  if (is.gcount() != 0) throw std::runtime_error("trailing bytes in " + path);
  return snap;
}

}  // namespace obmhd
