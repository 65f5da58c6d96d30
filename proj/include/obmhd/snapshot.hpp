#pragma once

// Binary field snapshots: "OBMQ", u32 version, u32 geometry, u32 n1, n2,
// n3, then any number of (8-byte ASCII name, n little-endian doubles)
// records until end of file.

#include <string>
#include <utility>
#include <vector>

#include "obmhd/fields.hpp"

namespace obmhd {

inline constexpr std::uint32_t kSnapshotVersion = 1;

struct Snapshot {
  Grid grid;
  std::vector<std::pair<std::string, ScalarField>> fields;

  /// Throws std::out_of_range if no field has that name.
  const ScalarField& get(const std::string& name) const;
};

/// Names longer than 8 bytes are rejected; shorter ones are space padded.
void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

}  // namespace obmhd
