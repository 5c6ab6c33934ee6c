#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netclosure/system.hpp"

namespace netclosure {

/// A chordless cycle through symmetric edges, in canonical form: starts at
/// its least index and continues toward the smaller of the two neighbors.
struct KCycle {
  std::vector<NodeId> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend auto operator<=>(const KCycle&, const KCycle&) = default;
};

/// Rotates and reflects a cycle into canonical form.
KCycle canonical_cycle(std::vector<NodeId> vertices);

/// Consecutive vertices joined by symmetric edges, no arc in either
/// direction between non-consecutive vertices, length >= 3, no repeats.
bool is_chordless_cycle(const System& s, const std::vector<NodeId>& vertices);

struct CycleListing {
  std::vector<KCycle> cycles;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultCycleLimit = 10000;

/// All chordless cycles with min_len <= length <= max_len (max_len 0 means
/// |P|), deduplicated and sorted. Stops after `limit` cycles and flags it.
CycleListing chordless_cycles(const System& s, std::size_t min_len = 4, std::size_t max_len = 0,
                              std::size_t limit = kDefaultCycleLimit);

/// Some chordless cycle of length within [min_len, max_len] that uses the
/// symmetric edge (x, z), or nullopt. Vertices start with x, z.
std::optional<std::vector<NodeId>> chordless_cycle_through(const System& s, NodeId x, NodeId z,
                                                           std::size_t min_len = 4,
                                                           std::size_t max_len = 0);

}  // namespace netclosure
