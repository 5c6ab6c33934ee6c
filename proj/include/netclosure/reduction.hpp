#pragma once

#include <string_view>
#include <vector>

#include "netclosure/cycles.hpp"
#include "netclosure/error.hpp"
#include "netclosure/system.hpp"

namespace netclosure {

/// `subsumed` lies in the closure of {subsumer}: its region is inside the
/// subsumer's region.
struct Subsumption {
  NodeId subsumed;
  NodeId subsumer;

  friend auto operator<=>(const Subsumption&, const Subsumption&) = default;
};

/// All ordered pairs, sorted by subsumed node then subsumer.
std::vector<Subsumption> subsumed_pairs(const System& s);

/// Every singleton is closed.
bool is_irreducible(const System& s);

struct ReductionTrace {
  /// Deletions in order, in the input System's node ids.
  std::vector<Subsumption> steps;
  System core;
  /// Surviving nodes as a set of the input System.
  NodeSet core_nodes;
};

/// Deletes the least subsumed node (ties broken by least subsumer) with its
/// arcs, recomputing subsumption after every deletion, until irreducible.
ReductionTrace reduce(const System& s);

/// How "a path between two k-cycles" is read by characterization_check.
inline constexpr std::string_view kPathReading =
    "interior vertices of induced paths in the symmetrized graph that avoid k-cycle "
    "vertices and join a vertex of one k-cycle to a vertex of a different k-cycle";

struct CharacterizationReport {
  NodeSet core_nodes;
  NodeSet cycle_nodes;
  NodeSet path_nodes;
  /// cycle_nodes together with path_nodes.
  NodeSet predicted;
  NodeSet core_only;
  NodeSet predicted_only;
  bool cycles_truncated = false;

  bool pass() const { return core_only.empty() && predicted_only.empty(); }
};

/// Compares the reduction core with the k-cycle prediction, both computed
/// independently on s.
CharacterizationReport characterization_check(const System& s, std::size_t max_n = kDefaultMaxN);

}  // namespace netclosure
