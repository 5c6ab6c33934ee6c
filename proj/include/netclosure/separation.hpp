#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "netclosure/system.hpp"
#include "netclosure/transform.hpp"

namespace netclosure {

/// The four ways two regions can meet: X∩Z, X∩Z.η, X.η∩Z, X.η∩Z.η.
enum class Overlap { Cores, XWithZNeighbors, XNeighborsWithZ, Neighborhoods };
std::string_view to_string(Overlap o);

struct SeparationReport {
  bool separated = true;
  /// Indexed by Overlap; a witness node when that intersection is nonempty.
  std::array<std::optional<NodeId>, 4> overlaps;

  const std::optional<NodeId>& operator[](Overlap o) const {
    return overlaps[static_cast<std::size_t>(o)];
  }
};

/// X and Z are separated when their regions are disjoint.
SeparationReport are_separated(const System& s, const NodeSet& x, const NodeSet& z);

/// No split of y into two separated halves. Throws UsageError on an empty set.
bool is_connected_set(const System& s, const NodeSet& y);

/// Components of the symmetrized relation, ordered by their least node.
std::vector<NodeSet> connected_components(const System& s);

/// Reading of "sufficiently large" used by check_separation_preservation.
inline constexpr std::string_view kSufficientlyLargeHypothesis =
    "every member of X, Z and of their regions has a nonempty neighborhood in the source";

struct PreservationReport {
  bool hypothesis_holds = false;
  std::optional<NodeId> isolated_witness;
  NodeSet image_x;
  NodeSet image_z;
  SeparationReport image_separation;
  bool images_separated = false;
  /// Exhaustive continuity of f; nullopt when the source is too large.
  std::optional<bool> map_continuous;
  /// Set only when the hypothesis holds and f is continuous: true when the
  /// images are separated as predicted, false for a counterexample.
  std::optional<bool> confirms;
};

/// Requires x and z to be separated in f's source; throws UsageError otherwise.
PreservationReport check_separation_preservation(const NodeMap& f, const NodeSet& x,
                                                 const NodeSet& z,
                                                 std::size_t max_n = kDefaultMaxN);

}  // namespace netclosure
