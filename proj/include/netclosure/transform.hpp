#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netclosure/closure.hpp"
#include "netclosure/error.hpp"
#include "netclosure/system.hpp"

namespace netclosure {

/// Atomistic transformation between two systems: every source node either
/// survives as a distinct target node or is deleted. The image of a set is
/// the union of its members' images, so the empty set maps to the empty set.
class NodeMap {
 public:
  /// images[i] is the image of source node i, or nullopt when deleted.
  /// Throws UsageError on a size mismatch, an out-of-range image, or two
  /// source nodes sharing an image.
  NodeMap(System source, System target, std::vector<std::optional<NodeId>> images);

  /// Maps each source node to the target node with the same label; labels
  /// missing from the target are deleted.
  static NodeMap by_label(const System& source, const System& target);

  const System& source() const noexcept { return source_; }
  const System& target() const noexcept { return target_; }
  std::optional<NodeId> image(NodeId v) const;
  const std::vector<std::optional<NodeId>>& images() const noexcept { return images_; }

 private:
  System source_;
  System target_;
  std::vector<std::optional<NodeId>> images_;
};

NodeSet apply(const NodeMap& f, const NodeSet& y);

/// Always true: a union of node images cannot break inclusion. Kept so that
/// node maps and table transforms answer the same questions.
bool is_monotone(const NodeMap& f);

struct ContinuityVerdict {
  bool continuous = true;
  /// A violating source set Y, first in canonical order and then reduced by
  /// greedy element removal.
  std::optional<NodeSet> witness;
  /// A target node in closure(Y).f but not in closure'(Y.f).
  std::optional<NodeId> offending_element;
};

/// Tests closure(Y).f within closure'(Y.f) for every Y within the source.
ContinuityVerdict is_continuous(const NodeMap& f, std::size_t max_n = kDefaultMaxN);

/// Every closed target set is the image of some source set.
bool is_surjective(const NodeMap& f, std::size_t max_n = kDefaultMaxN);

/// Applies f, then g. Throws UsageError unless f's target and g's source
/// have the same structure.
NodeMap compose(const NodeMap& f, const NodeMap& g);

struct EdgeMutation {
  enum class Kind { Delete, Add };
  Kind kind = Kind::Delete;
  NodeId x;
  NodeId z;
  bool symmetric = true;
};

/// The mutated system. Deleting requires the arcs to be present, adding
/// requires them absent; violations throw UsageError.
System apply_mutation(const System& s, const EdgeMutation& m);

/// Identity map from s onto s with the mutation applied.
NodeMap mutation_map(const System& s, const EdgeMutation& m);

enum class DeletionVerdict { Continuous, DiscontinuousA, DiscontinuousB };
std::string_view to_string(DeletionVerdict v);

/// Single-edge deletion judged by the two closure/cycle clauses alone.
struct DeletionCheck {
  DeletionVerdict verdict = DeletionVerdict::Continuous;
  NodeSet closure_x;
  NodeSet closure_z;
  bool z_in_closure_x = false;
  bool x_in_closure_z = false;
  bool closures_equal = false;
  bool clause_a = false;
  std::size_t degree_x = 0;
  std::size_t degree_z = 0;
  /// Chordless cycle of length >= 4 through (x, z), when one exists and an
  /// endpoint has exactly two neighbors.
  std::optional<std::vector<NodeId>> cycle;
  bool clause_b = false;
};

/// Requires the symmetric edge (x, z); throws UsageError otherwise.
DeletionCheck check_edge_deletion(const System& s, NodeId x, NodeId z);

enum class Agreement { Agree, Mismatch, NotApplicable };
std::string_view to_string(Agreement a);

struct AdditionCheck {
  /// x and z share an out-neighbor, so the triadic claim predicts continuity.
  bool claim_applies = false;
  NodeSet common_neighbors;
  std::optional<ContinuityVerdict> oracle;
  Agreement agreement = Agreement::NotApplicable;
};

/// Requires x and z non-adjacent in both directions. When run_oracle is set
/// the exhaustive continuity test runs (subject to max_n).
AdditionCheck check_edge_addition(const System& s, NodeId x, NodeId z, bool run_oracle = true,
                                  std::size_t max_n = kDefaultMaxN);

/// Unordered non-adjacent pairs (x, z), x < z, that share an out-neighbor.
std::vector<Edge> triadic_candidates(const System& s);

}  // namespace netclosure
