#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netclosure/closure.hpp"
#include "netclosure/system.hpp"
#include "netclosure/transform.hpp"

// Brute-force reference implementations. Everything here is computed from
// the definitions through System::has_arc alone; none of it goes through the
// accelerated paths it is used to audit.
namespace netclosure::oracle {

/// Region of a mask, straight from the arc relation.
Mask region(const System& s, Mask y);
/// {x : region({x}) within region(Y)}, straight from the definition.
Mask closure(const System& s, Mask y);

/// Closure of every subset, indexed by mask. Requires |P| <= 20.
std::vector<Mask> closure_table(const System& s);

/// An arbitrary map from every subset of the source to a target subset.
/// No structure is assumed: it may break monotonicity or atomisticity.
class TableTransform {
 public:
  /// table.size() must be 2^|source|; entries must fit the target.
  TableTransform(System source, System target, std::vector<Mask> table);
  static TableTransform from_node_map(const NodeMap& f);

  const System& source() const noexcept { return source_; }
  const System& target() const noexcept { return target_; }
  Mask operator()(Mask y) const { return table_.at(y); }
  const std::vector<Mask>& table() const noexcept { return table_; }

 private:
  System source_;
  System target_;
  std::vector<Mask> table_;
};

struct MonotoneVerdict {
  bool monotone = true;
  std::optional<NodeSet> smaller;
  std::optional<NodeSet> larger;
};

/// Every pair X within Y (3^n pairs). Requires |P| <= 10.
MonotoneVerdict is_monotone(const TableTransform& f);

/// Definitional continuity: closure(Y).f within closure'(Y.f) for all Y.
/// The witness is the first violating set in canonical order.
ContinuityVerdict continuous(const TableTransform& f, std::size_t max_n = 20);
ContinuityVerdict continuous(const NodeMap& f, std::size_t max_n = 20);

/// All labelled graphs on v0..v(n-1), in increasing order of their edge
/// bitmask. Symmetric: one bit per unordered pair (n <= 6). Directed: one
/// bit per ordered pair (n <= 4).
class GraphEnumerator {
 public:
  GraphEnumerator(std::size_t n, bool symmetric_only);

  std::uint64_t count() const noexcept { return count_; }
  std::optional<System> next();

 private:
  std::size_t n_;
  bool symmetric_;
  std::vector<Edge> slots_;
  std::vector<std::string> labels_;
  std::uint64_t count_ = 0;
  std::uint64_t cursor_ = 0;
};

/// Compact single-line encoding that rebuilds the instance: "n=3;v0--v1,v1->v2".
std::string encode_instance(const System& s);

struct AuditFinding {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string observed;
  std::string witness;
  /// The instance has at least one one-way arc.
  bool directed = false;
};

struct ClaimSummary {
  std::string claim;
  std::string statement;
  std::uint64_t instances = 0;
  std::uint64_t findings = 0;
  std::uint64_t symmetric_findings = 0;
};

struct AuditReport {
  std::size_t max_n = 0;
  std::vector<ClaimSummary> claims;
  std::vector<AuditFinding> findings;

  const ClaimSummary* claim(std::string_view id) const;
};

/// Instantiates every audited claim over all graphs up to max_n nodes
/// (max_n <= 6) and reports each instance where the definitions disagree
/// with the claim. Deterministic.
AuditReport audit(std::size_t max_n);

}  // namespace netclosure::oracle
