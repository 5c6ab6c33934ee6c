#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace netclosure {

/// Position of a point in its System's ground set. Index order is the
/// canonical order for every deterministic output.
struct NodeId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

using Edge = std::pair<NodeId, NodeId>;

/// Subset of one System's ground set.
///
/// A NodeSet remembers which System produced it; combining it with a set or
/// System of another origin throws UsageError. Copies of a System share the
/// origin, so sets stay valid across System copies.
class NodeSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  NodeSet() = default;

  std::size_t arity() const noexcept { return bits_.size(); }
  std::uint64_t owner() const noexcept { return owner_; }
  const Bits& bits() const noexcept { return bits_; }

  bool contains(NodeId v) const { return v.index < bits_.size() && bits_.test(v.index); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  NodeSet& insert(NodeId v);
  NodeSet& erase(NodeId v);

  bool is_subset_of(const NodeSet& other) const;
  bool intersects(const NodeSet& other) const;

  NodeSet& operator|=(const NodeSet& other);
  NodeSet& operator&=(const NodeSet& other);
  NodeSet& operator-=(const NodeSet& other);

  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.owner_ == b.owner_ && a.bits_ == b.bits_;
  }

  /// Members in index order.
  std::vector<NodeId> nodes() const;
  std::optional<NodeId> first() const;

  /// Canonical order: cardinality first, then lexicographic on sorted indices.
  friend bool canonical_less(const NodeSet& a, const NodeSet& b);

 private:
  friend class System;
  NodeSet(std::uint64_t owner, Bits bits) : owner_(owner), bits_(std::move(bits)) {}

  void check_compatible(const NodeSet& other) const;

  std::uint64_t owner_ = 0;
  Bits bits_;
};

/// A finite ground set with a directed, irreflexive adjacency relation.
/// Symmetric ties are stored as two arcs. Immutable once built.
class System {
 public:
  class Builder;

  System();

  std::size_t size() const noexcept { return labels().size(); }
  bool empty() const noexcept { return size() == 0; }

  const std::string& label(NodeId v) const;
  const std::vector<std::string>& labels() const noexcept { return impl_->labels; }
  std::optional<NodeId> find(std::string_view label) const;
  /// Throws UsageError naming the label when it is unknown.
  NodeId at(std::string_view label) const;
  std::vector<NodeId> nodes() const;

  bool has_arc(NodeId from, NodeId to) const;
  bool has_symmetric_edge(NodeId u, NodeId v) const { return has_arc(u, v) && has_arc(v, u); }
  bool adjacent_either(NodeId u, NodeId v) const { return has_arc(u, v) || has_arc(v, u); }

  /// Out-neighbors of v (the row of the adjacency relation).
  const NodeSet& row(NodeId v) const;

  /// All arcs in (from, to) index order.
  std::vector<Edge> arcs() const;
  /// Unordered pairs present in both directions, as (u, v) with u < v.
  std::vector<Edge> symmetric_edges() const;
  std::size_t arc_count() const noexcept { return impl_->arc_count; }

  NodeSet empty_set() const;
  NodeSet full_set() const;
  NodeSet singleton(NodeId v) const;
  NodeSet make_set(std::initializer_list<NodeId> members) const;
  NodeSet make_set(const std::vector<NodeId>& members) const;
  /// Throws UsageError on an unknown label.
  NodeSet make_set(const std::vector<std::string>& labels) const;
  /// Set whose members are the low bits of mask (requires size() <= 64).
  NodeSet from_mask(std::uint64_t mask) const;

  /// Throws UsageError unless y was created against this System (or a copy).
  void check(const NodeSet& y) const;
  bool owns(const NodeSet& y) const noexcept { return y.owner() == impl_->id; }

  /// Same labels in the same order and the same arcs.
  bool same_structure(const System& other) const;

  /// Copy with the given arcs removed (absent arcs are ignored).
  System without_arcs(const std::vector<Edge>& removed) const;
  /// Copy with the given arcs added.
  System with_arcs(const std::vector<Edge>& added) const;
  /// Copy without node v and its arcs; surviving nodes keep relative order.
  System without_node(NodeId v) const;
  /// Induced subsystem on `keep`, preserving relative order.
  System induced(const NodeSet& keep) const;

  std::uint64_t id() const noexcept { return impl_->id; }

 private:
  struct Impl {
    std::uint64_t id = 0;
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<NodeSet> rows;
    std::size_t arc_count = 0;
  };

  explicit System(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static System assemble(std::vector<std::string> labels, const std::vector<Edge>& arcs);

  std::shared_ptr<const Impl> impl_;
};

class System::Builder {
 public:
  /// Idempotent: re-declaring a label returns its existing id.
  NodeId add_node(std::string_view label);
  /// Adds both arcs. Self-loops throw ParseError.
  Builder& add_edge(std::string_view u, std::string_view v);
  Builder& add_arc(std::string_view from, std::string_view to);
  Builder& add_edge(NodeId u, NodeId v);
  Builder& add_arc(NodeId from, NodeId to);

  std::size_t size() const noexcept { return labels_.size(); }
  System build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<Edge> arcs_;
};

/// True when label is a nonempty run of printable, non-whitespace characters.
bool valid_label(std::string_view label);

std::string format_set(const System& s, const NodeSet& y);

}  // namespace netclosure
