#include "netclosure/system.hpp"

#include <algorithm>
#include <atomic>

#include "netclosure/error.hpp"

namespace netclosure {

namespace {

std::uint64_t next_system_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

void require_enumerable(std::size_t n, std::size_t limit, const char* what) {
  if (limit > kHardMaxN) throw SizeError(what, n, kHardMaxN);
  if (n > limit) throw SizeError(what, n, limit);
}

// ---------------------------------------------------------------- NodeSet

void NodeSet::check_compatible(const NodeSet& other) const {
  if (owner_ != other.owner_ || bits_.size() != other.bits_.size())
    throw UsageError("node sets belong to different systems");
}

NodeSet& NodeSet::insert(NodeId v) {
  if (v.index >= bits_.size()) throw UsageError("node index out of range");
  bits_.set(v.index);
  return *this;
}

NodeSet& NodeSet::erase(NodeId v) {
  if (v.index >= bits_.size()) throw UsageError("node index out of range");
  bits_.reset(v.index);
  return *this;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  check_compatible(other);
  return bits_.is_subset_of(other.bits_);
}

bool NodeSet::intersects(const NodeSet& other) const {
  check_compatible(other);
  return bits_.intersects(other.bits_);
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  check_compatible(other);
  bits_ |= other.bits_;
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  check_compatible(other);
  bits_ &= other.bits_;
  return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& other) {
  check_compatible(other);
  bits_ -= other.bits_;
  return *this;
}

std::vector<NodeId> NodeSet::nodes() const {
  std::vector<NodeId> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
    out.push_back(NodeId{static_cast<std::uint32_t>(i)});
  return out;
}

std::optional<NodeId> NodeSet::first() const {
  auto i = bits_.find_first();
  if (i == Bits::npos) return std::nullopt;
  return NodeId{static_cast<std::uint32_t>(i)};
}

bool canonical_less(const NodeSet& a, const NodeSet& b) {
  const auto ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  auto i = a.bits_.find_first();
  auto j = b.bits_.find_first();
  while (i != NodeSet::Bits::npos && j != NodeSet::Bits::npos) {
    if (i != j) return i < j;
    i = a.bits_.find_next(i);
    j = b.bits_.find_next(j);
  }
  return false;
}

// ----------------------------------------------------------------- System

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  if (label == "--" || label == "->" || label == "=>" || label == "!") return false;
  if (label.front() == '#') return false;
  for (unsigned char c : label) {
    if (c <= 0x20 || c == 0x7f || c == ',') return false;
  }
  return true;
}

System::System() : System(assemble({}, {})) {}

System System::assemble(std::vector<std::string> labels, const std::vector<Edge>& arcs) {
  auto impl = std::make_shared<Impl>();
  impl->id = next_system_id();
  const auto n = labels.size();
  for (std::uint32_t i = 0; i < n; ++i) impl->index.emplace(labels[i], i);
  impl->labels = std::move(labels);
  impl->rows.assign(n, NodeSet(impl->id, NodeSet::Bits(n)));
  for (auto [u, v] : arcs) {
    if (u == v) throw ParseError("self-loop on node '" + impl->labels[u.index] + "'");
    auto& bits = impl->rows[u.index].bits_;
    if (!bits.test(v.index)) {
      bits.set(v.index);
      ++impl->arc_count;
    }
  }
  return System(std::move(impl));
}

const std::string& System::label(NodeId v) const {
  if (v.index >= size()) throw UsageError("node index out of range");
  return impl_->labels[v.index];
}

std::optional<NodeId> System::find(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return NodeId{it->second};
}

NodeId System::at(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw UsageError("unknown node '" + std::string(label) + "'");
}

std::vector<NodeId> System::nodes() const {
  std::vector<NodeId> out(size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = NodeId{i};
  return out;
}

bool System::has_arc(NodeId from, NodeId to) const {
  return from.index < size() && to.index < size() && impl_->rows[from.index].bits_.test(to.index);
}

const NodeSet& System::row(NodeId v) const {
  if (v.index >= size()) throw UsageError("node index out of range");
  return impl_->rows[v.index];
}

std::vector<Edge> System::arcs() const {
  std::vector<Edge> out;
  out.reserve(arc_count());
  for (auto u : nodes())
    for (auto v : impl_->rows[u.index].nodes()) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> System::symmetric_edges() const {
  std::vector<Edge> out;
  for (auto u : nodes())
    for (auto v : impl_->rows[u.index].nodes())
      if (u < v && has_arc(v, u)) out.emplace_back(u, v);
  return out;
}

NodeSet System::empty_set() const { return NodeSet(impl_->id, NodeSet::Bits(size())); }

NodeSet System::full_set() const {
  NodeSet::Bits bits(size());
  bits.set();
  return NodeSet(impl_->id, std::move(bits));
}

NodeSet System::singleton(NodeId v) const { return empty_set().insert(v); }

NodeSet System::make_set(std::initializer_list<NodeId> members) const {
  return make_set(std::vector<NodeId>(members));
}

NodeSet System::make_set(const std::vector<NodeId>& members) const {
  auto y = empty_set();
  for (auto v : members) y.insert(v);
  return y;
}

NodeSet System::make_set(const std::vector<std::string>& labels) const {
  auto y = empty_set();
  for (const auto& l : labels) y.insert(at(l));
  return y;
}

NodeSet System::from_mask(std::uint64_t mask) const {
  if (size() > 64) throw UsageError("mask conversion requires at most 64 nodes");
  if (size() < 64 && (mask >> size()) != 0) throw UsageError("mask has bits outside the ground set");
  NodeSet::Bits bits(size());
  for (std::size_t i = 0; i < size(); ++i)
    if ((mask >> i) & 1U) bits.set(i);
  return NodeSet(impl_->id, std::move(bits));
}

void System::check(const NodeSet& y) const {
  if (!owns(y) || y.arity() != size()) throw UsageError("node set belongs to a different system");
}

bool System::same_structure(const System& other) const {
  if (labels() != other.labels()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (impl_->rows[i].bits_ != other.impl_->rows[i].bits_) return false;
  return true;
}

System System::without_arcs(const std::vector<Edge>& removed) const {
  auto kept = arcs();
  std::erase_if(kept, [&](const Edge& e) {
    return std::find(removed.begin(), removed.end(), e) != removed.end();
  });
  return assemble(labels(), kept);
}

System System::with_arcs(const std::vector<Edge>& added) const {
  auto all = arcs();
  for (auto e : added) {
    if (e.first.index >= size() || e.second.index >= size())
      throw UsageError("arc endpoint out of range");
    all.push_back(e);
  }
  return assemble(labels(), all);
}

System System::without_node(NodeId v) const {
  auto keep = full_set();
  keep.erase(v);
  return induced(keep);
}

System System::induced(const NodeSet& keep) const {
  check(keep);
  std::vector<std::string> labels;
  std::vector<std::uint32_t> remap(size(), UINT32_MAX);
  for (auto v : keep.nodes()) {
    remap[v.index] = static_cast<std::uint32_t>(labels.size());
    labels.push_back(label(v));
  }
  std::vector<Edge> kept;
  for (auto [u, v] : arcs())
    if (remap[u.index] != UINT32_MAX && remap[v.index] != UINT32_MAX)
      kept.emplace_back(NodeId{remap[u.index]}, NodeId{remap[v.index]});
  return assemble(std::move(labels), kept);
}

// ---------------------------------------------------------------- Builder

NodeId System::Builder::add_node(std::string_view label) {
  if (!valid_label(label)) throw ParseError("invalid node label '" + std::string(label) + "'");
  auto [it, inserted] =
      index_.emplace(std::string(label), static_cast<std::uint32_t>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return NodeId{it->second};
}

System::Builder& System::Builder::add_edge(std::string_view u, std::string_view v) {
  const auto a = add_node(u);
  return add_edge(a, add_node(v));
}

System::Builder& System::Builder::add_arc(std::string_view from, std::string_view to) {
  const auto a = add_node(from);
  return add_arc(a, add_node(to));
}

System::Builder& System::Builder::add_edge(NodeId u, NodeId v) {
  add_arc(u, v);
  return add_arc(v, u);
}

System::Builder& System::Builder::add_arc(NodeId from, NodeId to) {
  if (from.index >= labels_.size() || to.index >= labels_.size())
    throw UsageError("arc endpoint not declared");
  if (from == to) throw ParseError("self-loop on node '" + labels_[from.index] + "'");
  arcs_.emplace_back(from, to);
  return *this;
}

System System::Builder::build() const { return assemble(labels_, arcs_); }

std::string format_set(const System& s, const NodeSet& y) {
  s.check(y);
  std::string out = "{";
  bool first = true;
  for (auto v : y.nodes()) {
    if (!first) out += ',';
    out += s.label(v);
    first = false;
  }
  return out + "}";
}

}  // namespace netclosure
