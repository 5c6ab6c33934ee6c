#include "netclosure/transform.hpp"

#include <algorithm>

#include "netclosure/cycles.hpp"

namespace netclosure {

NodeMap::NodeMap(System source, System target, std::vector<std::optional<NodeId>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw UsageError("node map must give an image for every source node");
  std::vector<bool> used(target_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!images_[i]) continue;
    const auto t = images_[i]->index;
    if (t >= target_.size()) throw UsageError("node map image out of range");
    if (used[t])
      throw UsageError("node map is not injective: two source nodes map to '" +
                       target_.label(*images_[i]) + "'");
    used[t] = true;
  }
}

NodeMap NodeMap::by_label(const System& source, const System& target) {
  std::vector<std::optional<NodeId>> images;
  images.reserve(source.size());
  for (auto v : source.nodes()) images.push_back(target.find(source.label(v)));
  return NodeMap(source, target, std::move(images));
}

std::optional<NodeId> NodeMap::image(NodeId v) const {
  if (v.index >= images_.size()) throw UsageError("node index out of range");
  return images_[v.index];
}

NodeSet apply(const NodeMap& f, const NodeSet& y) {
  f.source().check(y);
  auto out = f.target().empty_set();
  for (auto v : y.nodes())
    if (auto img = f.image(v)) out.insert(*img);
  return out;
}

bool is_monotone(const NodeMap&) { return true; }

namespace {

struct MaskedMap {
  explicit MaskedMap(const NodeMap& f) : images(f.source().size(), 0) {
    for (auto v : f.source().nodes())
      if (auto img = f.image(v)) images[v.index] = Mask{1} << img->index;
  }

  Mask operator()(Mask y) const noexcept {
    Mask out = 0;
    for (Mask m = y; m; m &= m - 1) out |= images[static_cast<std::size_t>(__builtin_ctzll(m))];
    return out;
  }

  std::vector<Mask> images;
};

bool violates(const RegionTable& src, const RegionTable& dst, const MaskedMap& f, Mask y) {
  return (f(src.closure(y)) & ~dst.closure(f(y))) != 0;
}

}  // namespace

ContinuityVerdict is_continuous(const NodeMap& f, std::size_t max_n) {
  require_enumerable(f.source().size(), max_n, "continuity check");
  if (f.target().size() > 64) throw SizeError("continuity check target", f.target().size(), 64);
  const RegionTable src(f.source());
  const RegionTable dst(f.target());
  const MaskedMap map(f);

  std::optional<Mask> first;
  for_each_subset_canonical(f.source().size(), [&](Mask y) {
    if (!violates(src, dst, map, y)) return true;
    first = y;
    return false;
  });

  ContinuityVerdict verdict;
  if (!first) return verdict;

  Mask y = *first;
  for (std::size_t v = 0; v < f.source().size(); ++v) {
    const Mask smaller = y & ~(Mask{1} << v);
    if (smaller != y && violates(src, dst, map, smaller)) y = smaller;
  }
  verdict.continuous = false;
  verdict.witness = f.source().from_mask(y);
  const Mask extra = map(src.closure(y)) & ~dst.closure(map(y));
  verdict.offending_element = NodeId{static_cast<std::uint32_t>(__builtin_ctzll(extra))};
  return verdict;
}

bool is_surjective(const NodeMap& f, std::size_t max_n) {
  const auto closed = closed_masks(f.target(), max_n);
  const Mask image = MaskedMap(f)(RegionTable(f.source()).full());
  return std::all_of(closed.begin(), closed.end(), [&](Mask y) { return (y & ~image) == 0; });
}

NodeMap compose(const NodeMap& f, const NodeMap& g) {
  if (!f.target().same_structure(g.source()))
    throw UsageError("cannot compose: first map's target is not the second map's source");
  std::vector<std::optional<NodeId>> images;
  images.reserve(f.source().size());
  for (auto v : f.source().nodes()) {
    auto mid = f.image(v);
    images.push_back(mid ? g.image(*mid) : std::nullopt);
  }
  return NodeMap(f.source(), g.target(), std::move(images));
}

System apply_mutation(const System& s, const EdgeMutation& m) {
  if (m.x == m.z) throw UsageError("edge mutation needs two distinct endpoints");
  std::vector<Edge> arcs{{m.x, m.z}};
  if (m.symmetric) arcs.emplace_back(m.z, m.x);
  for (auto [u, v] : arcs) {
    if (u.index >= s.size() || v.index >= s.size()) throw UsageError("edge endpoint out of range");
    const bool present = s.has_arc(u, v);
    if (m.kind == EdgeMutation::Kind::Delete && !present)
      throw UsageError("arc " + s.label(u) + " -> " + s.label(v) + " is not present");
    if (m.kind == EdgeMutation::Kind::Add && present)
      throw UsageError("arc " + s.label(u) + " -> " + s.label(v) + " is already present");
  }
  return m.kind == EdgeMutation::Kind::Delete ? s.without_arcs(arcs) : s.with_arcs(arcs);
}

NodeMap mutation_map(const System& s, const EdgeMutation& m) {
  auto target = apply_mutation(s, m);
  std::vector<std::optional<NodeId>> images;
  for (auto v : s.nodes()) images.emplace_back(v);
  return NodeMap(s, std::move(target), std::move(images));
}

std::string_view to_string(DeletionVerdict v) {
  switch (v) {
    case DeletionVerdict::Continuous: return "CONTINUOUS";
    case DeletionVerdict::DiscontinuousA: return "DISCONTINUOUS_A";
    case DeletionVerdict::DiscontinuousB: return "DISCONTINUOUS_B";
  }
  return "?";
}

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "AGREE";
    case Agreement::Mismatch: return "MISMATCH";
    case Agreement::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

DeletionCheck check_edge_deletion(const System& s, NodeId x, NodeId z) {
  if (x.index >= s.size() || z.index >= s.size() || !s.has_symmetric_edge(x, z))
    throw UsageError("check_edge_deletion needs a symmetric edge");
  DeletionCheck c;
  c.closure_x = closure(s, x);
  c.closure_z = closure(s, z);
  c.z_in_closure_x = c.closure_x.contains(z);
  c.x_in_closure_z = c.closure_z.contains(x);
  c.closures_equal = c.closure_x == c.closure_z;
  c.clause_a = (c.z_in_closure_x || c.x_in_closure_z) && !c.closures_equal;

  c.degree_x = s.row(x).size();
  c.degree_z = s.row(z).size();
  if (c.degree_x == 2 || c.degree_z == 2) {
    c.cycle = chordless_cycle_through(s, x, z, 4);
    c.clause_b = c.cycle.has_value();
  }

  if (c.clause_a)
    c.verdict = DeletionVerdict::DiscontinuousA;
  else if (c.clause_b)
    c.verdict = DeletionVerdict::DiscontinuousB;
  return c;
}

AdditionCheck check_edge_addition(const System& s, NodeId x, NodeId z, bool run_oracle,
                                  std::size_t max_n) {
  if (x.index >= s.size() || z.index >= s.size() || x == z)
    throw UsageError("check_edge_addition needs two distinct nodes");
  if (s.adjacent_either(x, z))
    throw UsageError("check_edge_addition needs " + s.label(x) + " and " + s.label(z) +
                     " to be non-adjacent");
  AdditionCheck c;
  c.common_neighbors = s.row(x) & s.row(z);
  c.claim_applies = !c.common_neighbors.empty();
  if (run_oracle) {
    c.oracle = is_continuous(mutation_map(s, {EdgeMutation::Kind::Add, x, z, true}), max_n);
    if (c.claim_applies) c.agreement = c.oracle->continuous ? Agreement::Agree : Agreement::Mismatch;
  }
  return c;
}

std::vector<Edge> triadic_candidates(const System& s) {
  std::vector<Edge> out;
  for (auto x : s.nodes())
    for (auto z : s.nodes())
      if (x < z && !s.adjacent_either(x, z) && s.row(x).intersects(s.row(z))) out.emplace_back(x, z);
  return out;
}

}  // namespace netclosure
