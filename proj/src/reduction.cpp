#include "netclosure/reduction.hpp"

#include <algorithm>
#include <functional>

#include "netclosure/closure.hpp"

namespace netclosure {

std::vector<Subsumption> subsumed_pairs(const System& s) {
  std::vector<NodeSet> regions;
  regions.reserve(s.size());
  for (auto v : s.nodes()) regions.push_back(region(s, v));
  std::vector<Subsumption> out;
  for (auto y : s.nodes())
    for (auto x : s.nodes())
      if (x != y && regions[y.index].is_subset_of(regions[x.index])) out.push_back({y, x});
  return out;
}

bool is_irreducible(const System& s) {
  const auto nodes = s.nodes();
  return std::all_of(nodes.begin(), nodes.end(),
                     [&](NodeId v) { return closure(s, v) == s.singleton(v); });
}

ReductionTrace reduce(const System& s) {
  ReductionTrace trace;
  trace.core_nodes = s.full_set();
  trace.core = s;
  while (true) {
    // Induced order matches original order, so current index i is the i-th
    // surviving original node.
    const auto original = trace.core_nodes.nodes();
    const auto pairs = subsumed_pairs(trace.core);
    if (pairs.empty()) break;
    const auto& step = pairs.front();
    trace.steps.push_back({original[step.subsumed.index], original[step.subsumer.index]});
    trace.core_nodes.erase(original[step.subsumed.index]);
    trace.core = s.induced(trace.core_nodes);
  }
  return trace;
}

namespace {

// Marks interior vertices of induced paths (symmetrized adjacency) that run
// from a cycle vertex through non-cycle vertices to a vertex on another cycle.
class BridgePathSearch {
 public:
  BridgePathSearch(const System& s, const std::vector<KCycle>& cycles)
      : s_(s), membership_(s.size()), on_path_(s.size(), false), marked_(s.empty_set()) {
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (auto v : cycles[c].vertices) membership_[v.index].push_back(c);
  }

  NodeSet run() {
    for (auto u : s_.nodes()) {
      if (membership_[u.index].empty()) continue;
      path_ = {u};
      on_path_[u.index] = true;
      extend();
      on_path_[u.index] = false;
    }
    return marked_;
  }

 private:
  bool on_cycle(NodeId v) const { return !membership_[v.index].empty(); }

  // Some cycle through u differs from some cycle through v.
  bool distinct_cycles(NodeId u, NodeId v) const {
    const auto& a = membership_[u.index];
    const auto& b = membership_[v.index];
    return std::any_of(a.begin(), a.end(), [&](std::size_t i) {
      return std::any_of(b.begin(), b.end(), [&](std::size_t j) { return i != j; });
    });
  }

  void extend() {
    const NodeId tail = path_.back();
    for (auto w : s_.nodes()) {
      if (on_path_[w.index] || !s_.adjacent_either(tail, w)) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path_.size(); ++i) {
        if (s_.adjacent_either(w, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (on_cycle(w)) {
        if (path_.size() >= 2 && distinct_cycles(path_.front(), w))
          for (std::size_t i = 1; i < path_.size(); ++i) marked_.insert(path_[i]);
        continue;
      }
      path_.push_back(w);
      on_path_[w.index] = true;
      extend();
      on_path_[w.index] = false;
      path_.pop_back();
    }
  }

  const System& s_;
  std::vector<std::vector<std::size_t>> membership_;
  std::vector<bool> on_path_;
  std::vector<NodeId> path_;
  NodeSet marked_;
};

}  // namespace

CharacterizationReport characterization_check(const System& s, std::size_t max_n) {
  require_enumerable(s.size(), max_n, "characterization check");
  CharacterizationReport report;
  report.core_nodes = reduce(s).core_nodes;

  const auto listing = chordless_cycles(s, 4, 0, kDefaultCycleLimit);
  report.cycles_truncated = listing.truncated;
  report.cycle_nodes = s.empty_set();
  for (const auto& c : listing.cycles)
    for (auto v : c.vertices) report.cycle_nodes.insert(v);

  report.path_nodes = BridgePathSearch(s, listing.cycles).run();
  report.predicted = report.cycle_nodes | report.path_nodes;
  report.core_only = report.core_nodes - report.predicted;
  report.predicted_only = report.predicted - report.core_nodes;
  return report;
}

}  // namespace netclosure
