#include "netclosure/cycles.hpp"

#include <algorithm>
#include <functional>

namespace netclosure {

KCycle canonical_cycle(std::vector<NodeId> vertices) {
  if (vertices.size() < 3) return KCycle{std::move(vertices)};
  const auto n = vertices.size();
  const auto start = static_cast<std::size_t>(
      std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  std::vector<NodeId> forward, backward;
  for (std::size_t i = 0; i < n; ++i) {
    forward.push_back(vertices[(start + i) % n]);
    backward.push_back(vertices[(start + n - i) % n]);
  }
  return KCycle{std::min(forward, backward)};
}

bool is_chordless_cycle(const System& s, const std::vector<NodeId>& vertices) {
  const auto n = vertices.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i].index >= s.size()) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (consecutive) {
        if (!s.has_symmetric_edge(vertices[i], vertices[j])) return false;
      } else if (s.adjacent_either(vertices[i], vertices[j])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Grows induced paths from path.front(); `close` is offered every neighbor
// of the path's tail that can complete a cycle back to the front and returns
// false to stop the search. `admit` filters candidate extensions.
class InducedPathSearch {
 public:
  using Close = std::function<bool(const std::vector<NodeId>&)>;
  using Admit = std::function<bool(NodeId)>;

  InducedPathSearch(const System& s, std::size_t min_len, std::size_t max_len, Admit admit,
                    Close close)
      : s_(s),
        min_len_(min_len),
        max_len_(max_len),
        admit_(std::move(admit)),
        close_(std::move(close)),
        on_path_(s.size(), false) {}

  // Returns false when the search was stopped.
  bool run(std::vector<NodeId> path) {
    path_ = std::move(path);
    for (auto v : path_) on_path_[v.index] = true;
    const bool done = extend();
    for (auto v : path_) on_path_[v.index] = false;
    return done;
  }

 private:
  bool extend() {
    const NodeId front = path_.front();
    const NodeId tail = path_.back();
    for (auto u : s_.row(tail).nodes()) {
      if (on_path_[u.index] || !s_.has_arc(u, tail) || !admit_(u)) continue;
      // No arc between u and any interior path vertex other than the tail.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (s_.adjacent_either(u, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      const std::size_t len = path_.size() + 1;
      if (path_.size() >= 2 && s_.adjacent_either(u, front)) {
        // u can only be the last vertex of a cycle.
        if (s_.has_symmetric_edge(u, front) && len >= min_len_ && len <= max_len_) {
          path_.push_back(u);
          const bool keep_going = close_(path_);
          path_.pop_back();
          if (!keep_going) return false;
        }
        continue;
      }
      if (len >= max_len_) continue;
      path_.push_back(u);
      on_path_[u.index] = true;
      const bool keep_going = extend();
      on_path_[u.index] = false;
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const System& s_;
  std::size_t min_len_;
  std::size_t max_len_;
  Admit admit_;
  Close close_;
  std::vector<bool> on_path_;
  std::vector<NodeId> path_;
};

}  // namespace

CycleListing chordless_cycles(const System& s, std::size_t min_len, std::size_t max_len,
                              std::size_t limit) {
  CycleListing out;
  if (max_len == 0 || max_len > s.size()) max_len = s.size();
  min_len = std::max<std::size_t>(min_len, 3);
  if (min_len > max_len) return out;

  for (auto start : s.nodes()) {
    InducedPathSearch search(
        s, min_len, max_len, [start](NodeId u) { return start < u; },
        [&](const std::vector<NodeId>& cycle) {
          // Each cycle is met twice from its least vertex; keep one direction.
          if (!(cycle[1] < cycle.back())) return true;
          if (!is_chordless_cycle(s, cycle)) return true;
          if (out.cycles.size() == limit) {
            out.truncated = true;
            return false;
          }
          out.cycles.push_back(KCycle{cycle});
          return true;
        });
    if (!search.run({start})) break;
  }
  std::sort(out.cycles.begin(), out.cycles.end(), [](const KCycle& a, const KCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

std::optional<std::vector<NodeId>> chordless_cycle_through(const System& s, NodeId x, NodeId z,
                                                           std::size_t min_len,
                                                           std::size_t max_len) {
  if (!s.has_symmetric_edge(x, z)) return std::nullopt;
  if (max_len == 0 || max_len > s.size()) max_len = s.size();
  min_len = std::max<std::size_t>(min_len, 3);
  if (min_len > max_len) return std::nullopt;

  std::optional<std::vector<NodeId>> found;
  InducedPathSearch search(
      s, min_len, max_len, [](NodeId) { return true; },
      [&](const std::vector<NodeId>& cycle) {
        if (!is_chordless_cycle(s, cycle)) return true;
        found = cycle;
        return false;
      });
  search.run({x, z});
  return found;
}

}  // namespace netclosure
