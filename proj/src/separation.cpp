#include "netclosure/separation.hpp"

#include <numeric>

#include "netclosure/closure.hpp"

namespace netclosure {

std::string_view to_string(Overlap o) {
  switch (o) {
    case Overlap::Cores: return "X&Z";
    case Overlap::XWithZNeighbors: return "X&Z.eta";
    case Overlap::XNeighborsWithZ: return "X.eta&Z";
    case Overlap::Neighborhoods: return "X.eta&Z.eta";
  }
  return "?";
}

SeparationReport are_separated(const System& s, const NodeSet& x, const NodeSet& z) {
  s.check(x);
  s.check(z);
  const auto xn = neighborhood(s, x);
  const auto zn = neighborhood(s, z);
  SeparationReport report;
  const std::array<NodeSet, 4> meets{x & z, x & zn, xn & z, xn & zn};
  for (std::size_t i = 0; i < meets.size(); ++i) {
    report.overlaps[i] = meets[i].first();
    if (report.overlaps[i]) report.separated = false;
  }
  return report;
}

bool is_connected_set(const System& s, const NodeSet& y) {
  s.check(y);
  if (y.empty()) throw UsageError("connectivity of the empty set is undefined");
  // Region(X) is the union of its members' regions, so a separated split
  // exists exactly when the "regions meet" graph on y is disconnected.
  const auto members = y.nodes();
  std::vector<NodeSet> regions;
  regions.reserve(members.size());
  for (auto v : members) regions.push_back(region(s, v));

  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t components = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!regions[i].intersects(regions[j])) continue;
      const auto a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

std::vector<NodeSet> connected_components(const System& s) {
  std::vector<NodeSet> out;
  NodeSet seen = s.empty_set();
  for (auto start : s.nodes()) {
    if (seen.contains(start)) continue;
    NodeSet comp = s.singleton(start);
    std::vector<NodeId> stack{start};
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : s.nodes())
        if (!comp.contains(w) && s.adjacent_either(v, w)) {
          comp.insert(w);
          stack.push_back(w);
        }
    }
    seen = seen | comp;
    out.push_back(std::move(comp));
  }
  return out;
}

PreservationReport check_separation_preservation(const NodeMap& f, const NodeSet& x,
                                                 const NodeSet& z, std::size_t max_n) {
  const auto& src = f.source();
  if (!are_separated(src, x, z).separated)
    throw UsageError("separation preservation needs separated inputs");

  PreservationReport report;
  report.hypothesis_holds = true;
  for (auto v : (region(src, x) | region(src, z)).nodes()) {
    if (src.row(v).empty()) {
      report.hypothesis_holds = false;
      report.isolated_witness = v;
      break;
    }
  }
  report.image_x = apply(f, x);
  report.image_z = apply(f, z);
  report.image_separation = are_separated(f.target(), report.image_x, report.image_z);
  report.images_separated = report.image_separation.separated;
  if (src.size() <= max_n) report.map_continuous = is_continuous(f, max_n).continuous;
  if (report.hypothesis_holds && report.map_continuous.value_or(false))
    report.confirms = report.images_separated;
  return report;
}

}  // namespace netclosure
