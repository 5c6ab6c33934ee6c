#pragma once

#include <random>
#include <string>

#include "netclosure/io.hpp"
#include "netclosure/system.hpp"

namespace testing {

inline netclosure::NodeSet set(const netclosure::System& s, const std::string& labels) {
  return s.make_set(netclosure::split_labels(labels));
}

inline std::string text(const netclosure::System& s, const netclosure::NodeSet& y) {
  return netclosure::format_set(s, y);
}

// Labels v0..v(n-1); each unordered pair becomes a tie with probability p_tie,
// otherwise a one-way arc (random direction) with probability p_arc.
inline netclosure::System random_system(std::mt19937_64& rng, std::size_t n, double p_tie,
                                        double p_arc = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  netclosure::System::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const double r = u(rng);
      if (r < p_tie) {
        b.add_edge(netclosure::NodeId{i}, netclosure::NodeId{j});
      } else if (r < p_tie + p_arc) {
        if (u(rng) < 0.5)
          b.add_arc(netclosure::NodeId{i}, netclosure::NodeId{j});
        else
          b.add_arc(netclosure::NodeId{j}, netclosure::NodeId{i});
      }
    }
  return b.build();
}

}  // namespace testing
