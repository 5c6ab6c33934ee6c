#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "netclosure/system.hpp"
#include "netclosure/transform.hpp"

namespace netclosure {

enum class GraphFormat { EdgeList, Matrix };
GraphFormat parse_graph_format(std::string_view name);

/// Edge-list text:
///
///     # comment
///     node <id>        isolated node
///     <u> -- <v>       symmetric edge
///     <u> -> <v>       directed arc
///
/// Nodes are indexed in order of first mention. Duplicates are idempotent,
/// self-loops and inputs that declare no node are rejected.
System parse_edge_list(std::string_view text);

/// Matrix text: `n`, then n rows of n 0/1 entries; row i holds the out-arcs
/// of node `v<i>`.
System parse_matrix(std::string_view text);

System parse_graph(std::string_view text, GraphFormat format);
System read_graph_file(const std::string& path, GraphFormat format = GraphFormat::EdgeList);
std::string read_text_file(const std::string& path);

/// Canonical edge list: every node declared in index order, then symmetric
/// edges, then one-way arcs, each in index order. Parsing it gives back an
/// identical System.
std::string format_edge_list(const System& s);
std::string format_matrix(const System& s);

/// Map text: `<src> => <dst>` or `<src> => !` per source node.
NodeMap parse_node_map(std::string_view text, const System& source, const System& target);
std::string format_node_map(const NodeMap& f);

/// Graphviz rendering: symmetric edges undirected, one-way arcs directed,
/// subsumed nodes dashed and chordless k-cycle edges bold.
std::string format_dot(const System& s);

/// Comma-separated labels, no spaces: "a,b,c".
std::vector<std::string> split_labels(std::string_view text);

}  // namespace netclosure
