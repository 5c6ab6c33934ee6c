#include "netclosure/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "netclosure/error.hpp"
#include "netclosure/reduction.hpp"

namespace netclosure {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++lineno, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

std::string quote(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "matrix") return GraphFormat::Matrix;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

System parse_edge_list(std::string_view text) {
  System::Builder builder;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    const auto tok = tokens_of(line);
    if (tok.empty()) return;
    try {
      if (tok.size() == 2 && tok[0] == "node") {
        builder.add_node(tok[1]);
      } else if (tok.size() == 3 && tok[1] == "--") {
        builder.add_edge(tok[0], tok[2]);
      } else if (tok.size() == 3 && tok[1] == "->") {
        builder.add_arc(tok[0], tok[2]);
      } else {
        throw ParseError("expected 'node <id>', '<u> -- <v>' or '<u> -> <v>'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), lineno);
    }
  });
  if (builder.size() == 0) throw ParseError("graph declares no nodes");
  return builder.build();
}

System parse_matrix(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto tok = tokens_of(line);
    if (!tok.empty()) rows.emplace_back(lineno, std::move(tok));
  });
  if (rows.empty()) throw ParseError("matrix is empty");
  const auto& header = rows.front();
  if (header.second.size() != 1) throw ParseError("first line must hold the node count", header.first);
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(header.second[0], &used);
    if (used != header.second[0].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("bad node count '" + header.second[0] + "'", header.first);
  }
  if (n == 0) throw ParseError("graph declares no nodes", header.first);
  if (rows.size() != n + 1)
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                     std::to_string(rows.size() - 1));

  System::Builder builder;
  for (std::size_t i = 0; i < n; ++i) builder.add_node("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [lineno, cells] = rows[i + 1];
    if (cells.size() != n)
      throw ParseError("row has " + std::to_string(cells.size()) + " entries, expected " +
                           std::to_string(n),
                       lineno);
    for (std::size_t j = 0; j < n; ++j) {
      if (cells[j] == "0") continue;
      if (cells[j] != "1") throw ParseError("matrix entries must be 0 or 1", lineno);
      if (i == j) throw ParseError("self-loop on node 'v" + std::to_string(i) + "'", lineno);
      builder.add_arc(NodeId{static_cast<std::uint32_t>(i)}, NodeId{static_cast<std::uint32_t>(j)});
    }
  }
  return builder.build();
}

System parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Matrix ? parse_matrix(text) : parse_edge_list(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

System read_graph_file(const std::string& path, GraphFormat format) {
  try {
    return parse_graph(read_text_file(path), format);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_edge_list(const System& s) {
  std::string out;
  for (const auto& l : s.labels()) out += "node " + l + "\n";
  for (auto [u, v] : s.symmetric_edges()) out += s.label(u) + " -- " + s.label(v) + "\n";
  for (auto [u, v] : s.arcs())
    if (!s.has_arc(v, u)) out += s.label(u) + " -> " + s.label(v) + "\n";
  return out;
}

std::string format_matrix(const System& s) {
  std::string out = std::to_string(s.size()) + "\n";
  for (auto u : s.nodes()) {
    for (auto v : s.nodes()) {
      if (v.index) out += ' ';
      out += s.has_arc(u, v) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

NodeMap parse_node_map(std::string_view text, const System& source, const System& target) {
  std::vector<std::optional<NodeId>> images(source.size());
  std::vector<bool> seen(source.size(), false);
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    const auto tok = tokens_of(line);
    if (tok.empty()) return;
    if (tok.size() != 3 || tok[1] != "=>")
      throw ParseError("expected '<src> => <dst>' or '<src> => !'", lineno);
    const auto src = source.find(tok[0]);
    if (!src) throw ParseError("unknown source node '" + tok[0] + "'", lineno);
    if (seen[src->index]) throw ParseError("source node '" + tok[0] + "' mapped twice", lineno);
    seen[src->index] = true;
    if (tok[2] == "!") return;
    const auto dst = target.find(tok[2]);
    if (!dst) throw ParseError("unknown target node '" + tok[2] + "'", lineno);
    images[src->index] = *dst;
  });
  for (auto v : source.nodes())
    if (!seen[v.index]) throw ParseError("source node '" + source.label(v) + "' is not mapped");
  try {
    return NodeMap(source, target, std::move(images));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string format_node_map(const NodeMap& f) {
  std::string out;
  for (auto v : f.source().nodes()) {
    const auto img = f.image(v);
    out += f.source().label(v) + " => " + (img ? f.target().label(*img) : std::string("!")) + "\n";
  }
  return out;
}

std::string format_dot(const System& s) {
  std::set<NodeId> subsumed;
  for (const auto& p : subsumed_pairs(s)) subsumed.insert(p.subsumed);
  std::set<Edge> bold;
  for (const auto& c : chordless_cycles(s).cycles) {
    for (std::size_t i = 0; i < c.length(); ++i) {
      auto u = c.vertices[i], v = c.vertices[(i + 1) % c.length()];
      bold.insert(u < v ? Edge{u, v} : Edge{v, u});
    }
  }

  std::string out = "digraph netclosure {\n";
  for (auto v : s.nodes()) {
    out += "  " + quote(s.label(v));
    if (subsumed.count(v)) out += " [style=dashed]";
    out += ";\n";
  }
  for (auto [u, v] : s.symmetric_edges()) {
    out += "  " + quote(s.label(u)) + " -> " + quote(s.label(v)) + " [dir=none";
    if (bold.count({u, v})) out += ", style=bold";
    out += "];\n";
  }
  for (auto [u, v] : s.arcs())
    if (!s.has_arc(v, u)) out += "  " + quote(s.label(u)) + " -> " + quote(s.label(v)) + ";\n";
  return out + "}\n";
}

std::vector<std::string> split_labels(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (piece.empty() || !valid_label(piece))
      throw ParseError("bad node list '" + std::string(text) + "'");
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace netclosure
