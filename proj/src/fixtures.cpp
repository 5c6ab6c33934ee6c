#include "netclosure/fixtures.hpp"

#include "netclosure/io.hpp"

namespace netclosure::fixtures {

namespace {

constexpr std::string_view kF1 = R"(node a
node b
node c
node d
node e
node f
node g
node h
node i
a -- b
b -- c
b -- d
b -- e
c -- f
d -- g
e -- g
e -- h
f -- i
a -> c
h -> g
)";

}  // namespace

std::string_view f1_text() { return kF1; }

std::string_view f2_text() {
  static const std::string text = std::string(kF1) + "h -- i\n";
  return text;
}

System f1() { return parse_edge_list(kF1); }
System f2() { return parse_edge_list(f2_text()); }

System cx1_source() { return parse_edge_list("node x\nnode z\n"); }
System cx1_target() { return parse_edge_list("x' -- z'\n"); }
NodeMap cx1_map() { return parse_node_map("x => x'\nz => z'\n", cx1_source(), cx1_target()); }

System fig3b() { return parse_edge_list("node x\nnode y\nnode z\nx -> y\ny -> z\n"); }
System fig3c() { return parse_edge_list("node x\nnode y\nnode z\ny -> x\ny -> z\n"); }

System diamond() {
  return parse_edge_list(
      "node x\nnode y1\nnode y2\nnode z\nx -- y1\nx -- y2\nz -- y1\nz -- y2\n");
}

System diamond_plus() {
  return parse_edge_list(
      "node x\nnode y1\nnode y2\nnode z\nx -- y1\nx -- y2\nz -- y1\nz -- y2\nx -- z\n");
}

System gt() { return parse_edge_list("node p\nnode x\nnode y\nnode z\np -- x\np -- y\nx -- y\ny -- z\n"); }

System c4() { return parse_edge_list("node a\nnode b\nnode c\nnode d\na -- b\nb -- c\nc -- d\nd -- a\n"); }

}  // namespace netclosure::fixtures
