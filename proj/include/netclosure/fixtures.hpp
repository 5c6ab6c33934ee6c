#pragma once

#include <string_view>

#include "netclosure/system.hpp"
#include "netclosure/transform.hpp"

// Canonical small networks. The same content ships as edge-list files under
// data/fixtures/.
namespace netclosure::fixtures {

/// Mixed network on a..i: ties a-b, b-c, b-d, b-e, c-f, d-g, e-g, e-h, f-i
/// and one-way arcs a->c, h->g.
System f1();
/// f1 plus the tie h-i.
System f2();
/// Two isolated points x, z.
System cx1_source();
/// A single tie x'-z'.
System cx1_target();
/// x => x', z => z'.
NodeMap cx1_map();
/// x -> y -> z.
System fig3b();
/// y -> x, y -> z.
System fig3c();
/// x and z both tied to y1 and y2.
System diamond();
/// diamond plus the tie x-z.
System diamond_plus();
/// Triangle p, x, y with pendant z on y.
System gt();
/// Chordless 4-cycle a-b-c-d.
System c4();

std::string_view f1_text();
std::string_view f2_text();

}  // namespace netclosure::fixtures
