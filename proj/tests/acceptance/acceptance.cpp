// One line per acceptance criterion; exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "netclosure/closure.hpp"
#include "netclosure/cycles.hpp"
#include "netclosure/dynamics.hpp"
#include "netclosure/fixtures.hpp"
#include "netclosure/io.hpp"
#include "netclosure/oracle.hpp"
#include "netclosure/reduction.hpp"
#include "netclosure/separation.hpp"
#include "netclosure/transform.hpp"

using namespace netclosure;

namespace {

std::string data_path(const std::string& name) { return std::string(NETCLOSURE_DATA_DIR) + "/" + name; }
std::string golden_path(const std::string& name) { return std::string(NETCLOSURE_GOLDEN_DIR) + "/" + name; }

// Collects failed sub-checks of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::size_t total() const { return total_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string text(const System& s, const NodeSet& y) { return format_set(s, y); }
NodeSet set(const System& s, const std::string& labels) { return s.make_set(split_labels(labels)); }

std::string cycle_text(const System& s, const std::vector<NodeId>& c) {
  std::string out = "<";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + s.label(c[i]);
  return out + ">";
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

// Erdos-Renyi graph on v0..v(n-1) drawn from the simulator's own generator.
System erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  SimRng rng(seed);
  System::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node("v" + std::to_string(i));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.unit() < p) b.add_edge(NodeId{i}, NodeId{j});
  return b.build();
}

// ------------------------------------------------------------------ 1-3

void fixture_f1(Check& c) {
  const auto s = fixtures::f1();
  c.expect(text(s, neighborhood(s, s.at("a"))) == "{b,c}", "a.eta = {b,c}");
  c.expect(text(s, region(s, s.at("g"))) == "{d,e,g}", "g.rho = {d,e,g}");
  c.expect(text(s, region(s, s.at("h"))) == "{e,g,h}", "h.rho = {e,g,h}");
  c.expect(text(s, region(s, s.at("b"))) == "{a,b,c,d,e}", "b.rho = {a,b,c,d,e}");
  c.expect(text(s, closure(s, s.at("b"))) == "{a,b}", "closure({b}) = {a,b}");
  c.expect(text(s, closure(s, s.at("e"))) == "{e,h}", "closure({e}) = {e,h}");
  c.expect(text(s, closure(s, s.at("f"))) == "{f,i}", "closure({f}) = {f,i}");
  const auto cycles = chordless_cycles(s);
  c.expect(cycles.cycles.size() == 1 && cycle_text(s, cycles.cycles[0].vertices) == "<b,d,g,e>",
           "exactly one chordless k-cycle <b,d,g,e>");
  c.expect(are_separated(s, set(s, "e,g,h"), set(s, "f,i")).separated, "{e,g,h} and {f,i} separated");
}

void fixture_f2(Check& c) {
  const auto s = fixtures::f2();
  const auto cycles = chordless_cycles(s).cycles;
  c.expect(cycles.size() == 2, "two chordless k-cycles");
  if (cycles.size() == 2) {
    c.expect(cycle_text(s, cycles[0].vertices) == "<b,d,g,e>", "<b,d,g,e>");
    c.expect(cycle_text(s, cycles[1].vertices) == "<b,c,f,i,h,e>", "<b,c,f,i,h,e>");
  }
  const auto f = NodeMap::by_label(fixtures::f1(), s);
  const auto v = oracle::continuous(f);
  c.expect(!v.continuous, "identity F1 -> F2 is oracle-discontinuous");
  if (v.witness) c.note("witness " + text(f.source(), *v.witness));
}

void reduction_f1(Check& c) {
  const auto s = fixtures::f1();
  const auto t = reduce(s);
  c.expect(text(s, t.core_nodes) == "{b,d,e,g}", "core {b,d,e,g}");
  std::string steps;
  for (const auto& st : t.steps) steps += s.label(st.subsumed) + "<=" + s.label(st.subsumer) + " ";
  c.expect(steps == "a<=b h<=e i<=f f<=c c<=b ", "steps a<=b h<=e i<=f f<=c c<=b, got " + steps);
  c.expect(characterization_check(s).pass(), "characterization passes");
  c.expect(reduce(t.core).steps.empty(), "reduce is idempotent on the core");
}

// -------------------------------------------------------------------- 4

void closure_axioms(Check& c) {
  std::size_t graphs = 0;
  AxiomOptions opts;
  opts.max_n = 10;
  auto verify = [&](const System& s) {
    ++graphs;
    const auto r = verify_closure_axioms(s, opts);
    if (!r.exhaustive || !r.all_passed()) c.expect(false, "axioms on " + oracle::encode_instance(s));
    // every pair (Y, Z) against the definitional closure table
    const auto cl = oracle::closure_table(s);
    bool ok = true;
    for (Mask y = 0; y < cl.size(); ++y) {
      ok &= (y & ~cl[y]) == 0 && cl[cl[y]] == cl[y];
      for (Mask z = 0; z < cl.size(); ++z) {
        if ((y & ~z) == 0) ok &= (cl[y] & ~cl[z]) == 0;
        const Mask meet = cl[y] & cl[z];
        ok &= cl[meet] == meet;
      }
    }
    if (!ok) c.expect(false, "pairwise axioms on " + oracle::encode_instance(s));
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    oracle::GraphEnumerator g(n, true);
    while (auto s = g.next()) verify(*s);
  }
  for (std::uint64_t k = 0; k < 200; ++k) verify(erdos_renyi(10, 0.15 + 0.1 * static_cast<double>(k % 5), 1000 + k));
  c.expect(graphs == 1 + 2 + 8 + 64 + 1024 + 200, "graph count");
  c.note(std::to_string(graphs) + " graphs checked exhaustively");
}

// ----------------------------------------------------------------- audits

const oracle::AuditReport& audit5() {
  static const auto report = oracle::audit(5);
  return report;
}

void definitional_suites(Check& c) {
  const auto& r = audit5();
  for (const char* id : {"closure-order-matches-region-order", "separation-by-four-intersections"}) {
    const auto* claim = r.claim(id);
    c.expect(claim && claim->findings == 0, std::string(id) + " has no findings");
    if (claim) c.note(std::string(id) + ": " + std::to_string(claim->instances) + " instances");
  }
  const auto* p9 = r.claim("point-in-closure-of-own-neighbors");
  c.expect(p9 && p9->symmetric_findings == 0, "point-in-closure has no findings on symmetric graphs");
  if (p9)
    c.note("point-in-closure-of-own-neighbors: " + std::to_string(p9->instances) + " instances, " +
           std::to_string(p9->findings - p9->symmetric_findings) +
           " findings on graphs with one-way arcs (out of scope)");
}

void cx1(Check& c) {
  const auto f = fixtures::cx1_map();
  const auto& src = f.source();
  c.expect(oracle::continuous(f).continuous, "oracle continuous");
  const auto rep = check_separation_preservation(f, set(src, "x"), set(src, "z"));
  c.expect(!rep.images_separated, "images of {x},{z} not separated");
  c.expect(!rep.hypothesis_holds, "hypothesis flagged false");
  c.expect(!rep.confirms.has_value(), "no confirmation claimed");
}

void separation_additions(Check& c) {
  const auto& r = audit5();
  const auto* claim = r.claim("continuous-maps-preserve-separation");
  c.expect(claim && claim->instances > 0, "instances enumerated");
  c.expect(claim && claim->findings == 0, "no counterexamples");
  if (claim) c.note(std::to_string(claim->instances) + " additions checked");
  for (const auto& f : r.findings)
    if (f.claim == "continuous-maps-preserve-separation") c.note("counterexample " + f.instance + " witness " + f.witness);
}

// -------------------------------------------------------------------- 8

void deletion_spot_checks(Check& c) {
  auto probe = [&](const System& s, const char* x, const char* z, DeletionVerdict expected, bool oracle_expected) {
    const auto name = std::string(x) + "," + z;
    const auto chk = check_edge_deletion(s, s.at(x), s.at(z));
    const auto v = oracle::continuous(mutation_map(s, {EdgeMutation::Kind::Delete, s.at(x), s.at(z), true}));
    c.expect(chk.verdict == expected, name + " fast path " + std::string(to_string(chk.verdict)));
    const bool fast_continuous = chk.verdict == DeletionVerdict::Continuous;
    c.expect(v.continuous == oracle_expected, name + " oracle " + (v.continuous ? "CONTINUOUS" : "DISCONTINUOUS"));
    c.expect(v.continuous == fast_continuous,
             name + " oracle agreement" + (v.witness ? " (oracle witness " + text(s, *v.witness) + ")" : ""));
  };
  const auto f1 = fixtures::f1();
  probe(f1, "a", "b", DeletionVerdict::DiscontinuousA, false);
  probe(f1, "d", "g", DeletionVerdict::DiscontinuousB, false);
  const auto c4 = fixtures::c4();
  for (auto [x, z] : c4.symmetric_edges())
    probe(c4, c4.label(x).c_str(), c4.label(z).c_str(), DeletionVerdict::DiscontinuousB, false);
  probe(f1, "b", "c", DeletionVerdict::Continuous, true);
}

// -------------------------------------------------------------------- 9

void deletion_audit(Check& c) {
  const auto s = fixtures::diamond_plus();
  const auto chk = check_edge_deletion(s, s.at("x"), s.at("z"));
  const auto v = oracle::continuous(mutation_map(s, {EdgeMutation::Kind::Delete, s.at("x"), s.at("z"), true}));
  c.expect(chk.verdict == DeletionVerdict::Continuous, "DIAMOND+ fast path CONTINUOUS");
  c.expect(!v.continuous && v.witness && text(s, *v.witness) == "{x}", "DIAMOND+ oracle DISCONTINUOUS at {x}");

  const auto first = cli({"--json", "--max-n", "4", "audit"});
  const auto second = cli({"--json", "--max-n", "4", "audit"});
  c.expect(first.out == second.out, "audit output is deterministic");
  c.expect(first.code == 1, "audit exits 1 with findings");
  const auto doc = nlohmann::ordered_json::parse(first.out);
  bool found = false;
  for (const auto& f : doc["findings"])
    found |= f["claim"] == "edge-deletion-characterization" &&
             f["instance"] == "n=4;v0--v1,v0--v2,v0--v3,v1--v3,v2--v3;delete=v0--v3" &&
             f["expected"] == "CONTINUOUS" && f["observed"] == "DISCONTINUOUS" && f["witness"] == "{v0}";
  c.expect(found, "findings include the DIAMOND+ instance (x = v0, z = v3)");
}

// ------------------------------------------------------------------- 10

void triadic_probe(Check& c) {
  const auto r = cli({"--json", "check-add", data_path("fixtures/gt.edges"), "--edge", "x,z", "--oracle"});
  c.expect(r.code == 1, "exit code 1");
  const auto doc = nlohmann::ordered_json::parse(r.out);
  const auto& res = doc["results"];
  c.expect(res["claim_applies"] == true, "claim_applies = true");
  c.expect(res["oracle"]["continuous"] == false, "oracle_continuous = false");
  c.note("oracle witness " + res["oracle"]["witness"].get<std::string>());
}

// ------------------------------------------------------------------- 11

struct MapCase {
  NodeMap f;
  std::vector<Mask> src_cl;
  std::vector<Mask> dst_cl;
  bool continuous;
  bool surjective;
};

MapCase make_case(NodeMap f) {
  auto src_cl = oracle::closure_table(f.source());
  auto dst_cl = oracle::closure_table(f.target());
  const bool cont = oracle::continuous(f).continuous;
  const bool surj = is_surjective(f);
  return {std::move(f), std::move(src_cl), std::move(dst_cl), cont, surj};
}

Mask image(const NodeMap& f, Mask y) { return to_mask(apply(f, f.source().from_mask(y))); }

// A continuous single-edge deletion when one exists, otherwise a node deletion.
NodeMap elementary(const System& s, std::mt19937_64& rng, bool prefer_edge) {
  if (prefer_edge) {
    auto edges = s.symmetric_edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto [x, z] : edges) {
      auto f = mutation_map(s, {EdgeMutation::Kind::Delete, x, z, true});
      if (oracle::continuous(f).continuous) return f;
    }
  }
  const auto v = NodeId{static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng))};
  return NodeMap::by_label(s, s.without_node(v));
}

void map_propositions(Check& c) {
  std::mt19937_64 rng(11);
  std::map<std::string, std::size_t> applied, violated;
  auto verdict = [&](const std::string& prop, bool ok) {
    ++applied[prop];
    if (!ok) ++violated[prop];
  };
  for (int instance = 0; instance < 500; ++instance) {
    const std::size_t n = 3 + static_cast<std::size_t>(instance % 6);
    const auto s = erdos_renyi(n, 0.3 + 0.05 * static_cast<double>(instance % 7), 5000 + static_cast<std::uint64_t>(instance));
    const auto f = make_case(elementary(s, rng, instance % 3 != 0));
    const auto g = make_case(elementary(f.f.target(), rng, instance % 2 == 0));
    const auto fg = make_case(compose(f.f, g.f));
    const Mask full = (Mask{1} << n) - 1;

    for (const auto* m : {&f, &fg}) {
      // images distribute over meet and join
      bool ok = true;
      for (int k = 0; k < 64; ++k) {
        const Mask x = rng() & full, z = rng() & full;
        ok &= image(m->f, x & z) == (image(m->f, x) & image(m->f, z));
        ok &= image(m->f, x | z) == (image(m->f, x) | image(m->f, z));
      }
      verdict("images-distribute", ok);

      if (!m->continuous) continue;
      ok = true;
      for (Mask y = 0; y <= full; ++y) {
        const Mask fy = image(m->f, y);
        if (m->dst_cl[fy] == fy) ok &= image(m->f, m->src_cl[y]) == fy;
      }
      verdict("closed-image-absorbs-closure", ok);

      ok = true;
      std::map<Mask, Mask> by_class;
      for (Mask y = 0; y <= full; ++y) {
        const Mask image_closure = m->dst_cl[image(m->f, y)];
        auto [it, fresh] = by_class.emplace(m->src_cl[y], image_closure);
        ok &= fresh || it->second == image_closure;
      }
      verdict("equal-closures-give-equal-image-closures", ok);

      if (!m->surjective) continue;
      ok = true;
      for (Mask t = 0; t < m->dst_cl.size(); ++t) {
        if (m->dst_cl[t] != t) continue;
        bool found = false;
        for (Mask y = 0; y <= full && !found; ++y) found = m->src_cl[y] == y && image(m->f, y) == t;
        ok &= found;
      }
      verdict("closed-sets-have-closed-preimages", ok);
    }
    if (f.continuous && g.continuous) verdict("composition-preserves-continuity", fg.continuous);
    if (f.surjective && g.surjective && g.continuous) verdict("composition-preserves-surjectivity", fg.surjective);
  }
  for (const char* p : {"composition-preserves-continuity", "closed-image-absorbs-closure", "equal-closures-give-equal-image-closures", "closed-sets-have-closed-preimages", "composition-preserves-surjectivity", "images-distribute"}) {
    c.expect(applied[p] > 0, std::string(p) + " exercised");
    c.expect(violated[p] == 0, std::string(p) + ": " + std::to_string(violated[p]) + " violations");
    c.note(std::string(p) + ": " + std::to_string(applied[p]) + " maps checked");
  }
}

// ------------------------------------------------------------------- 12

void simulator(Check& c) {
  SimConfig cfg;
  const auto c4 = run(fixtures::c4(), cfg);
  c.expect(c4.steps.size() == 1 && c4.steps[0].halt == HaltReason::Fixpoint && c4.steps[0].index == 0,
           "C4 halts at FIXPOINT with zero steps");

  const auto bridged = parse_edge_list("a -- b\nb -- c\nc -- a\nx -- y\ny -- z\nz -- x\nc -- x\n");
  const auto bt = run(bridged, cfg);
  c.expect(bt.steps.size() == 2 && bt.steps[0].op == StepOp::Delete &&
               bridged.label(bt.steps[0].edge->first) == "c" && bridged.label(bt.steps[0].edge->second) == "x",
           "two triangles: the bridge c--x is deleted, then FIXPOINT");
  c.expect(bt.steps.back().metrics.component_count == 2, "two triangles: two components at HALT");

  std::size_t deletions = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const auto s = erdos_renyi(12, 0.25, 100 + k);
    cfg.seed = k + 1;
    const auto t = run(s, cfg);
    const auto name = "graph " + std::to_string(k);
    if (k < 3) c.expect(format_trace(t) == format_trace(run(s, cfg)), name + ": trace is byte-identical");
    c.expect(t.steps.back().halt == HaltReason::Fixpoint, name + ": HALT at FIXPOINT");
    std::size_t components = metrics(s).component_count, edges = metrics(s).edge_count;
    for (const auto& step : t.steps) {
      c.expect(step.metrics.component_count >= components, name + ": component_count non-decreasing");
      if (!step.halt) c.expect(step.metrics.edge_count < edges, name + ": edge_count decreasing");
      components = step.metrics.component_count;
      edges = step.metrics.edge_count;
    }
    for (auto [x, z] : t.final_system.symmetric_edges())
      c.expect(!oracle::continuous(mutation_map(t.final_system, {EdgeMutation::Kind::Delete, x, z, true})).continuous,
               name + ": no edge oracle-deletable at the fixpoint");
    deletions += t.steps.size() - 1;
  }
  c.note("20 random graphs, " + std::to_string(deletions) + " deletions in total");
}

// ------------------------------------------------------------------- 13

void formats(Check& c) {
  auto golden = [](const std::string& name) { return read_text_file(golden_path(name)); };
  std::mt19937_64 rng(99);
  std::size_t round_trips = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    System::Builder b;
    const std::size_t n = 1 + k % 12;
    for (std::size_t i = 0; i < n; ++i) b.add_node("n" + std::to_string(i));
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (i != j && rng() % 4 == 0) b.add_arc(NodeId{i}, NodeId{j});
    const auto s = b.build();
    const auto e = format_edge_list(s);
    c.expect(parse_edge_list(e).same_structure(s) && format_edge_list(parse_edge_list(e)) == e, "edge list round trip");
    const auto m = format_matrix(s);
    c.expect(format_matrix(parse_matrix(m)) == m && parse_matrix(m).arcs() == s.arcs(), "matrix round trip");
    const auto t = s.without_node(NodeId{0});
    const auto f = NodeMap::by_label(s, t);
    c.expect(parse_node_map(format_node_map(f), s, t).images() == f.images(), "map round trip");
    ++round_trips;
  }
  c.note(std::to_string(round_trips) + " random graphs round-tripped through every text format");

  const auto f1 = data_path("fixtures/f1.edges");
  c.expect(cli({"export", f1}).out == golden("f1.edgelist"), "edge list golden");
  c.expect(cli({"export", f1, "--to", "matrix"}).out == golden("f1.matrix"), "matrix golden");
  c.expect(format_node_map(fixtures::cx1_map()) == golden("cx1.map"), "map golden");
  c.expect(cli({"simulate", golden_path("triangles.edges")}).out == golden("triangles.trace"), "trace golden");
  c.expect(cli({"simulate", golden_path("path5.edges"), "--seed", "11", "--mode", "deletion-plus-triadic", "--p-add",
                "0.5", "--max-steps", "8"})
                   .out == golden("path5_triadic.trace"),
           "triadic trace golden");
  c.expect(cli({"analyze", f1}).out == golden("f1.analyze.txt"), "text report golden");
  c.expect(cli({"--json", "analyze", f1}).out == golden("f1.analyze.json"), "JSON report golden");
  c.expect(cli({"reduce", "--trace", f1}).out == golden("f1.reduce.txt"), "reduce report golden");
  c.expect(cli({"export-dot", f1}).out == golden("f1.dot"), "DOT golden");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> body;
  double budget_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "F1 fixture facts", fixture_f1, 1},
      {2, "F2 cycles and discontinuity of F1 -> F2", fixture_f2, 0},
      {3, "reduction of F1", reduction_f1, 0},
      {4, "closure axioms, all symmetric n <= 5 and 200 random n = 10", closure_axioms, 60},
      {5, "closure order, point-in-closure, four-intersection separation at n <= 5", definitional_suites, 0},
      {6, "CX1 continuous but images not separated", cx1, 0},
      {7, "joining separated non-isolated points is discontinuous, n <= 5", separation_additions, 0},
      {8, "edge deletion spot checks", deletion_spot_checks, 0},
      {9, "edge deletion audit at n <= 4 includes DIAMOND+", deletion_audit, 0},
      {10, "triadic addition probe on GT", triadic_probe, 0},
      {11, "map propositions over 500 random instances", map_propositions, 0},
      {12, "simulator determinism, fixpoints and components", simulator, 120},
      {13, "round trips and golden files", formats, 0},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0)
      check.expect(seconds < cr.budget_seconds, "runtime " + format_metric(seconds) + " s within budget");
    const bool ok = check.passed();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, check.total(),
                seconds);
    for (const auto& n : check.notes()) std::printf("       %s\n", n.c_str());
    for (const auto& f : check.failures()) std::printf("       failed: %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
