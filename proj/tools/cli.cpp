#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "netclosure/closure.hpp"
#include "netclosure/cycles.hpp"
#include "netclosure/dynamics.hpp"
#include "netclosure/error.hpp"
#include "netclosure/io.hpp"
#include "netclosure/oracle.hpp"
#include "netclosure/reduction.hpp"
#include "netclosure/separation.hpp"
#include "netclosure/transform.hpp"

namespace netclosure::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "edgelist";
  bool json = false;
  std::size_t max_n = 0;  // 0: command default

  std::string graph;
  std::string target;
  std::string map;
  std::string set;
  std::string x;
  std::string z;
  std::string edge;
  bool trace = false;
  bool oracle = false;
  std::size_t min_len = 4;
  std::size_t max_len = 0;
  std::size_t limit = kDefaultCycleLimit;
  std::string to = "edgelist";

  std::uint64_t seed = 1;
  std::size_t max_steps = 1000;
  std::string mode = "deletion-only";
  double p_add = 0.0;
  std::string checker = "oracle";
  std::size_t cycle_cap = 1000;
  std::string out;

  std::size_t limit_or(std::size_t fallback) const { return max_n ? max_n : fallback; }
};

// ------------------------------------------------------------ json helpers

std::string digest_text(const System& s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(graph_digest(s)));
  return buf;
}

Json input_json(const System& s) {
  Json j;
  j["digest"] = digest_text(s);
  j["nodes"] = s.size();
  j["arcs"] = s.arc_count();
  j["symmetric_edges"] = s.symmetric_edges().size();
  return j;
}

Json metric_json(double v) { return std::stod(format_metric(v)); }

Json labels_json(const System& s, const std::vector<NodeId>& nodes) {
  Json out = Json::array();
  for (auto v : nodes) out.push_back(s.label(v));
  return out;
}

Json optional_label(const System& s, const std::optional<NodeId>& v) {
  return v ? Json(s.label(*v)) : Json(nullptr);
}

Json set_json(const System& s, const NodeSet& y) { return format_set(s, y); }

Json sets_json(const System& s, const std::vector<NodeSet>& sets) {
  Json out = Json::array();
  for (const auto& y : sets) out.push_back(format_set(s, y));
  return out;
}

Json verdict_json(const System& source, const System& target, const ContinuityVerdict& v) {
  Json j;
  j["continuous"] = v.continuous;
  j["witness"] = v.witness ? set_json(source, *v.witness) : Json(nullptr);
  j["offending_element"] = optional_label(target, v.offending_element);
  return j;
}

Json metrics_json(const Metrics& m) {
  Json j;
  j["edge_count"] = m.edge_count;
  j["symmetric_edge_count"] = m.symmetric_edge_count;
  j["component_count"] = m.component_count;
  j["subsumed_node_count"] = m.subsumed_node_count;
  j["core_size"] = m.core_size;
  j["kcycle_count"] = m.kcycle_count;
  j["kcycles_capped"] = m.kcycles_capped;
  j["triangle_count"] = m.triangle_count;
  j["closed_triad_ratio"] = metric_json(m.closed_triad_ratio);
  return j;
}

Json cycles_json(const System& s, const CycleListing& listing) {
  Json cycles = Json::array();
  for (const auto& c : listing.cycles) cycles.push_back(labels_json(s, c.vertices));
  return cycles;
}

Json finding_json(std::string claim, std::string instance, std::string expected, std::string observed,
                  std::string witness) {
  Json j;
  j["claim"] = std::move(claim);
  j["instance"] = std::move(instance);
  j["expected"] = std::move(expected);
  j["observed"] = std::move(observed);
  j["witness"] = std::move(witness);
  return j;
}

struct Report {
  Json doc;
  int exit = kOk;

  Report(std::string_view command, Json input) {
    doc["report"] = "netclosure v1";
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["results"] = Json::object();
    doc["findings"] = Json::array();
  }
  Json& results() { return doc["results"]; }
  void finding(Json f) {
    doc["findings"].push_back(std::move(f));
    exit = kFindings;
  }
};

// ----------------------------------------------------------- text render

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Json& v) {
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string flat_list(const Json& v) {
  std::string out = "[";
  bool first = true;
  for (const auto& e : v) {
    if (!first) out += ", ";
    out += scalar_text(e);
    first = false;
  }
  return out + "]";
}

void render_value(std::string& out, const std::string& key, const Json& v, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += pad + key + ": {}\n";
      return;
    }
    out += pad + key + ":\n";
    for (const auto& [k, x] : v.items()) render_value(out, k, x, indent + 2);
  } else if (v.is_array()) {
    if (v.empty() || all_scalars(v)) {
      out += pad + key + ": " + flat_list(v) + "\n";
      return;
    }
    out += pad + key + ":\n";
    for (const auto& e : v) {
      if (e.is_object() && !e.empty()) {
        std::string item;
        for (const auto& [k, x] : e.items()) render_value(item, k, x, indent + 4);
        item.replace(indent + 2, 2, "- ");
        out += item;
      } else if (e.is_array() && all_scalars(e)) {
        out += pad + "  - " + flat_list(e) + "\n";
      } else {
        out += pad + "  - " + (e.is_primitive() ? scalar_text(e) : e.dump()) + "\n";
      }
    }
  } else {
    out += pad + key + ": " + scalar_text(v) + "\n";
  }
}

// --------------------------------------------------------------- helpers

System load(const Options& o, const std::string& path) {
  return read_graph_file(path, parse_graph_format(o.format));
}

NodeSet parse_set(const System& s, const std::string& text, const char* flag) {
  const auto labels = split_labels(text);
  if (labels.empty()) throw UsageError(std::string(flag) + " needs at least one node");
  return s.make_set(labels);
}

std::pair<NodeId, NodeId> parse_edge(const System& s, const std::string& text) {
  const auto labels = split_labels(text);
  if (labels.size() != 2) throw UsageError("--edge takes two labels x,z");
  return {s.at(labels[0]), s.at(labels[1])};
}

std::string edge_text(const System& s, NodeId x, NodeId z) { return s.label(x) + "--" + s.label(z); }

// -------------------------------------------------------------- commands

Report cmd_analyze(const Options& o) {
  const auto s = load(o, o.graph);
  Report r("analyze", input_json(s));
  auto& res = r.results();
  Json nodes = Json::array();
  for (auto v : s.nodes()) {
    Json n;
    n["label"] = s.label(v);
    n["neighborhood"] = set_json(s, neighborhood(s, v));
    n["region"] = set_json(s, region(s, v));
    n["closure"] = set_json(s, closure(s, v));
    nodes.push_back(std::move(n));
  }
  res["nodes"] = std::move(nodes);
  Json pairs = Json::array();
  for (const auto& p : subsumed_pairs(s)) {
    Json j;
    j["subsumed"] = s.label(p.subsumed);
    j["subsumer"] = s.label(p.subsumer);
    pairs.push_back(std::move(j));
  }
  res["subsumed"] = std::move(pairs);
  res["irreducible"] = is_irreducible(s);
  const auto cycles = chordless_cycles(s);
  res["kcycles"] = cycles_json(s, cycles);
  res["kcycles_truncated"] = cycles.truncated;
  res["components"] = sets_json(s, connected_components(s));
  return r;
}

Report cmd_closure(const Options& o) {
  const auto s = load(o, o.graph);
  const auto y = parse_set(s, o.set, "--set");
  Report r("closure", input_json(s));
  auto& res = r.results();
  const auto c = closure(s, y);
  res["set"] = set_json(s, y);
  res["region"] = set_json(s, region(s, y));
  res["closure"] = set_json(s, c);
  res["closed"] = c == y;
  return r;
}

Report cmd_closed_sets(const Options& o) {
  const auto s = load(o, o.graph);
  Report r("closed-sets", input_json(s));
  const auto family = enumerate_closed_sets(s, o.limit_or(kDefaultMaxN));
  r.results()["count"] = family.size();
  r.results()["sets"] = sets_json(s, family.sets);
  return r;
}

Report cmd_generators(const Options& o) {
  const auto s = load(o, o.graph);
  const auto y = parse_set(s, o.set, "--set");
  Report r("generators", input_json(s));
  auto& res = r.results();
  res["set"] = set_json(s, y);
  res["closure"] = set_json(s, closure(s, y));
  res["generators"] = sets_json(s, generators(s, y, o.limit_or(kDefaultMaxN)));
  return r;
}

Report cmd_reduce(const Options& o) {
  const auto s = load(o, o.graph);
  Report r("reduce", input_json(s));
  auto& res = r.results();
  const auto trace = reduce(s);
  res["input_irreducible"] = trace.steps.empty();
  if (o.trace) {
    Json steps = Json::array();
    for (const auto& st : trace.steps) {
      Json j;
      j["deleted"] = s.label(st.subsumed);
      j["subsumer"] = s.label(st.subsumer);
      steps.push_back(std::move(j));
    }
    res["steps"] = std::move(steps);
  }
  res["core"] = set_json(s, trace.core_nodes);
  res["core_size"] = trace.core_nodes.size();
  const auto ch = characterization_check(s, o.limit_or(kDefaultMaxN));
  Json c;
  c["path_reading"] = kPathReading;
  c["cycle_nodes"] = set_json(s, ch.cycle_nodes);
  c["path_nodes"] = set_json(s, ch.path_nodes);
  c["predicted"] = set_json(s, ch.predicted);
  c["core_only"] = set_json(s, ch.core_only);
  c["predicted_only"] = set_json(s, ch.predicted_only);
  c["cycles_truncated"] = ch.cycles_truncated;
  c["agrees"] = ch.pass();
  res["characterization"] = std::move(c);
  return r;
}

Report cmd_cycles(const Options& o) {
  const auto s = load(o, o.graph);
  if (o.min_len < 3) throw UsageError("--min-len must be at least 3");
  Report r("cycles", input_json(s));
  auto& res = r.results();
  const auto listing = chordless_cycles(s, o.min_len, o.max_len, o.limit);
  res["min_len"] = o.min_len;
  res["max_len"] = o.max_len ? Json(o.max_len) : Json(nullptr);
  res["count"] = listing.cycles.size();
  res["truncated"] = listing.truncated;
  res["cycles"] = cycles_json(s, listing);
  return r;
}

Report cmd_separated(const Options& o) {
  const auto s = load(o, o.graph);
  const auto x = parse_set(s, o.x, "--x");
  const auto z = parse_set(s, o.z, "--z");
  Report r("separated", input_json(s));
  auto& res = r.results();
  const auto rep = are_separated(s, x, z);
  res["x"] = set_json(s, x);
  res["z"] = set_json(s, z);
  res["separated"] = rep.separated;
  Json overlaps;
  for (auto ov : {Overlap::Cores, Overlap::XWithZNeighbors, Overlap::XNeighborsWithZ, Overlap::Neighborhoods})
    overlaps[std::string(to_string(ov))] = optional_label(s, rep[ov]);
  res["overlaps"] = std::move(overlaps);
  return r;
}

Report cmd_connected(const Options& o) {
  const auto s = load(o, o.graph);
  const auto y = parse_set(s, o.set, "--set");
  Report r("connected", input_json(s));
  r.results()["set"] = set_json(s, y);
  r.results()["connected"] = is_connected_set(s, y);
  return r;
}

Report cmd_check_del(const Options& o) {
  const auto s = load(o, o.graph);
  const auto [x, z] = parse_edge(s, o.edge);
  Report r("check-del", input_json(s));
  auto& res = r.results();
  const auto chk = check_edge_deletion(s, x, z);
  res["edge"] = edge_text(s, x, z);
  res["verdict"] = to_string(chk.verdict);
  Json a;
  a["closure_x"] = set_json(s, chk.closure_x);
  a["closure_z"] = set_json(s, chk.closure_z);
  a["z_in_closure_x"] = chk.z_in_closure_x;
  a["x_in_closure_z"] = chk.x_in_closure_z;
  a["closures_equal"] = chk.closures_equal;
  a["holds"] = chk.clause_a;
  res["clause_a"] = std::move(a);
  Json b;
  b["degree_x"] = chk.degree_x;
  b["degree_z"] = chk.degree_z;
  b["cycle"] = chk.cycle ? labels_json(s, *chk.cycle) : Json(nullptr);
  b["holds"] = chk.clause_b;
  res["clause_b"] = std::move(b);

  const bool fast_continuous = chk.verdict == DeletionVerdict::Continuous;
  if (o.oracle) {
    const auto f = mutation_map(s, {EdgeMutation::Kind::Delete, x, z, true});
    const auto v = oracle::continuous(f, o.limit_or(kDefaultMaxN));
    res["oracle"] = verdict_json(s, f.target(), v);
    const bool agree = v.continuous == fast_continuous;
    res["agreement"] = to_string(agree ? Agreement::Agree : Agreement::Mismatch);
    if (!agree)
      r.finding(finding_json("edge-deletion-characterization", oracle::encode_instance(s) + ";delete=" + edge_text(s, x, z),
                             std::string(to_string(chk.verdict)), v.continuous ? "CONTINUOUS" : "DISCONTINUOUS",
                             v.witness ? format_set(s, *v.witness) : "-"));
    if (!v.continuous) r.exit = kFindings;
  } else {
    res["oracle"] = nullptr;
    res["agreement"] = to_string(Agreement::NotApplicable);
  }
  if (!fast_continuous) r.exit = kFindings;
  return r;
}

Report cmd_check_add(const Options& o) {
  const auto s = load(o, o.graph);
  const auto [x, z] = parse_edge(s, o.edge);
  Report r("check-add", input_json(s));
  auto& res = r.results();
  const auto chk = check_edge_addition(s, x, z, o.oracle, o.limit_or(kDefaultMaxN));
  res["edge"] = edge_text(s, x, z);
  res["claim_applies"] = chk.claim_applies;
  res["common_neighbors"] = set_json(s, chk.common_neighbors);
  res["oracle"] = chk.oracle ? verdict_json(s, s, *chk.oracle) : Json(nullptr);
  res["agreement"] = to_string(chk.agreement);
  if (chk.agreement == Agreement::Mismatch)
    r.finding(finding_json("triadic-addition-continuous", oracle::encode_instance(s) + ";add=" + edge_text(s, x, z),
                           "continuous", "DISCONTINUOUS",
                           chk.oracle->witness ? format_set(s, *chk.oracle->witness) : "-"));
  if (chk.oracle && !chk.oracle->continuous) r.exit = kFindings;
  return r;
}

Report cmd_check_map(const Options& o) {
  const auto src = load(o, o.graph);
  const auto dst = load(o, o.target);
  const auto f = parse_node_map(read_text_file(o.map), src, dst);
  Json input;
  input["source"] = input_json(src);
  input["target"] = input_json(dst);
  Report r("check-map", std::move(input));
  auto& res = r.results();
  const auto limit = o.limit_or(kDefaultMaxN);
  const auto v = is_continuous(f, limit);
  const bool surj = is_surjective(f, limit);
  res["monotone"] = is_monotone(f);
  res["continuity"] = verdict_json(src, dst, v);
  res["surjective"] = surj;
  if (!v.continuous || !surj) r.exit = kFindings;
  return r;
}

Report cmd_audit(const Options& o) {
  const auto k = o.limit_or(4);
  const auto report = oracle::audit(k);
  Json input;
  input["symmetric_graphs_up_to"] = k;
  input["directed_graphs_up_to"] = std::min<std::size_t>(k, 4);
  Report r("audit", std::move(input));
  auto& res = r.results();
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    Json j;
    j["claim"] = c.claim;
    j["statement"] = c.statement;
    j["instances"] = c.instances;
    j["findings"] = c.findings;
    j["symmetric_findings"] = c.symmetric_findings;
    claims.push_back(std::move(j));
  }
  res["claims"] = std::move(claims);
  res["finding_count"] = report.findings.size();
  for (const auto& f : report.findings) {
    auto j = finding_json(f.claim, f.instance, f.expected, f.observed, f.witness);
    j["relation"] = f.directed ? "directed" : "symmetric";
    r.finding(std::move(j));
  }
  return r;
}

Report cmd_simulate(const Options& o, std::ostream& out) {
  const auto s = load(o, o.graph);
  SimConfig cfg;
  cfg.seed = o.seed;
  cfg.max_steps = o.max_steps;
  cfg.mode = parse_sim_mode(o.mode);
  cfg.p_add = o.p_add;
  cfg.checker = parse_checker(o.checker);
  cfg.metric_cycle_cap = o.cycle_cap;
  cfg.oracle_max_n = o.limit_or(kDefaultMaxN);
  const auto trace = run(s, cfg);
  const auto text = format_trace(trace);
  if (o.out.empty() || o.out == "-") {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + o.out + "'");
    file << text;
  }

  Report r("simulate", input_json(s));
  auto& res = r.results();
  std::size_t deletions = 0, additions = 0, disagreements = 0;
  for (const auto& st : trace.steps) {
    deletions += st.op == StepOp::Delete && !st.halt;
    additions += st.op == StepOp::Add && !st.halt;
    disagreements += st.disagreements.size();
  }
  const auto& last = trace.steps.back();
  res["trace"] = o.out.empty() ? "-" : o.out;
  res["deletions"] = deletions;
  res["additions"] = additions;
  res["fastpath_disagreements"] = disagreements;
  res["halt"] = to_string(*last.halt);
  res["final"] = metrics_json(last.metrics);
  return r;
}

// --------------------------------------------------------------- parsing

void add_graph(CLI::App* sub, Options& o) {
  sub->add_option("graph", o.graph, "graph file")->required();
}

}  // namespace

std::string render_text(const Json& doc) {
  std::string out;
  for (const auto& [k, v] : doc.items()) render_value(out, k, v, 0);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighborhood closure analysis of finite networks", "netclosure"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "graph file format")
      ->check(CLI::IsMember({"edgelist", "matrix"}));
  app.add_flag("--json", o.json, "emit the report as JSON");
  app.add_option("--max-n", o.max_n, "size limit for exhaustive enumeration")->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "neighborhoods, regions, closures, subsumption, cycles");
  add_graph(analyze, o);

  auto* closure_cmd = app.add_subcommand("closure", "closure of a node set");
  add_graph(closure_cmd, o);
  closure_cmd->add_option("--set", o.set, "comma-separated labels")->required();

  auto* closed = app.add_subcommand("closed-sets", "every closed set");
  add_graph(closed, o);

  auto* gens = app.add_subcommand("generators", "minimal generators of a set's closure");
  add_graph(gens, o);
  gens->add_option("--set", o.set, "comma-separated labels")->required();

  auto* red = app.add_subcommand("reduce", "delete subsumed nodes down to the irreducible core");
  add_graph(red, o);
  red->add_flag("--trace", o.trace, "list every deletion");

  auto* cyc = app.add_subcommand("cycles", "chordless cycles");
  add_graph(cyc, o);
  cyc->add_option("--min-len", o.min_len, "shortest cycle length");
  cyc->add_option("--max-len", o.max_len, "longest cycle length (0: no bound)");
  cyc->add_option("--limit", o.limit, "stop after this many cycles");

  auto* sep = app.add_subcommand("separated", "are two node sets separated");
  add_graph(sep, o);
  sep->add_option("--x", o.x, "first set")->required();
  sep->add_option("--z", o.z, "second set")->required();

  auto* con = app.add_subcommand("connected", "is a node set connected");
  add_graph(con, o);
  con->add_option("--set", o.set, "comma-separated labels")->required();

  auto* del = app.add_subcommand("check-del", "continuity of deleting a tie");
  add_graph(del, o);
  del->add_option("--edge", o.edge, "x,z")->required();
  del->add_flag("--oracle", o.oracle, "also run the exhaustive check");

  auto* add = app.add_subcommand("check-add", "continuity of adding a tie");
  add_graph(add, o);
  add->add_option("--edge", o.edge, "x,z")->required();
  add->add_flag("--oracle", o.oracle, "run the exhaustive check");

  auto* map = app.add_subcommand("check-map", "monotone, continuous and surjective checks for a node map");
  add_graph(map, o);
  map->add_option("target", o.target, "target graph file")->required();
  map->add_option("--map", o.map, "node map file")->required();

  auto* aud = app.add_subcommand("audit", "exhaustive cross-check of the calculus on small graphs");

  auto* sim = app.add_subcommand("simulate", "seeded continuous-change simulation");
  add_graph(sim, o);
  sim->add_option("--seed", o.seed, "generator seed");
  sim->add_option("--max-steps", o.max_steps, "step budget");
  sim->add_option("--mode", o.mode, "deletion-only or deletion-plus-triadic")
      ->check(CLI::IsMember({"deletion-only", "deletion-plus-triadic"}));
  sim->add_option("--p-add", o.p_add, "chance of a triadic addition per step");
  sim->add_option("--checker", o.checker, "oracle or fastpath")->check(CLI::IsMember({"oracle", "fastpath"}));
  sim->add_option("--cycle-cap", o.cycle_cap, "cap on counted chordless cycles per step");
  sim->add_option("--out", o.out, "trace file (default: stdout, no report)");

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  add_graph(dot, o);

  auto* exp = app.add_subcommand("export", "re-serialize a graph");
  add_graph(exp, o);
  exp->add_option("--to", o.to, "edgelist or matrix")->check(CLI::IsMember({"edgelist", "matrix"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (dot->parsed()) {
      out << format_dot(load(o, o.graph));
      return kOk;
    }
    if (exp->parsed()) {
      const auto s = load(o, o.graph);
      out << (parse_graph_format(o.to) == GraphFormat::Matrix ? format_matrix(s) : format_edge_list(s));
      return kOk;
    }
    if (sim->parsed() && (o.out.empty() || o.out == "-")) {
      cmd_simulate(o, out);
      return kOk;
    }

    std::optional<Report> report;
    if (analyze->parsed()) report = cmd_analyze(o);
    else if (closure_cmd->parsed()) report = cmd_closure(o);
    else if (closed->parsed()) report = cmd_closed_sets(o);
    else if (gens->parsed()) report = cmd_generators(o);
    else if (red->parsed()) report = cmd_reduce(o);
    else if (cyc->parsed()) report = cmd_cycles(o);
    else if (sep->parsed()) report = cmd_separated(o);
    else if (con->parsed()) report = cmd_connected(o);
    else if (del->parsed()) report = cmd_check_del(o);
    else if (add->parsed()) report = cmd_check_add(o);
    else if (map->parsed()) report = cmd_check_map(o);
    else if (aud->parsed()) report = cmd_audit(o);
    else if (sim->parsed()) report = cmd_simulate(o, out);

    out << (o.json ? report->doc.dump(2) + "\n" : render_text(report->doc));
    return report->exit;
  } catch (const SizeError& e) {
    err << "netclosure: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const std::exception& e) {
    err << "netclosure: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace netclosure::cli
