#include "netclosure/dynamics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "netclosure/closure.hpp"
#include "netclosure/cycles.hpp"
#include "netclosure/io.hpp"
#include "netclosure/reduction.hpp"
#include "netclosure/transform.hpp"

namespace netclosure {

Metrics metrics(const System& s, std::size_t cycle_cap) {
  Metrics m;
  const auto n = s.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : s.arcs()) {
    if (u < v || !s.has_arc(v, u)) {
      adj[u.index][v.index] = adj[v.index][u.index] = true;
      ++m.edge_count;
      ++degree[u.index];
      ++degree[v.index];
    }
  }
  m.symmetric_edge_count = s.symmetric_edges().size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  m.component_count = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj[i][j] && find(i) != find(j)) {
        parent[find(i)] = find(j);
        --m.component_count;
      }

  std::size_t wedges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    wedges += degree[i] * (degree[i] - (degree[i] ? 1 : 0)) / 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (adj[i][k] && adj[j][k]) ++m.triangle_count;
    }
  }
  m.closed_triad_ratio =
      wedges ? static_cast<double>(3 * m.triangle_count) / static_cast<double>(wedges) : 0.0;

  std::vector<bool> subsumed(n, false);
  for (const auto& p : subsumed_pairs(s)) subsumed[p.subsumed.index] = true;
  m.subsumed_node_count = static_cast<std::size_t>(std::count(subsumed.begin(), subsumed.end(), true));
  m.core_size = reduce(s).core_nodes.size();

  const auto cycles = chordless_cycles(s, 4, 0, cycle_cap);
  m.kcycle_count = cycles.cycles.size();
  m.kcycles_capped = cycles.truncated;
  return m;
}

void SimConfig::validate(const System& s) const {
  if (!(p_add >= 0.0 && p_add <= 1.0)) throw UsageError("p_add must lie in [0, 1]");
  if (mode == SimMode::DeletionOnly && p_add != 0.0)
    throw UsageError("p_add must be 0 in deletion-only mode");
  if (oracle_max_n > kHardMaxN) throw SizeError("simulation oracle", s.size(), kHardMaxN);
  if (checker == ContinuityChecker::Oracle) require_enumerable(s.size(), oracle_max_n, "simulation oracle");
}

std::uint64_t SimRng::below(std::uint64_t n) {
  if (n == 0) throw UsageError("below(0)");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % n;
  }
}

double SimRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t graph_digest(const System& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_edge_list(s)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

bool deletion_continuous_oracle(const System& s, Edge e, std::size_t max_n) {
  return is_continuous(mutation_map(s, {EdgeMutation::Kind::Delete, e.first, e.second, true}), max_n)
      .continuous;
}

}  // namespace

SimTrace run(const System& s, const SimConfig& cfg) {
  cfg.validate(s);
  SimTrace trace{s, cfg, graph_digest(s), {}, s};
  SimRng rng(cfg.seed);
  System current = s;
  const bool oracle_fits = s.size() <= cfg.oracle_max_n;

  for (std::size_t index = 1;; ++index) {
    SimStep step;
    step.index = index;

    if (index > cfg.max_steps) {
      step.index = index - 1;
      step.halt = HaltReason::StepLimit;
      step.metrics = metrics(current, cfg.metric_cycle_cap);
      trace.steps.push_back(std::move(step));
      break;
    }

    if (cfg.mode == SimMode::DeletionPlusTriadic) {
      const double draw = rng.unit();
      const auto triads = triadic_candidates(current);
      if (draw < cfg.p_add && !triads.empty()) {
        const auto e = triads[rng.below(triads.size())];
        const EdgeMutation add{EdgeMutation::Kind::Add, e.first, e.second, true};
        if (oracle_fits) step.add_continuous = is_continuous(mutation_map(current, add), cfg.oracle_max_n).continuous;
        current = apply_mutation(current, add);
        step.op = StepOp::Add;
        step.edge = e;
        step.metrics = metrics(current, cfg.metric_cycle_cap);
        trace.steps.push_back(std::move(step));
        continue;
      }
    }

    std::vector<Edge> deletable;
    for (auto e : current.symmetric_edges()) {
      bool continuous = false;
      if (cfg.checker == ContinuityChecker::Oracle) {
        continuous = deletion_continuous_oracle(current, e, cfg.oracle_max_n);
      } else {
        continuous = check_edge_deletion(current, e.first, e.second).verdict ==
                     DeletionVerdict::Continuous;
        if (oracle_fits && continuous != deletion_continuous_oracle(current, e, cfg.oracle_max_n))
          step.disagreements.push_back(e);
      }
      if (continuous) deletable.push_back(e);
    }
    step.candidates = deletable.size();

    if (deletable.empty()) {
      step.index = index - 1;
      step.halt = HaltReason::Fixpoint;
      step.metrics = metrics(current, cfg.metric_cycle_cap);
      trace.steps.push_back(std::move(step));
      break;
    }
    const auto e = deletable[rng.below(deletable.size())];
    current = apply_mutation(current, {EdgeMutation::Kind::Delete, e.first, e.second, true});
    step.op = StepOp::Delete;
    step.edge = e;
    step.metrics = metrics(current, cfg.metric_cycle_cap);
    trace.steps.push_back(std::move(step));
  }
  trace.final_system = current;
  return trace;
}

std::string_view to_string(SimMode m) {
  return m == SimMode::DeletionOnly ? "deletion-only" : "deletion-plus-triadic";
}

std::string_view to_string(ContinuityChecker c) {
  return c == ContinuityChecker::Oracle ? "oracle" : "fastpath";
}

std::string_view to_string(StepOp op) {
  switch (op) {
    case StepOp::Delete: return "DELETE";
    case StepOp::Add: return "ADD";
    case StepOp::Halt: return "HALT";
  }
  return "?";
}

std::string_view to_string(HaltReason r) {
  return r == HaltReason::Fixpoint ? "FIXPOINT" : "STEP_LIMIT";
}

SimMode parse_sim_mode(std::string_view text) {
  if (text == "deletion-only") return SimMode::DeletionOnly;
  if (text == "deletion-plus-triadic") return SimMode::DeletionPlusTriadic;
  throw UsageError("unknown simulation mode '" + std::string(text) + "'");
}

ContinuityChecker parse_checker(std::string_view text) {
  if (text == "oracle") return ContinuityChecker::Oracle;
  if (text == "fastpath") return ContinuityChecker::FastPath;
  throw UsageError("unknown continuity checker '" + std::string(text) + "'");
}

std::string format_metric(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

namespace {

std::string edge_text(const System& s, Edge e) { return s.label(e.first) + "--" + s.label(e.second); }

}  // namespace

std::string format_trace(const SimTrace& trace) {
  const auto& cfg = trace.config;
  const auto& s = trace.input;
  char digest[24];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(trace.digest));

  std::string out = "#netclosure-trace v1";
  out += " rng=" + std::string(kRngContract);
  out += " seed=" + std::to_string(cfg.seed);
  out += " max_steps=" + std::to_string(cfg.max_steps);
  out += " mode=" + std::string(to_string(cfg.mode));
  out += " p_add=" + format_metric(cfg.p_add);
  out += " checker=" + std::string(to_string(cfg.checker));
  out += " cycle_cap=" + std::to_string(cfg.metric_cycle_cap);
  out += " oracle_max_n=" + std::to_string(cfg.oracle_max_n);
  out += " nodes=" + std::to_string(s.size());
  out += " digest=fnv1a64:" + std::string(digest) + "\n";

  for (const auto& step : trace.steps) {
    const auto& m = step.metrics;
    out += std::to_string(step.index) + '\t' + std::string(to_string(step.halt ? StepOp::Halt : step.op)) + '\t';
    out += step.halt ? std::string(to_string(*step.halt)) : edge_text(s, *step.edge);
    out += '\t' + std::to_string(m.edge_count);
    out += '\t' + std::to_string(m.symmetric_edge_count);
    out += '\t' + std::to_string(m.component_count);
    out += '\t' + std::to_string(m.subsumed_node_count);
    out += '\t' + std::to_string(m.core_size);
    out += '\t' + std::to_string(m.kcycle_count) + (m.kcycles_capped ? "+" : "");
    out += '\t' + std::to_string(m.triangle_count);
    out += '\t' + format_metric(m.closed_triad_ratio);
    out += '\t' + (step.candidates ? std::to_string(*step.candidates) : std::string("-"));
    out += '\t';
    out += step.add_continuous ? (*step.add_continuous ? "1" : "0") : "-";
    out += '\t';
    if (step.disagreements.empty()) {
      out += '-';
    } else {
      for (std::size_t i = 0; i < step.disagreements.size(); ++i) {
        if (i) out += ',';
        out += edge_text(s, step.disagreements[i]);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace netclosure
