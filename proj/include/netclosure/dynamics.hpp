#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "netclosure/error.hpp"
#include "netclosure/system.hpp"

namespace netclosure {

struct Metrics {
  std::size_t edge_count = 0;  // unordered pairs joined by at least one arc
  std::size_t symmetric_edge_count = 0;
  std::size_t component_count = 0;  // over the symmetrized relation
  std::size_t subsumed_node_count = 0;
  std::size_t core_size = 0;
  std::size_t kcycle_count = 0;
  bool kcycles_capped = false;
  std::size_t triangle_count = 0;
  double closed_triad_ratio = 0.0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

Metrics metrics(const System& s, std::size_t cycle_cap = 1000);

enum class SimMode { DeletionOnly, DeletionPlusTriadic };
enum class ContinuityChecker { Oracle, FastPath };

struct SimConfig {
  std::uint64_t seed = 1;
  std::size_t max_steps = 1000;
  SimMode mode = SimMode::DeletionOnly;
  double p_add = 0.0;
  ContinuityChecker checker = ContinuityChecker::Oracle;
  std::size_t metric_cycle_cap = 1000;
  /// Largest ground set on which the exhaustive continuity test runs.
  std::size_t oracle_max_n = kDefaultMaxN;

  /// Throws UsageError for inconsistent settings, SizeError when the oracle
  /// checker is requested on a ground set larger than oracle_max_n.
  void validate(const System& s) const;
};

enum class StepOp { Delete, Add, Halt };
enum class HaltReason { Fixpoint, StepLimit };

struct SimStep {
  std::size_t index = 0;
  StepOp op = StepOp::Halt;
  std::optional<Edge> edge;
  std::optional<HaltReason> halt;
  Metrics metrics;
  /// Continuous symmetric-edge deletions available before this step's op.
  /// Not computed on ADD steps.
  std::optional<std::size_t> candidates;
  /// Exhaustive continuity of an addition, when the oracle could run.
  std::optional<bool> add_continuous;
  /// Edges on which the fast path and the oracle disagreed (fast-path runs).
  std::vector<Edge> disagreements;
};

struct SimTrace {
  System input;
  SimConfig config;
  std::uint64_t digest = 0;
  std::vector<SimStep> steps;
  System final_system;
};

/// Seeded generator with a fixed sequence contract: mt19937_64 words;
/// below(n) rejects words under 2^64 mod n and returns word mod n; unit()
/// is the top 53 bits of one word scaled by 2^-53.
class SimRng {
 public:
  explicit SimRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n);
  double unit();

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::string_view kRngContract = "mt19937_64;below=reject-mod;unit=top53";

/// The trace is a pure function of (s, cfg).
SimTrace run(const System& s, const SimConfig& cfg);

/// FNV-1a 64 over the canonical edge-list rendering.
std::uint64_t graph_digest(const System& s);

std::string_view to_string(SimMode m);
std::string_view to_string(ContinuityChecker c);
std::string_view to_string(StepOp op);
std::string_view to_string(HaltReason r);
SimMode parse_sim_mode(std::string_view text);
ContinuityChecker parse_checker(std::string_view text);

/// Six significant digits, as every report prints floating-point metrics.
std::string format_metric(double value);

/// Line-delimited trace: one header line, one line per step, HALT last.
std::string format_trace(const SimTrace& trace);

}  // namespace netclosure
