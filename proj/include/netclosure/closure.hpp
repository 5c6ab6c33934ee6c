#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netclosure/error.hpp"
#include "netclosure/system.hpp"

namespace netclosure {

using Mask = std::uint64_t;

/// Points outside Y that some member of Y has an arc to.
NodeSet neighborhood(const System& s, const NodeSet& y);
/// Y together with its neighborhood: the region Y dominates.
NodeSet region(const System& s, const NodeSet& y);
/// Neighborhood closure: every x whose region lies inside region(Y).
NodeSet closure(const System& s, const NodeSet& y);
bool is_closed(const System& s, const NodeSet& y);

inline NodeSet neighborhood(const System& s, NodeId v) { return neighborhood(s, s.singleton(v)); }
inline NodeSet region(const System& s, NodeId v) { return region(s, s.singleton(v)); }
inline NodeSet closure(const System& s, NodeId v) { return closure(s, s.singleton(v)); }

/// Precomputed singleton regions as 64-bit masks.
///
/// An explicit accelerator for the exhaustive kernels; every answer equals
/// the NodeSet operations above. Requires |P| <= 64.
class RegionTable {
 public:
  explicit RegionTable(const System& s);

  std::size_t size() const noexcept { return regions_.size(); }
  Mask full() const noexcept { return full_; }
  Mask singleton_region(std::uint32_t v) const { return regions_[v]; }

  Mask region(Mask y) const noexcept {
    Mask r = 0;
    for (Mask m = y; m; m &= m - 1) r |= regions_[static_cast<std::size_t>(__builtin_ctzll(m))];
    return r;
  }
  Mask neighborhood(Mask y) const noexcept { return region(y) & ~y; }
  Mask closure(Mask y) const noexcept {
    const Mask r = region(y);
    Mask out = 0;
    for (std::size_t x = 0; x < regions_.size(); ++x)
      if ((regions_[x] & ~r) == 0) out |= Mask{1} << x;
    return out;
  }

 private:
  std::vector<Mask> regions_;
  Mask full_ = 0;
};

Mask to_mask(const NodeSet& y);

/// Lexicographic comparison of two equal-cardinality masks on their sorted
/// member indices.
inline bool lex_less(Mask a, Mask b) noexcept {
  const Mask d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

/// Canonical order on masks: cardinality, then lexicographic on indices.
inline bool canonical_mask_less(Mask a, Mask b) noexcept {
  const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
  return ca != cb ? ca < cb : lex_less(a, b);
}

/// Visits every subset of {0..n-1} in canonical order. The visitor returns
/// false to stop early; the function returns false if it was stopped.
bool for_each_subset_canonical(std::size_t n, const std::function<bool(Mask)>& visit);

/// The Moore family of closed sets, canonically ordered.
struct ClosedSetFamily {
  std::vector<NodeSet> sets;

  std::size_t size() const noexcept { return sets.size(); }
  bool contains(const NodeSet& y) const;
};

ClosedSetFamily enumerate_closed_sets(const System& s, std::size_t max_n = kDefaultMaxN);
/// Closed sets as masks, canonically ordered.
std::vector<Mask> closed_masks(const System& s, std::size_t max_n = kDefaultMaxN);

/// Inclusion-minimal X within Y having the same closure as Y, canonical order.
std::vector<NodeSet> generators(const System& s, const NodeSet& y,
                                std::size_t max_n = kDefaultMaxN);

using ClosureFn = std::function<NodeSet(const NodeSet&)>;

enum class Axiom { Extensive, Monotone, Idempotent, IntersectionClosed };
std::string_view axiom_name(Axiom a);

struct AxiomResult {
  Axiom axiom;
  bool passed = true;
  std::optional<NodeSet> y;
  std::optional<NodeSet> z;
};

struct AxiomReport {
  bool exhaustive = true;
  std::size_t sets_checked = 0;
  std::array<AxiomResult, 4> results{
      AxiomResult{Axiom::Extensive, true, {}, {}}, AxiomResult{Axiom::Monotone, true, {}, {}},
      AxiomResult{Axiom::Idempotent, true, {}, {}}, AxiomResult{Axiom::IntersectionClosed, true, {}, {}}};

  bool all_passed() const;
  const AxiomResult& operator[](Axiom a) const { return results[static_cast<std::size_t>(a)]; }
};

struct AxiomOptions {
  std::size_t max_n = kDefaultMaxN;
  // Sampled mode, used when |P| > max_n.
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
};

/// Checks C1-C3 and intersection-closedness of any operator over s's ground set.
AxiomReport verify_closure_axioms(const System& s, const ClosureFn& op,
                                  const AxiomOptions& opts = {});
/// Same, for the neighborhood closure.
AxiomReport verify_closure_axioms(const System& s, const AxiomOptions& opts = {});

}  // namespace netclosure
