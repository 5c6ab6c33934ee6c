#include "netclosure/closure.hpp"

#include <algorithm>
#include <random>

namespace netclosure {

NodeSet neighborhood(const System& s, const NodeSet& y) {
  return region(s, y) - y;
}

NodeSet region(const System& s, const NodeSet& y) {
  s.check(y);
  auto r = y;
  for (auto v : y.nodes()) r |= s.row(v);
  return r;
}

NodeSet closure(const System& s, const NodeSet& y) {
  const auto r = region(s, y);
  auto out = s.empty_set();
  for (auto x : s.nodes()) {
    if (!r.contains(x)) continue;
    if (s.row(x).is_subset_of(r)) out.insert(x);
  }
  return out;
}

bool is_closed(const System& s, const NodeSet& y) { return closure(s, y) == y; }

RegionTable::RegionTable(const System& s) {
  if (s.size() > 64) throw UsageError("region table requires at most 64 nodes");
  regions_.resize(s.size());
  for (auto v : s.nodes()) {
    Mask r = Mask{1} << v.index;
    for (auto w : s.row(v).nodes()) r |= Mask{1} << w.index;
    regions_[v.index] = r;
  }
  full_ = s.size() == 64 ? ~Mask{0} : (Mask{1} << s.size()) - 1;
}

Mask to_mask(const NodeSet& y) {
  if (y.arity() > 64) throw UsageError("mask conversion requires at most 64 nodes");
  Mask m = 0;
  for (auto v : y.nodes()) m |= Mask{1} << v.index;
  return m;
}

bool for_each_subset_canonical(std::size_t n, const std::function<bool(Mask)>& visit) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask m = 0;
      for (auto i : idx) m |= Mask{1} << i;
      if (!visit(m)) return false;
      // Advance to the next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

bool ClosedSetFamily::contains(const NodeSet& y) const {
  return std::find(sets.begin(), sets.end(), y) != sets.end();
}

std::vector<Mask> closed_masks(const System& s, std::size_t max_n) {
  require_enumerable(s.size(), max_n, "closed-set enumeration");
  const RegionTable table(s);
  std::vector<Mask> out;
  for_each_subset_canonical(s.size(), [&](Mask m) {
    if (table.closure(m) == m) out.push_back(m);
    return true;
  });
  return out;
}

ClosedSetFamily enumerate_closed_sets(const System& s, std::size_t max_n) {
  ClosedSetFamily family;
  for (auto m : closed_masks(s, max_n)) family.sets.push_back(s.from_mask(m));
  return family;
}

std::vector<NodeSet> generators(const System& s, const NodeSet& y, std::size_t max_n) {
  s.check(y);
  const auto members = y.nodes();
  require_enumerable(members.size(), max_n, "generator search");
  const auto target = closure(s, y);

  auto expand = [&](Mask local) {
    auto x = s.empty_set();
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((local >> i) & 1U) x.insert(members[i]);
    return x;
  };

  std::vector<NodeSet> out;
  for_each_subset_canonical(members.size(), [&](Mask local) {
    if (closure(s, expand(local)) != target) return true;
    // Sets with the target closure form an up-set inside Y, so minimality
    // only needs single-element removals.
    for (Mask m = local; m; m &= m - 1) {
      if (closure(s, expand(local & ~(m & (~m + 1)))) == target) return true;
    }
    out.push_back(expand(local));
    return true;
  });
  return out;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Extensive: return "C1-extensive";
    case Axiom::Monotone: return "C2-monotone";
    case Axiom::Idempotent: return "C3-idempotent";
    case Axiom::IntersectionClosed: return "intersection-closed";
  }
  return "?";
}

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

namespace {

void fail(AxiomReport& report, Axiom a, const System& s, Mask y, std::optional<Mask> z) {
  auto& r = report.results[static_cast<std::size_t>(a)];
  if (!r.passed) return;
  r.passed = false;
  r.y = s.from_mask(y);
  if (z) r.z = s.from_mask(*z);
}

AxiomReport verify_exhaustive(const System& s, const std::function<Mask(Mask)>& op) {
  const std::size_t n = s.size();
  const Mask count = Mask{1} << n;
  std::vector<Mask> table(count);
  for (Mask m = 0; m < count; ++m) table[m] = op(m);

  AxiomReport report;
  report.sets_checked = count;
  std::vector<Mask> order;
  order.reserve(count);
  for_each_subset_canonical(n, [&](Mask m) {
    order.push_back(m);
    return true;
  });

  for (auto y : order) {
    if ((y & ~table[y]) != 0) fail(report, Axiom::Extensive, s, y, std::nullopt);
    if (table[table[y]] != table[y]) fail(report, Axiom::Idempotent, s, y, std::nullopt);
  }

  if (n <= 12) {
    for (auto z : order) {
      // Every Y inside Z, including Z itself and the empty set.
      for (Mask y = z;; y = (y - 1) & z) {
        if ((table[y] & ~table[z]) != 0) fail(report, Axiom::Monotone, s, y, z);
        if (y == 0) break;
      }
    }
  } else {
    // Monotonicity on single-element extensions implies it on all chains.
    for (auto y : order) {
      for (std::size_t v = 0; v < n; ++v) {
        const Mask z = y | (Mask{1} << v);
        if (z != y && (table[y] & ~table[z]) != 0) fail(report, Axiom::Monotone, s, y, z);
      }
    }
  }

  std::vector<Mask> closed;
  for (auto y : order)
    if (table[y] == y) closed.push_back(y);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i + 1; j < closed.size(); ++j) {
      const Mask meet = closed[i] & closed[j];
      if (table[meet] != meet) {
        fail(report, Axiom::IntersectionClosed, s, closed[i], closed[j]);
        return report;
      }
    }
  }
  return report;
}

AxiomReport verify_sampled(const System& s, const ClosureFn& op, const AxiomOptions& opts) {
  AxiomReport report;
  report.exhaustive = false;
  std::mt19937_64 rng(opts.seed);
  auto random_set = [&] {
    auto y = s.empty_set();
    for (auto v : s.nodes())
      if (rng() & 1U) y.insert(v);
    return y;
  };
  auto mark = [&](Axiom a, const NodeSet& y, std::optional<NodeSet> z) {
    auto& r = report.results[static_cast<std::size_t>(a)];
    if (!r.passed) return;
    r.passed = false;
    r.y = y;
    r.z = std::move(z);
  };
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const auto y = random_set();
    const auto z = y | random_set();
    const auto cy = op(y), cz = op(z);
    if (!y.is_subset_of(cy)) mark(Axiom::Extensive, y, std::nullopt);
    if (op(cy) != cy) mark(Axiom::Idempotent, y, std::nullopt);
    if (!cy.is_subset_of(cz)) mark(Axiom::Monotone, y, z);
    const auto cw = op(random_set());
    const auto meet = cy & cw;
    if (op(meet) != meet) mark(Axiom::IntersectionClosed, cy, cw);
    ++report.sets_checked;
  }
  return report;
}

}  // namespace

AxiomReport verify_closure_axioms(const System& s, const ClosureFn& op, const AxiomOptions& opts) {
  if (opts.max_n > kHardMaxN) throw SizeError("axiom verification", s.size(), kHardMaxN);
  if (s.size() > opts.max_n) return verify_sampled(s, op, opts);
  return verify_exhaustive(s, [&](Mask m) { return to_mask(op(s.from_mask(m))); });
}

AxiomReport verify_closure_axioms(const System& s, const AxiomOptions& opts) {
  if (opts.max_n > kHardMaxN) throw SizeError("axiom verification", s.size(), kHardMaxN);
  if (s.size() > opts.max_n)
    return verify_sampled(s, [&](const NodeSet& y) { return closure(s, y); }, opts);
  const RegionTable table(s);
  return verify_exhaustive(s, [&](Mask m) { return table.closure(m); });
}

}  // namespace netclosure
