#include "netclosure/oracle.hpp"

#include <algorithm>
#include <map>

#include "netclosure/io.hpp"
#include "netclosure/reduction.hpp"

namespace netclosure::oracle {

Mask region(const System& s, Mask y) {
  Mask r = y;
  for (auto v : s.nodes()) {
    if (!((y >> v.index) & 1U)) continue;
    for (auto w : s.nodes())
      if (s.has_arc(v, w)) r |= Mask{1} << w.index;
  }
  return r;
}

Mask closure(const System& s, Mask y) {
  const Mask ry = region(s, y);
  Mask out = 0;
  for (auto x : s.nodes()) {
    const Mask rx = region(s, Mask{1} << x.index);
    if ((rx & ~ry) == 0) out |= Mask{1} << x.index;
  }
  return out;
}

namespace {

std::vector<Mask> singleton_regions(const System& s) {
  std::vector<Mask> out;
  for (auto v : s.nodes()) out.push_back(region(s, Mask{1} << v.index));
  return out;
}

Mask closure_from(const std::vector<Mask>& singles, Mask y) {
  Mask ry = 0;
  for (std::size_t v = 0; v < singles.size(); ++v)
    if ((y >> v) & 1U) ry |= singles[v];
  Mask out = 0;
  for (std::size_t x = 0; x < singles.size(); ++x)
    if ((singles[x] & ~ry) == 0) out |= Mask{1} << x;
  return out;
}

Mask region_from(const std::vector<Mask>& singles, Mask y) {
  Mask r = 0;
  for (std::size_t v = 0; v < singles.size(); ++v)
    if ((y >> v) & 1U) r |= singles[v];
  return r;
}

const std::vector<Mask>& canonical_order(std::size_t n) {
  static std::map<std::size_t, std::vector<Mask>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Mask> order((Mask{1} << n));
  for (Mask m = 0; m < order.size(); ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(), canonical_mask_less);
  return cache.emplace(n, std::move(order)).first->second;
}

}  // namespace

std::vector<Mask> closure_table(const System& s) {
  require_enumerable(s.size(), 20, "closure table");
  const auto singles = singleton_regions(s);
  std::vector<Mask> table(Mask{1} << s.size());
  for (Mask m = 0; m < table.size(); ++m) table[m] = closure_from(singles, m);
  return table;
}

// ------------------------------------------------------------ transforms

TableTransform::TableTransform(System source, System target, std::vector<Mask> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  require_enumerable(source_.size(), 20, "table transform");
  if (target_.size() > 64) throw SizeError("table transform target", target_.size(), 64);
  if (table_.size() != (Mask{1} << source_.size()))
    throw UsageError("table transform needs one entry per source subset");
  const Mask full = target_.size() == 64 ? ~Mask{0} : (Mask{1} << target_.size()) - 1;
  for (auto m : table_)
    if (m & ~full) throw UsageError("table transform entry outside the target");
}

TableTransform TableTransform::from_node_map(const NodeMap& f) {
  const auto n = f.source().size();
  require_enumerable(n, 20, "table transform");
  std::vector<Mask> table(Mask{1} << n);
  for (Mask m = 0; m < table.size(); ++m) {
    Mask out = 0;
    for (std::uint32_t v = 0; v < n; ++v)
      if ((m >> v) & 1U)
        if (auto img = f.image(NodeId{v})) out |= Mask{1} << img->index;
    table[m] = out;
  }
  return TableTransform(f.source(), f.target(), std::move(table));
}

MonotoneVerdict is_monotone(const TableTransform& f) {
  require_enumerable(f.source().size(), 10, "monotonicity check");
  MonotoneVerdict v;
  for (auto larger : canonical_order(f.source().size())) {
    for (Mask smaller = larger;; smaller = (smaller - 1) & larger) {
      if (f(smaller) & ~f(larger)) {
        v.monotone = false;
        v.smaller = f.source().from_mask(smaller);
        v.larger = f.source().from_mask(larger);
        return v;
      }
      if (smaller == 0) break;
    }
  }
  return v;
}

ContinuityVerdict continuous(const TableTransform& f, std::size_t max_n) {
  require_enumerable(f.source().size(), max_n, "oracle continuity");
  require_enumerable(f.target().size(), max_n, "oracle continuity target");
  const auto src = closure_table(f.source());
  const auto dst = closure_table(f.target());
  ContinuityVerdict verdict;
  for (auto y : canonical_order(f.source().size())) {
    const Mask extra = f(src[y]) & ~dst[f(y)];
    if (!extra) continue;
    verdict.continuous = false;
    verdict.witness = f.source().from_mask(y);
    verdict.offending_element = NodeId{static_cast<std::uint32_t>(__builtin_ctzll(extra))};
    break;
  }
  return verdict;
}

ContinuityVerdict continuous(const NodeMap& f, std::size_t max_n) {
  require_enumerable(f.source().size(), max_n, "oracle continuity");
  return continuous(TableTransform::from_node_map(f), max_n);
}

// ----------------------------------------------------------- enumeration

GraphEnumerator::GraphEnumerator(std::size_t n, bool symmetric_only)
    : n_(n), symmetric_(symmetric_only) {
  if (symmetric_only && n > 6) throw SizeError("symmetric graph enumeration", n, 6);
  if (!symmetric_only && n > 4) throw SizeError("directed graph enumeration", n, 4);
  for (std::uint32_t i = 0; i < n; ++i) {
    labels_.push_back("v" + std::to_string(i));
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j || (symmetric_only && j < i)) continue;
      slots_.emplace_back(NodeId{i}, NodeId{j});
    }
  }
  count_ = std::uint64_t{1} << slots_.size();
}

std::optional<System> GraphEnumerator::next() {
  if (cursor_ >= count_) return std::nullopt;
  System::Builder b;
  for (const auto& l : labels_) b.add_node(l);
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (!((cursor_ >> k) & 1U)) continue;
    if (symmetric_)
      b.add_edge(slots_[k].first, slots_[k].second);
    else
      b.add_arc(slots_[k].first, slots_[k].second);
  }
  ++cursor_;
  return b.build();
}

std::string encode_instance(const System& s) {
  std::string out = "n=" + std::to_string(s.size()) + ";";
  bool first = true;
  auto add = [&](const std::string& piece) {
    if (!first) out += ',';
    out += piece;
    first = false;
  };
  for (auto [u, v] : s.symmetric_edges()) add(s.label(u) + "--" + s.label(v));
  for (auto [u, v] : s.arcs())
    if (!s.has_arc(v, u)) add(s.label(u) + "->" + s.label(v));
  return out;
}

const ClaimSummary* AuditReport::claim(std::string_view id) const {
  for (const auto& c : claims)
    if (c.claim == id) return &c;
  return nullptr;
}

// ----------------------------------------------------------------- audit

namespace {

struct Instance {
  System s;
  std::vector<Mask> singles;
  std::vector<Mask> cl;

  explicit Instance(System sys) : s(std::move(sys)), singles(singleton_regions(s)) {
    cl.resize(Mask{1} << s.size());
    for (Mask m = 0; m < cl.size(); ++m) cl[m] = closure_from(singles, m);
  }
  std::size_t n() const { return s.size(); }
  Mask full() const { return (Mask{1} << s.size()) - 1; }
};

// Node-level map between two instances; -1 marks deletion.
struct MapInstance {
  std::string description;
  Instance target;
  std::vector<int> images;
};

Mask image_of(const std::vector<int>& images, Mask y) {
  Mask out = 0;
  for (std::size_t v = 0; v < images.size(); ++v)
    if (((y >> v) & 1U) && images[v] >= 0) out |= Mask{1} << images[v];
  return out;
}

std::optional<Mask> first_violation(const Instance& src, const Instance& dst,
                                     const std::vector<int>& images) {
  for (auto y : canonical_order(src.n()))
    if (image_of(images, src.cl[y]) & ~dst.cl[image_of(images, y)]) return y;
  return std::nullopt;
}

bool surjective(const Instance& src, const Instance& dst, const std::vector<int>& images) {
  const Mask reach = image_of(images, src.full());
  for (Mask y = 0; y < dst.cl.size(); ++y)
    if (dst.cl[y] == y && (y & ~reach)) return false;
  return true;
}

std::string set_text(const System& s, Mask y) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t v = 0; v < s.size(); ++v) {
    if (!((y >> v) & 1U)) continue;
    if (!first) out += ',';
    out += s.label(NodeId{v});
    first = false;
  }
  return out + "}";
}

std::string edge_text(const System& s, NodeId u, NodeId v) { return s.label(u) + "--" + s.label(v); }

std::vector<int> identity_images(std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i);
  return out;
}

// Single symmetric-edge deletions and single node deletions out of `src`.
std::vector<MapInstance> elementary_maps(const Instance& src) {
  std::vector<MapInstance> out;
  for (auto [u, v] : src.s.symmetric_edges())
    out.push_back({"delete " + edge_text(src.s, u, v), Instance(src.s.without_arcs({{u, v}, {v, u}})),
                   identity_images(src.n())});
  for (auto v : src.s.nodes()) {
    std::vector<int> images(src.n());
    for (std::size_t i = 0; i < src.n(); ++i)
      images[i] = i < v.index ? static_cast<int>(i) : i == v.index ? -1 : static_cast<int>(i) - 1;
    out.push_back({"remove " + src.s.label(v), Instance(src.s.without_node(v)), std::move(images)});
  }
  return out;
}

class Auditor {
 public:
  explicit Auditor(std::size_t max_n) { report_.max_n = max_n; }

  AuditReport finish() { return std::move(report_); }

  void declare(const std::string& id, const std::string& statement) {
    index_[id] = report_.claims.size();
    report_.claims.push_back({id, statement, 0, 0});
  }
  void checked(const std::string& id) { ++report_.claims[index_.at(id)].instances; }
  void finding(const std::string& id, std::string instance, std::string expected,
               std::string observed, std::string witness) {
    auto& c = report_.claims[index_.at(id)];
    ++c.findings;
    if (!directed_) ++c.symmetric_findings;
    report_.findings.push_back({id, std::move(instance), std::move(expected), std::move(observed),
                                std::move(witness), directed_});
  }

  void on_graph(bool directed) { directed_ = directed; }

  void definitional(const Instance& g);
  void separation_preserved(const Instance& g);
  void edge_deletion(const Instance& g);
  void images_distribute(const Instance& g);
  void map_properties(const Instance& g, bool compositions);
  void triadic_addition(const Instance& g);
  void core_characterization(const Instance& g);
  void twin_edges(const Instance& g);

 private:
  AuditReport report_;
  std::map<std::string, std::size_t> index_;
  bool directed_ = false;
};

void Auditor::definitional(const Instance& g) {
  const auto& s = g.s;
  const auto inst = encode_instance(s);
  const auto& order = canonical_order(g.n());

  checked("closure-operator");
  bool failed = false;
  for (auto y : order) {
    if (failed) break;
    if (y & ~g.cl[y]) {
      finding("closure-operator", inst, "Y within closure(Y)", "not extensive", set_text(s, y));
      failed = true;
    } else if (g.cl[g.cl[y]] != g.cl[y]) {
      finding("closure-operator", inst, "closure idempotent", "not idempotent", set_text(s, y));
      failed = true;
    }
    for (std::size_t v = 0; v < g.n() && !failed; ++v) {
      const Mask z = y | (Mask{1} << v);
      if (g.cl[y] & ~g.cl[z]) {
        finding("closure-operator", inst, "closure monotone", "not monotone",
                set_text(s, y) + " within " + set_text(s, z));
        failed = true;
      }
    }
  }
  for (Mask a = 0; a < g.cl.size() && !failed; ++a) {
    if (g.cl[a] != a) continue;
    for (Mask b = a + 1; b < g.cl.size(); ++b) {
      if (g.cl[b] == b && g.cl[a & b] != (a & b)) {
        finding("closure-operator", inst, "closed sets intersection-closed", "meet not closed",
                set_text(s, a) + " & " + set_text(s, b));
        failed = true;
        break;
      }
    }
  }

  checked("closure-order-matches-region-order");
  std::vector<Mask> rg(g.cl.size());
  for (Mask m = 0; m < rg.size(); ++m) rg[m] = region_from(g.singles, m);
  for (auto y : order) {
    bool stop = false;
    for (auto z : order) {
      const bool by_closure = (g.cl[y] & ~g.cl[z]) == 0;
      const bool by_region = (rg[y] & ~rg[z]) == 0;
      if (by_closure != by_region) {
        finding("closure-order-matches-region-order", inst, "equivalent inclusions",
                by_closure ? "closures nested, regions not" : "regions nested, closures not",
                set_text(s, y) + " vs " + set_text(s, z));
        stop = true;
        break;
      }
    }
    if (stop) break;
  }

  checked("point-in-closure-of-own-neighbors");
  for (std::size_t y = 0; y < g.n(); ++y) {
    const Mask nb = g.singles[y] & ~(Mask{1} << y);
    if (!nb) continue;
    bool found = false;
    for (Mask x = nb;; x = (x - 1) & nb) {
      if ((g.cl[x] >> y) & 1U) {
        found = true;
        break;
      }
      if (x == 0) break;
    }
    if (!found)
      finding("point-in-closure-of-own-neighbors", inst, "some X within y.eta closes over y",
              "no such X", s.label(NodeId{static_cast<std::uint32_t>(y)}));
  }

  checked("separation-by-four-intersections");
  for (auto x : order) {
    bool stop = false;
    const Mask xn = rg[x] & ~x;
    for (auto z : order) {
      const Mask zn = rg[z] & ~z;
      const bool separated = (rg[x] & rg[z]) == 0;
      const bool four_empty = !(x & z) && !(x & zn) && !(xn & z) && !(xn & zn);
      if (separated != four_empty) {
        finding("separation-by-four-intersections", inst, "equivalent", "differ",
                set_text(s, x) + " vs " + set_text(s, z));
        stop = true;
        break;
      }
    }
    if (stop) break;
  }
}

void Auditor::separation_preserved(const Instance& g) {
  const auto& s = g.s;
  for (auto x : s.nodes()) {
    for (auto z : s.nodes()) {
      if (!(x < z) || s.adjacent_either(x, z)) continue;
      const Mask rx = g.singles[x.index], rz = g.singles[z.index];
      if (rx & rz) continue;
      if (s.row(x).empty() || s.row(z).empty()) continue;
      checked("continuous-maps-preserve-separation");
      const Instance added(s.with_arcs({{x, z}, {z, x}}));
      if (!first_violation(g, added, identity_images(g.n())))
        finding("continuous-maps-preserve-separation", encode_instance(s) + ";add=" + edge_text(s, x, z),
                "joining separated points is discontinuous", "continuous", "-");
    }
  }
}

void Auditor::edge_deletion(const Instance& g) {
  const auto& s = g.s;
  for (auto [x, z] : s.symmetric_edges()) {
    checked("edge-deletion-characterization");
    const auto fast = check_edge_deletion(s, x, z);
    const Instance deleted(s.without_arcs({{x, z}, {z, x}}));
    const auto violation = first_violation(g, deleted, identity_images(g.n()));
    const bool fast_continuous = fast.verdict == DeletionVerdict::Continuous;
    if (fast_continuous != !violation.has_value())
      finding("edge-deletion-characterization", encode_instance(s) + ";delete=" + edge_text(s, x, z),
              std::string(to_string(fast.verdict)), violation ? "DISCONTINUOUS" : "CONTINUOUS",
              violation ? set_text(s, *violation) : "-");
  }
}

void Auditor::images_distribute(const Instance& g) {
  for (const auto& f : elementary_maps(g)) {
    checked("atomistic-images-distribute");
    bool stop = false;
    for (Mask x = 0; x < g.cl.size() && !stop; ++x) {
      for (Mask z = 0; z < g.cl.size(); ++z) {
        const Mask fx = image_of(f.images, x), fz = image_of(f.images, z);
        if (image_of(f.images, x & z) != (fx & fz) || image_of(f.images, x | z) != (fx | fz)) {
          finding("atomistic-images-distribute", encode_instance(g.s) + ";" + f.description,
                  "images distribute over meet and join", "differ",
                  set_text(g.s, x) + " , " + set_text(g.s, z));
          stop = true;
          break;
        }
      }
    }
  }
}

void Auditor::map_properties(const Instance& g, bool compositions) {
  const auto inst = encode_instance(g.s);
  for (const auto& f : elementary_maps(g)) {
    const bool f_cont = !first_violation(g, f.target, f.images);
    const bool f_surj = surjective(g, f.target, f.images);
    if (f_cont) {
      checked("closed-image-absorbs-closure");
      for (Mask y = 0; y < g.cl.size(); ++y) {
        const Mask fy = image_of(f.images, y);
        if (f.target.cl[fy] == fy && image_of(f.images, g.cl[y]) != fy) {
          finding("closed-image-absorbs-closure", inst + ";" + f.description,
                  "closure(Y).f = Y.f when Y.f closed", "differs", set_text(g.s, y));
          break;
        }
      }

      checked("equal-closures-give-equal-image-closures");
      std::map<Mask, Mask> by_class;
      for (Mask y = 0; y < g.cl.size(); ++y) {
        const Mask image_closure = f.target.cl[image_of(f.images, y)];
        auto [it, fresh] = by_class.emplace(g.cl[y], image_closure);
        if (!fresh && it->second != image_closure) {
          finding("equal-closures-give-equal-image-closures", inst + ";" + f.description,
                  "equal image closures", "differ", set_text(g.s, y));
          break;
        }
      }

      if (f_surj) {
        checked("closed-sets-have-closed-preimages");
        for (Mask t = 0; t < f.target.cl.size(); ++t) {
          if (f.target.cl[t] != t) continue;
          bool found = false;
          for (Mask y = 0; y < g.cl.size() && !found; ++y)
            found = g.cl[y] == y && image_of(f.images, y) == t;
          if (!found) {
            finding("closed-sets-have-closed-preimages", inst + ";" + f.description,
                    "closed preimage exists", "none", set_text(f.target.s, t));
            break;
          }
        }
      }
    }

    if (!compositions) continue;
    for (const auto& h : elementary_maps(f.target)) {
      const bool h_cont = !first_violation(f.target, h.target, h.images);
      std::vector<int> composed(g.n());
      for (std::size_t v = 0; v < g.n(); ++v)
        composed[v] = f.images[v] < 0 ? -1 : h.images[static_cast<std::size_t>(f.images[v])];
      const auto desc = inst + ";" + f.description + " then " + h.description;
      if (f_cont && h_cont) {
        checked("composition-preserves-continuity");
        if (auto y = first_violation(g, h.target, composed))
          finding("composition-preserves-continuity", desc, "continuous", "discontinuous",
                  set_text(g.s, *y));
      }
      if (h_cont && f_surj && surjective(f.target, h.target, h.images)) {
        checked("composition-preserves-surjectivity");
        if (!surjective(g, h.target, composed))
          finding("composition-preserves-surjectivity", desc, "surjective", "not surjective", "-");
      }
    }
  }
}

void Auditor::triadic_addition(const Instance& g) {
  const auto& s = g.s;
  for (auto [x, z] : triadic_candidates(s)) {
    checked("triadic-addition-continuous");
    const Instance added(s.with_arcs({{x, z}, {z, x}}));
    if (auto y = first_violation(g, added, identity_images(g.n())))
      finding("triadic-addition-continuous", encode_instance(s) + ";add=" + edge_text(s, x, z),
              "continuous", "DISCONTINUOUS", set_text(s, *y));
  }
}

void Auditor::core_characterization(const Instance& g) {
  checked("irreducible-core-characterization");
  const auto report = characterization_check(g.s);
  if (!report.pass())
    finding("irreducible-core-characterization", encode_instance(g.s),
            "core = " + format_set(g.s, report.predicted), "core = " + format_set(g.s, report.core_nodes),
            "core_only=" + format_set(g.s, report.core_only) +
                " predicted_only=" + format_set(g.s, report.predicted_only));
}

void Auditor::twin_edges(const Instance& g) {
  const auto& s = g.s;
  for (auto [x, z] : s.symmetric_edges()) {
    if (g.cl[Mask{1} << x.index] != g.cl[Mask{1} << z.index]) continue;
    checked("twin-edge-leaves-closed-sets-unchanged");
    const Instance deleted(s.without_arcs({{x, z}, {z, x}}));
    for (auto y : canonical_order(g.n())) {
      const bool before = g.cl[y] == y, after = deleted.cl[y] == y;
      if (before != after) {
        finding("twin-edge-leaves-closed-sets-unchanged", encode_instance(s) + ";toggle=" + edge_text(s, x, z),
                "same closed sets with and without the edge",
                set_text(s, y) + (before ? " closed only with the edge" : " closed only without the edge"),
                set_text(s, y));
        break;
      }
    }
  }
}

}  // namespace

AuditReport audit(std::size_t max_n) {
  if (max_n > 6) throw SizeError("audit", max_n, 6);
  Auditor a(max_n);
  a.declare("closure-operator", "neighborhood closure is extensive, monotone, idempotent; closed sets meet-closed");
  a.declare("closure-order-matches-region-order", "closure(X) within closure(Y) iff region(X) within region(Y)");
  a.declare("point-in-closure-of-own-neighbors", "a non-isolated y lies in the closure of some subset of y.eta");
  a.declare("separation-by-four-intersections", "X, Z separated iff X&Z, X&Z.eta, X.eta&Z, X.eta&Z.eta all empty");
  a.declare("atomistic-images-distribute", "node maps send meets to meets and joins to joins");
  a.declare("closed-image-absorbs-closure", "continuous f with Y.f closed has closure(Y).f = Y.f");
  a.declare("equal-closures-give-equal-image-closures", "continuous f: equal closures give equal image closures");
  a.declare("closed-sets-have-closed-preimages", "continuous surjective f: every closed set has a closed preimage");
  a.declare("composition-preserves-continuity", "composite of continuous maps is continuous");
  a.declare("composition-preserves-surjectivity", "composite of surjective maps, second continuous, is surjective");
  a.declare("continuous-maps-preserve-separation", "tying two separated non-isolated points is discontinuous");
  a.declare("edge-deletion-characterization", "symmetric edge deletion is discontinuous iff clause (a) or (b) holds");
  a.declare("twin-edge-leaves-closed-sets-unchanged", "toggling x--z with closure(x) = closure(z) keeps the closed sets");
  a.declare("triadic-addition-continuous", "tying two points with a common neighbor is continuous");
  a.declare("irreducible-core-characterization", "reduction core = k-cycle vertices and paths between k-cycles");

  for (std::size_t n = 1; n <= max_n; ++n) {
    GraphEnumerator graphs(n, true);
    while (auto s = graphs.next()) {
      const Instance g(std::move(*s));
      a.on_graph(false);
      a.definitional(g);
      if (n <= 4) a.images_distribute(g);
      a.map_properties(g, n <= 5);
      a.separation_preserved(g);
      a.edge_deletion(g);
      a.twin_edges(g);
      a.triadic_addition(g);
      a.core_characterization(g);
    }
  }
  // Mixed relations: the definitional claims and the deletion characterization.
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 4); ++n) {
    GraphEnumerator graphs(n, false);
    while (auto s = graphs.next()) {
      if (s->symmetric_edges().size() * 2 == s->arc_count()) continue;  // already covered
      const Instance g(std::move(*s));
      a.on_graph(true);
      a.definitional(g);
      a.edge_deletion(g);
    }
  }
  return a.finish();
}

}  // namespace netclosure::oracle
