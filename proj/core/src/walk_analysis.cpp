#include "girthlift/walk_analysis.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "girthlift/error.hpp"

namespace girthlift {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Groups the selected edges of `g` into maximal paths glued at vertices of
// degree 2 whose both edges are selected; returns the path lengths ordered by
// smallest member edge.
std::vector<std::uint32_t> glued_paths(const Graph& g, const std::vector<bool>& selected) {
  DisjointSets sets(g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    if (nbrs.size() == 2 && selected[nbrs[0].edge] && selected[nbrs[1].edge]) {
      sets.unite(nbrs[0].edge, nbrs[1].edge);
    }
  }
  std::vector<std::uint32_t> size_of_root(g.num_edges(), 0);
  std::vector<std::size_t> roots;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!selected[e]) continue;
    const auto r = sets.find(e);
    if (size_of_root[r]++ == 0) roots.push_back(r);
  }
  std::vector<std::uint32_t> lengths;
  lengths.reserve(roots.size());
  for (const auto r : roots) lengths.push_back(size_of_root[r]);
  return lengths;
}

std::string vertex_text(const LiftedGraph& lg, LiftedId x) {
  const auto v = lg.decode(x);
  return "(" + std::to_string(v.base) + "," + v.label.to_string() + ")";
}

Verdict make_verdict(std::string name) { return Verdict{std::move(name), true, {}}; }

void fail(Verdict& v, std::string why) {
  v.pass = false;
  v.violations.push_back(std::move(why));
}

constexpr std::array<std::string_view, 8> kCheckNames{
    "euler_parity", "repetitions", "counting", "segments",
    "accounting",   "leaf_endpoints", "component_girth", "relift",
};

}  // namespace

std::vector<LiftedId> shortest_lifted_path(const LiftedGraph& lg, const FiberDistances& fd, LiftedId x,
                                           LiftedId y) {
  std::uint32_t remaining = fd.distance(x, y);
  if (remaining == kUnreachable) throw Error("shortest_lifted_path: vertices are not connected");
  std::vector<LiftedId> path(remaining + 1);
  path[remaining] = y;
  LiftedId at = y;
  while (remaining > 0) {
    LiftedId best = std::numeric_limits<LiftedId>::max();
    lg.for_each_neighbor(at, [&](LiftedId w, EdgeId) {
      if (fd.distance(x, w) == remaining - 1) best = std::min(best, w);
    });
    if (best == std::numeric_limits<LiftedId>::max()) {
      throw Error("shortest_lifted_path: distance table is inconsistent with the lift");
    }
    at = best;
    path[--remaining] = at;
  }
  return path;
}

std::uint32_t WalkAnalysis::max_multiplicity() const {
  return multiplicity.empty() ? 0 : *std::max_element(multiplicity.begin(), multiplicity.end());
}

WalkAnalysis analyze(const LiftedGraph& lg, std::span<const LiftedId> path) {
  if (path.empty()) throw Error("analyze: empty path");
  const Graph& base = lg.base();
  WalkAnalysis wa;
  wa.x = path.front();
  wa.y = path.back();
  wa.base_x = lg.base_of(wa.x);
  wa.base_y = lg.base_of(wa.y);
  wa.path_len = static_cast<std::uint32_t>(path.size() - 1);
  wa.path.assign(path.begin(), path.end());

  std::vector<std::int32_t> local_vertex(base.num_vertices(), -1);
  std::vector<std::int32_t> local_edge(base.num_edges(), -1);
  std::vector<std::pair<VertexId, VertexId>> local_pairs;
  const auto local_of = [&](VertexId v) {
    if (local_vertex[v] < 0) {
      local_vertex[v] = static_cast<std::int32_t>(wa.ip_vertices.size());
      wa.ip_vertices.push_back(v);
    }
    return static_cast<VertexId>(local_vertex[v]);
  };
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const EdgeId e = project_edge(lg, path[i], path[i + 1]);
    const VertexId from = lg.base_of(path[i]);
    wa.walk.push_back({e, from});
    const VertexId a = local_of(from);
    const VertexId b = local_of(base.edge(e).other(from));
    if (local_edge[e] < 0) {
      local_edge[e] = static_cast<std::int32_t>(wa.ip_edges.size());
      wa.ip_edges.push_back(e);
      wa.multiplicity.push_back(0);
      local_pairs.emplace_back(a, b);
    }
    ++wa.multiplicity[static_cast<std::size_t>(local_edge[e])];
  }
  wa.ip = build_graph(wa.ip_vertices.size(), local_pairs);
  wa.bridge_info = bridges_and_2ecc(wa.ip);

  for (const auto count : wa.bridge_info.component_edge_counts) {
    if (count > 0) ++wa.components;
    wa.component_edges += count;
  }
  std::vector<bool> doubled(wa.ip.num_edges(), false);
  for (EdgeId e = 0; e < wa.ip.num_edges(); ++e) {
    if (wa.multiplicity[e] % 2 == 1) ++wa.odd_edges;
    if (!wa.bridge_info.is_bridge[e]) continue;
    if (wa.multiplicity[e] == 1) ++wa.single_bridges;
    if (wa.multiplicity[e] == 2) {
      ++wa.double_bridges;
      doubled[e] = true;
    }
  }
  wa.bridge_paths = static_cast<std::uint32_t>(glued_paths(wa.ip, wa.bridge_info.is_bridge).size());
  wa.segments = glued_paths(wa.ip, doubled);
  return wa;
}

Verdict verify_euler_parity(const WalkAnalysis& wa) {
  Verdict v = make_verdict("euler_parity");
  std::vector<std::uint32_t> degree(wa.ip.num_vertices(), 0);
  for (EdgeId e = 0; e < wa.ip.num_edges(); ++e) {
    degree[wa.ip.edge(e).u] += wa.multiplicity[e];
    degree[wa.ip.edge(e).v] += wa.multiplicity[e];
  }
  for (VertexId u = 0; u < degree.size(); ++u) {
    const VertexId b = wa.ip_vertices[u];
    if (degree[u] % 2 == 1 && b != wa.base_x && b != wa.base_y) {
      fail(v, "vertex " + std::to_string(b) + " has odd degree " + std::to_string(degree[u]));
    }
  }
  return v;
}

Verdict verify_repetitions(const WalkAnalysis& wa) {
  Verdict v = make_verdict("repetitions");
  for (EdgeId e = 0; e < wa.ip.num_edges(); ++e) {
    const auto mult = wa.multiplicity[e];
    const auto id = std::to_string(wa.ip_edges[e]);
    if (mult >= 2 && !wa.bridge_info.is_bridge[e]) {
      fail(v, "edge " + id + " repeats " + std::to_string(mult) + " times but is not a bridge");
    }
    if (mult > 2) fail(v, "edge " + id + " used " + std::to_string(mult) + " times");
  }
  return v;
}

Verdict verify_counting(const WalkAnalysis& wa) {
  Verdict v = make_verdict("counting");
  if (wa.bridge_paths > 2 * wa.components + 1) {
    fail(v, "bridge paths " + std::to_string(wa.bridge_paths) + " > 2*" + std::to_string(wa.components) + "+1");
  }
  if (wa.components == 0) {
    if (wa.max_multiplicity() > 1) fail(v, "no 2-edge-connected component, yet an edge repeats");
    if (wa.path_len != wa.odd_edges) {
      fail(v, "no 2-edge-connected component, yet path length " + std::to_string(wa.path_len) +
                  " != l1 distance " + std::to_string(wa.odd_edges));
    }
  }
  return v;
}

Verdict verify_segments(const WalkAnalysis& wa, std::uint32_t base_diameter) {
  Verdict v = make_verdict("segments");
  for (const auto len : wa.segments) {
    if (len > base_diameter) {
      fail(v, "segment of length " + std::to_string(len) + " exceeds diameter " + std::to_string(base_diameter));
    }
  }
  return v;
}

Verdict verify_accounting(const WalkAnalysis& wa, const EmbeddingTable& t, std::uint32_t base_girth,
                          std::uint32_t base_diameter) {
  Verdict v = make_verdict("accounting");
  const auto l1 = l1_distance(t, wa.x, wa.y);
  const auto m1 = wa.single_bridges, m2 = wa.component_edges, m3 = wa.double_bridges;
  if (l1 != m1 + m2) {
    fail(v, "l1 " + std::to_string(l1) + " != M1+M2 = " + std::to_string(m1) + "+" + std::to_string(m2));
  }
  if (l1 != wa.odd_edges) {
    fail(v, "l1 " + std::to_string(l1) + " != odd-multiplicity edges " + std::to_string(wa.odd_edges));
  }
  if (wa.path_len != m1 + m2 + 2 * m3) {
    fail(v, "path length " + std::to_string(wa.path_len) + " != M1+M2+2M3 = " + std::to_string(m1 + m2 + 2 * m3));
  }
  if (std::uint64_t{m2} < std::uint64_t{wa.components} * base_girth) {
    fail(v, "M2 " + std::to_string(m2) + " < C*g = " + std::to_string(wa.components) + "*" +
                std::to_string(base_girth));
  }
  if (std::uint64_t{m3} > std::uint64_t{wa.bridge_paths} * base_diameter) {
    fail(v, "M3 " + std::to_string(m3) + " > N*diam = " + std::to_string(wa.bridge_paths) + "*" +
                std::to_string(base_diameter));
  }
  return v;
}

Verdict verify_leaf_endpoints(const WalkAnalysis& wa) {
  Verdict v = make_verdict("leaf_endpoints");
  for (VertexId u = 0; u < wa.ip.num_vertices(); ++u) {
    const VertexId b = wa.ip_vertices[u];
    if (wa.ip.degree(u) == 1 && b != wa.base_x && b != wa.base_y) {
      fail(v, "vertex " + std::to_string(b) + " is a leaf of I(P) but not an endpoint");
    }
  }
  return v;
}

Verdict verify_component_girth(const WalkAnalysis& wa, std::uint32_t base_girth) {
  Verdict v = make_verdict("component_girth");
  const auto& counts = wa.bridge_info.component_edge_counts;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0 && counts[c] < base_girth) {
      fail(v, "2-edge-connected component with " + std::to_string(counts[c]) + " edges < girth " +
                  std::to_string(base_girth));
    }
  }
  return v;
}

Verdict verify_relift(const LiftedGraph& lg, const WalkAnalysis& wa) {
  Verdict v = make_verdict("relift");
  const auto lifted = lift_walk(lg, wa.walk, lg.decode(wa.x));
  if (lg.encode(lifted.back()) != wa.y) {
    fail(v, "lifting pi(P) from x ends at " + vertex_text(lg, lg.encode(lifted.back())) + ", not y");
  }
  return v;
}

std::vector<Verdict> check_pair(const LemmaContext& ctx, const WalkAnalysis& wa) {
  std::vector<Verdict> out;
  out.reserve(kCheckNames.size());
  out.push_back(verify_euler_parity(wa));
  out.push_back(verify_repetitions(wa));
  out.push_back(verify_counting(wa));
  out.push_back(verify_segments(wa, ctx.base_diameter));
  out.push_back(verify_accounting(wa, ctx.table, ctx.base_girth, ctx.base_diameter));
  out.push_back(verify_leaf_endpoints(wa));
  out.push_back(verify_component_girth(wa, ctx.base_girth));
  out.push_back(verify_relift(ctx.lg, wa));
  if (wa.path_len != ctx.fd.distance(wa.x, wa.y)) {
    fail(out[4], "path length disagrees with the distance table");
  }
  return out;
}

std::span<const std::string_view> check_names() { return kCheckNames; }

std::string forensic_dump(const LiftedGraph& lg, const WalkAnalysis& wa, std::span<const Verdict> verdicts) {
  std::ostringstream out;
  out << "pair: " << vertex_text(lg, wa.x) << " -> " << vertex_text(lg, wa.y) << "  (ids " << wa.x << ", " << wa.y
      << ")\n";
  out << "path_len: " << wa.path_len << "\npath:";
  for (const auto p : wa.path) out << ' ' << vertex_text(lg, p);
  out << "\nmultiplicities:";
  for (EdgeId e = 0; e < wa.ip_edges.size(); ++e) out << ' ' << wa.ip_edges[e] << 'x' << wa.multiplicity[e];
  out << "\nI(P) edges:";
  for (EdgeId e = 0; e < wa.ip.num_edges(); ++e) {
    const auto& ed = wa.ip.edge(e);
    out << ' ' << wa.ip_vertices[ed.u] << '-' << wa.ip_vertices[ed.v] << (wa.bridge_info.is_bridge[e] ? "*" : "");
  }
  out << "\ncounters: C=" << wa.components << " N=" << wa.bridge_paths << " M1=" << wa.single_bridges
      << " M2=" << wa.component_edges << " M3=" << wa.double_bridges << " odd_edges=" << wa.odd_edges;
  out << "\nsegments:";
  for (const auto s : wa.segments) out << ' ' << s;
  out << "\nverdicts:\n";
  for (const auto& v : verdicts) {
    out << "  " << v.check << ": " << (v.pass ? "pass" : "FAIL") << '\n';
    for (const auto& why : v.violations) out << "    - " << why << '\n';
  }
  return out.str();
}

SweepSummary sweep(const LemmaContext& ctx, std::span<const LiftedPair> pairs, std::size_t max_dumps,
                   const PairObserver& observer) {
  SweepSummary s;
  for (const auto name : kCheckNames) s.tallies.push_back({std::string(name), 0, 0});
  for (const auto& p : pairs) {
    const auto path = shortest_lifted_path(ctx.lg, ctx.fd, p.x, p.y);
    const auto wa = analyze(ctx.lg, path);
    const auto verdicts = check_pair(ctx, wa);
    if (observer) observer(wa, verdicts);
    bool ok = true;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (verdicts[i].pass) {
        ++s.tallies[i].passed;
      } else {
        ++s.tallies[i].failed;
        ok = false;
      }
    }
    ++s.pairs;
    if (!ok) {
      ++s.failed_pairs;
      if (s.dumps.size() < max_dumps) s.dumps.push_back(forensic_dump(ctx.lg, wa, verdicts));
    }
  }
  return s;
}

SweepSummary sweep(const LemmaContext& ctx, const PairPolicy& policy, std::size_t max_dumps,
                   const PairObserver& observer) {
  if (const auto* s = std::get_if<pairs::Sampled>(&policy)) {
    const auto list = sampled_pairs(ctx.lg, ctx.fd, s->count, s->seed);
    return sweep(ctx, list, max_dumps, observer);
  }
  std::vector<LiftedPair> batch;
  batch.reserve(1 << 16);
  SweepSummary total;
  const auto merge = [&](const SweepSummary& part) {
    if (total.tallies.empty()) total.tallies = part.tallies;
    else {
      for (std::size_t i = 0; i < part.tallies.size(); ++i) {
        total.tallies[i].passed += part.tallies[i].passed;
        total.tallies[i].failed += part.tallies[i].failed;
      }
    }
    total.pairs += part.pairs;
    total.failed_pairs += part.failed_pairs;
    for (const auto& d : part.dumps) {
      if (total.dumps.size() < max_dumps) total.dumps.push_back(d);
    }
  };
  for_each_pair(ctx.lg, ctx.fd, policy, [&](const LiftedPair& p) {
    batch.push_back(p);
    if (batch.size() == batch.capacity()) {
      merge(sweep(ctx, batch, max_dumps, observer));
      batch.clear();
    }
  });
  merge(sweep(ctx, batch, max_dumps, observer));
  return total;
}

}  // namespace girthlift
