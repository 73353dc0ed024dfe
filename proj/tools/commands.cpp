#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "girthlift/error.hpp"
#include "girthlift/families.hpp"
#include "girthlift/rng.hpp"
#include "girthlift/walk_analysis.hpp"

namespace girthlift::cli {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

// Writes to cfg.output if set, otherwise to `fallback`. The file is only
// created once the whole document exists, so failures leave nothing behind.
void emit(const RunConfig& cfg, std::ostream& fallback, const std::string& document) {
  if (cfg.output.empty() || cfg.output == "-") {
    fallback << document;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error("cannot write " + cfg.output);
  file << document;
}

Json vertex_json(const LiftedGraph& lg, LiftedId x) {
  const auto v = lg.decode(x);
  return Json{{"id", x}, {"base", v.base}, {"label", v.label.to_string()}};
}

Json rational_json(const Rational& r) {
  return Json{{"fraction", to_string(r)}, {"decimal_rendering", to_decimal(r, 6)}};
}

Json policy_json(const PairPolicy& policy) {
  if (const auto* s = std::get_if<pairs::Sampled>(&policy)) {
    return Json{{"kind", "sampled"}, {"count", s->count}, {"seed", s->seed}};
  }
  return Json{{"kind", "exhaustive"}};
}

Json sweep_json(const SweepSummary& s) {
  Json checks = Json::object();
  for (const auto& t : s.tallies) checks[t.check] = Json{{"passed", t.passed}, {"failed", t.failed}};
  return Json{{"pairs", s.pairs},
              {"failed_pairs", s.failed_pairs},
              {"checks", checks},
              {"forensic_dumps", s.dumps}};
}

Json girth_json(std::optional<std::uint32_t> g) { return g ? Json(*g) : Json("infinite"); }

// Everything derived from one base graph and tree choice.
struct Instance {
  Graph base;
  LiftedGraph lift;
  FiberDistances distances;
  EmbeddingTable table;
  std::optional<std::uint32_t> base_girth;
  std::uint32_t base_diameter;

  // Infinite girth stands in as kUnreachable; it only enters products with
  // counters that are then zero.
  LemmaContext context() const {
    return {lift, distances, table, base_girth.value_or(kUnreachable), base_diameter};
  }
  Rational bound() const {
    return base_girth ? theorem_bound(*base_girth, base_diameter) : Rational(1);
  }
};

Graph load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw Error("missing input graph (-i)");
  Graph g = read_edge_list_file(cfg.input);
  if (g.num_vertices() == 0) throw Error("input graph has no vertices");
  if (!is_connected(g)) {
    throw Error("input graph is disconnected; the lift construction needs a connected base graph "
                "(analyse each component separately)");
  }
  return g;
}

LiftedGraph lift_with_hint(const Graph& g, const TreeDecomposition& td, const LiftOptions& opts) {
  try {
    return build_lift(g, td, opts);
  } catch (const CapExceeded& e) {
    throw Error(std::string(e.what()) + "; raise --max-vertices or set " + kMaxVerticesEnv);
  }
}

Instance prepare(Graph g, const RunConfig& cfg) {
  if (cfg.root >= g.num_vertices()) throw Error("tree root out of range");
  const auto td = spanning_tree(g, parse_tree_strategy(cfg.tree), cfg.root);
  LiftOptions opts;
  opts.max_vertices = cfg.max_vertices;
  auto lg = lift_with_hint(g, td, opts);
  auto fd = fiber_distances(lg);
  auto table = embed(lg);
  const auto gg = girth(g);
  const auto diam = diameter(g);
  return Instance{std::move(g), std::move(lg), std::move(fd), std::move(table), gg, diam};
}

Json base_json(const Graph& g, std::optional<std::uint32_t> gg, std::uint32_t diam) {
  const auto k = g.regular_degree();
  Json j{{"n", g.num_vertices()},
         {"m", g.num_edges()},
         {"regular", k.has_value()},
         {"degree", k ? Json(*k) : Json(nullptr)},
         {"girth", girth_json(gg)},
         {"diameter", diam}};
  if (gg && diam > 0) {
    j["girth_over_diameter"] = rational_json(Rational(*gg, diam));
  } else {
    j["girth_over_diameter"] = nullptr;
  }
  return j;
}

}  // namespace

std::size_t default_max_vertices() {
  if (const char* env = std::getenv(kMaxVerticesEnv); env && *env) {
    return static_cast<std::size_t>(parse_count(env, kMaxVerticesEnv));
  }
  return kDefaultMaxVertices;
}

PairPolicy resolve_pair_policy(const RunConfig& cfg, std::size_t lifted_vertices) {
  if (cfg.pairs.empty()) {
    if (lifted_vertices < kExhaustiveLimit) return pairs::Exhaustive{};
    return pairs::Sampled{kDefaultSampleCount, cfg.seed};
  }
  if (cfg.pairs == "exhaustive") return pairs::Exhaustive{};
  constexpr std::string_view prefix = "sample:";
  if (cfg.pairs.rfind(prefix, 0) == 0) {
    const auto count = parse_count(std::string_view(cfg.pairs).substr(prefix.size()), "sample count");
    if (count == 0) throw Error("sample count must be >= 1");
    return pairs::Sampled{count, cfg.seed};
  }
  throw Error("unknown pair policy '" + cfg.pairs + "' (expected exhaustive or sample:N)");
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto spec = parse_family(cfg.family, cfg.girth_min, cfg.seed, cfg.max_tries);
  const Graph g = make(spec);
  std::ostringstream doc;
  write_edge_list(doc, g);
  emit(cfg, out, doc.str());

  const auto gg = girth(g);
  const auto diam = diameter(g);
  log << "family " << describe(spec) << ": n=" << g.num_vertices() << " m=" << g.num_edges()
      << " girth=" << (gg ? std::to_string(*gg) : "infinite") << " diameter=" << diam;
  if (gg && diam > 0) log << " girth/diameter=" << to_string(girth_diam_ratio(g));
  log << '\n';
  return kExitOk;
}

int cmd_lift(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const Graph g = load_input(cfg);
  const auto td = spanning_tree(g, parse_tree_strategy(cfg.tree), cfg.root);
  LiftOptions opts;
  opts.max_vertices = cfg.max_vertices;
  const auto lg = lift_with_hint(g, td, opts);

  std::ostringstream doc;
  write_lift_edge_list(doc, lg);
  if (!cfg.map_output.empty()) {
    std::ostringstream map;
    write_lift_mapping(map, lg);
    std::ofstream file(cfg.map_output, std::ios::binary);
    if (!file) throw Error("cannot write " + cfg.map_output);
    file << map.str();
  }
  emit(cfg, out, doc.str());
  log << "lift: " << lg.num_vertices() << " vertices, " << lg.num_edges() << " edges, |S|=" << lg.label_width()
      << '\n';
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const Instance inst = prepare(load_input(cfg), cfg);
  const auto& lg = inst.lift;
  const auto policy = resolve_pair_policy(cfg, lg.num_vertices());

  const bool connected = inst.distances.connected();
  if (!connected) throw Error("lift is disconnected; the tree decomposition is inconsistent");
  const auto report = distortion(lg, inst.table, inst.distances, policy);
  const auto bound = inst.bound();
  const bool bound_ok = report.distortion <= bound;
  const auto lifted_g = lifted_girth(lg);

  std::ostringstream csv;
  PairObserver observer;
  if (cfg.format == ReportFormat::csv) {
    csv << "x,y,x_base,x_label,y_base,y_label,distance,l1,C,N,M1,M2,M3,all_pass\n";
    observer = [&](const WalkAnalysis& wa, std::span<const Verdict> verdicts) {
      const auto vx = lg.decode(wa.x);
      const auto vy = lg.decode(wa.y);
      bool ok = true;
      for (const auto& v : verdicts) ok = ok && v.pass;
      csv << wa.x << ',' << wa.y << ',' << vx.base << ',' << vx.label.to_string() << ',' << vy.base << ','
          << vy.label.to_string() << ',' << wa.path_len << ',' << l1_distance(inst.table, wa.x, wa.y) << ','
          << wa.components << ',' << wa.bridge_paths << ',' << wa.single_bridges << ',' << wa.component_edges
          << ',' << wa.double_bridges << ',' << (ok ? 1 : 0) << '\n';
    };
  }
  const auto summary = sweep(inst.context(), policy, 4, observer);

  if (cfg.format == ReportFormat::csv) {
    emit(cfg, out, csv.str());
  } else {
    Json doc;
    doc["command"] = "analyze";
    doc["base"] = base_json(inst.base, inst.base_girth, inst.base_diameter);
    doc["tree"] = Json{{"strategy", cfg.tree}, {"root", cfg.root}, {"cotree_size", lg.label_width()}};
    doc["lift"] = Json{{"vertices", lg.num_vertices()},
                       {"edges", lg.num_edges()},
                       {"girth", girth_json(lifted_g)},
                       {"diameter", inst.distances.diameter()},
                       {"connected", connected}};
    doc["embedding"] = Json{{"lip", rational_json(report.lip)},
                            {"colip", rational_json(report.colip)},
                            {"distortion", rational_json(report.distortion)},
                            {"witness",
                             {{"x", vertex_json(lg, report.witness.x)},
                              {"y", vertex_json(lg, report.witness.y)},
                              {"distance", report.witness_distance},
                              {"l1", report.witness_l1}}},
                            {"pairs_examined", report.pairs_examined},
                            {"mode", policy_json(report.mode)}};
    doc["theorem_bound"] = Json{{"formula", "max(1, 1 + 6*diam/girth)"},
                                {"bound", rational_json(bound)},
                                {"pass", bound_ok}};
    doc["lemma_sweep"] = sweep_json(summary);
    doc["pair_policy"] = policy_json(policy);
    doc["seed"] = cfg.seed;
    emit(cfg, out, doc.dump(2) + "\n");
  }

  log << "distortion " << to_string(report.distortion) << " (bound " << to_string(bound) << ", "
      << (bound_ok ? "pass" : "FAIL") << "); lemma sweep " << summary.pairs - summary.failed_pairs << "/"
      << summary.pairs << " pairs clean\n";
  return bound_ok && summary.pass() ? kExitOk : kExitVerdictFailure;
}

namespace {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyInstance {
  std::string name;
  FamilySpec family;
};

std::vector<VerifyInstance> verify_matrix(std::uint64_t seed) {
  std::vector<VerifyInstance> out;
  out.push_back({"k4", family::Named{NamedGraph::k4}});
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({"cycle:" + std::to_string(n), family::Cycle{n}});
  out.push_back({"petersen", family::Named{NamedGraph::petersen}});
  out.push_back({"heawood", family::Named{NamedGraph::heawood}});
  for (std::uint64_t i = 0; i < 3; ++i) {
    const auto s = seed + i;
    out.push_back({"random:20:3 girth>=5 seed=" + std::to_string(s), family::RandomRegular{20, 3, 5, s, 10'000}});
  }
  return out;
}

// Structural lift checks: sizes, degrees, perfect matchings, connectivity.
CheckResult check_lift_structure(const LiftedGraph& lg) {
  const auto& g = lg.base();
  std::uint64_t bad = 0;
  std::string first;
  for (LiftedId x = 0; x < lg.num_vertices(); ++x) {
    std::size_t deg = 0;
    lg.for_each_neighbor(x, [&](LiftedId y, EdgeId e) {
      ++deg;
      const bool ok = lg.partner(y, e) == x && lg.base_of(y) == g.edge(e).other(lg.base_of(x));
      if (!ok && bad++ == 0) first = "matching over edge " + std::to_string(e) + " broken at " + std::to_string(x);
    });
    if (deg != g.degree(lg.base_of(x)) && bad++ == 0) first = "degree mismatch at " + std::to_string(x);
  }
  const bool connected = is_connected(lg);
  if (!connected && bad++ == 0) first = "lift is disconnected";
  return {"lift_structure", bad == 0, bad == 0 ? "" : first};
}

CheckResult check_translation(const LiftedGraph& lg, Rng& rng) {
  if (lg.label_width() == 0) return {"translation_automorphism", true, "no cotree"};
  std::uint64_t bad = 0;
  const std::uint64_t shifts[] = {1, uniform_below(rng, lg.num_labels())};
  for (const auto shift : shifts) {
    for (LiftedId x = 0; x < lg.num_vertices(); ++x) {
      lg.for_each_neighbor(x, [&](LiftedId y, EdgeId e) {
        if (lg.partner(x ^ shift, e) != (y ^ shift)) ++bad;
      });
    }
  }
  return {"translation_automorphism", bad == 0, bad ? std::to_string(bad) + " adjacencies not preserved" : ""};
}

// Direct BFS from random sources against the representative table.
CheckResult check_symmetry(const LiftedGraph& lg, const FiberDistances& fd, Rng& rng) {
  const std::uint64_t n = lg.num_vertices();
  const std::uint64_t sources = std::max<std::uint64_t>(4, (10'000 + n - 1) / n);
  std::uint64_t compared = 0, bad = 0;
  for (std::uint64_t i = 0; i < sources; ++i) {
    const LiftedId x = uniform_below(rng, n);
    const auto direct = lifted_bfs(lg, x);
    for (LiftedId y = 0; y < n; ++y, ++compared) {
      if (direct[y] != fd.distance(x, y)) ++bad;
    }
  }
  return {"symmetry_reduction", bad == 0,
          std::to_string(compared) + " pairs compared" + (bad ? ", " + std::to_string(bad) + " mismatches" : "")};
}

// Table rows against cut_side evaluated from the definition.
CheckResult check_embedding_rows(const LiftedGraph& lg, const EmbeddingTable& t, Rng& rng) {
  const std::uint64_t n = lg.num_vertices();
  const std::uint64_t samples = std::min<std::uint64_t>(n, 64);
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const LiftedId x = n <= 64 ? i : uniform_below(rng, n);
    for (EdgeId e = 0; e < lg.base().num_edges(); ++e) {
      if (t.bit(x, e) != cut_side(lg, e, lg.decode(x))) ++bad;
    }
  }
  return {"embedding_rows", bad == 0, bad ? std::to_string(bad) + " coordinates differ" : ""};
}

// F(x)-distance equals the odd-multiplicity edge count of the projected
// shortest path, on random pairs.
CheckResult check_odd_multiplicity_oracle(const Instance& inst, Rng& rng) {
  const auto& lg = inst.lift;
  const std::uint64_t n = lg.num_vertices();
  std::uint64_t bad = 0;
  for (int i = 0; i < 10'000; ++i) {
    const LiftedId x = uniform_below(rng, n), y = uniform_below(rng, n);
    const auto wa = analyze(lg, shortest_lifted_path(lg, inst.distances, x, y));
    if (l1_distance(inst.table, x, y) != wa.odd_edges) ++bad;
  }
  return {"odd_multiplicity_oracle", bad == 0, bad ? std::to_string(bad) + " mismatches" : "10000 pairs"};
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  Json instances = Json::array();
  std::uint64_t failures = 0;
  Rng rng(cfg.seed);

  for (const auto& item : verify_matrix(cfg.seed)) {
    Json entry{{"instance", item.name}};
    std::vector<CheckResult> checks;
    std::optional<SweepSummary> summary;
    try {
      Graph g = make(item.family);
      const auto td = spanning_tree(g, parse_tree_strategy(cfg.tree), std::min<VertexId>(cfg.root, g.num_vertices() - 1));
      LiftOptions opts;
      opts.max_vertices = cfg.max_vertices;
      opts.materialize = true;
      if (cfg.inject_fault) opts.fault = MatchingFault{td.tree_edges.front()};
      const auto lg = lift_with_hint(g, td, opts);
      entry["n"] = g.num_vertices();
      entry["m"] = g.num_edges();
      entry["lifted_vertices"] = lg.num_vertices();

      checks.push_back(check_lift_structure(lg));
      const auto table = embed(lg);
      const auto cuts = check_cut_properties(lg, table);
      std::string cut_detail = std::to_string(cuts.edges_checked) + " lifted edges";
      for (const auto& v : cuts.violations) cut_detail += "; " + v;
      checks.push_back({"cut_partition", cuts.pass(), cut_detail});
      checks.push_back(check_embedding_rows(lg, table, rng));
      checks.push_back(check_translation(lg, rng));

      const auto gg = girth(g);
      const auto lifted = lifted_girth(lg);
      const bool girth_ok = !gg || (lifted && *lifted >= *gg);
      checks.push_back({"girth_not_decreased", girth_ok,
                        "base " + (gg ? std::to_string(*gg) : std::string("infinite")) + ", lift " +
                            (lifted ? std::to_string(*lifted) : std::string("infinite"))});

      Instance inst{std::move(g), lg, fiber_distances(lg), table, gg, 0};
      inst.base_diameter = diameter(inst.base);
      checks.push_back(check_symmetry(inst.lift, inst.distances, rng));
      checks.push_back(check_odd_multiplicity_oracle(inst, rng));

      const auto policy = resolve_pair_policy(cfg, inst.lift.num_vertices());
      const auto rep = distortion(inst.lift, inst.table, inst.distances, policy);
      const auto bound = inst.bound();
      checks.push_back({"lipschitz_one", rep.lip == Rational(1), "lip " + to_string(rep.lip)});
      checks.push_back({"distortion_bound", rep.distortion <= bound,
                        "distortion " + to_string(rep.distortion) + " <= " + to_string(bound)});
      summary = sweep(inst.context(), policy);
      checks.push_back({"lemma_sweep", summary->pass(),
                        std::to_string(summary->pairs - summary->failed_pairs) + "/" +
                            std::to_string(summary->pairs) + " pairs clean"});
      entry["pair_policy"] = policy_json(policy);
    } catch (const Error& e) {
      checks.push_back({"error", false, e.what()});
    }

    Json cj = Json::object();
    bool ok = true;
    for (const auto& c : checks) {
      cj[c.name] = Json{{"pass", c.pass}, {"detail", c.detail}};
      if (!c.pass) {
        ++failures;
        ok = false;
        log << "FAIL " << item.name << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
      }
    }
    entry["checks"] = cj;
    if (summary) entry["lemma_sweep"] = sweep_json(*summary);
    entry["pass"] = ok;
    instances.push_back(entry);
  }

  Json doc{{"command", "verify"},
           {"seed", cfg.seed},
           {"pairs", cfg.pairs.empty() ? "default" : cfg.pairs},
           {"tree", cfg.tree},
           {"inject_fault", cfg.inject_fault},
           {"instances", instances},
           {"failed_checks", failures},
           {"pass", failures == 0}};
  emit(cfg, out, doc.dump(2) + "\n");
  log << (failures == 0 ? "verify: all checks passed\n" : "verify: " + std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? kExitOk : kExitVerdictFailure;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  try {
    if (cfg.command == "gen") return cmd_gen(cfg, out, log);
    if (cfg.command == "lift") return cmd_lift(cfg, out, log);
    if (cfg.command == "analyze") return cmd_analyze(cfg, out, log);
    if (cfg.command == "verify") return cmd_verify(cfg, out, log);
    log << "error: unknown command '" << cfg.command << "'\n";
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace girthlift::cli
