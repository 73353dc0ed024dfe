#include "girthlift/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "girthlift/rng.hpp"
#include "named_graph_data.hpp"

namespace girthlift {

namespace {

struct NamedEntry {
  NamedGraph id;
  std::string_view name;
  NamedGraphFacts facts;
};

// (degree, n, m, girth, diameter)
constexpr std::array<NamedEntry, 6> kNamed{{
    {NamedGraph::k4, "k4", {3, 4, 6, 3, 1}},
    {NamedGraph::petersen, "petersen", {3, 10, 15, 5, 2}},
    {NamedGraph::heawood, "heawood", {3, 14, 21, 6, 3}},
    {NamedGraph::pappus, "pappus", {3, 18, 27, 6, 4}},
    {NamedGraph::mcgee, "mcgee", {3, 24, 36, 7, 4}},
    {NamedGraph::tutte_coxeter, "tutte_coxeter", {3, 30, 45, 8, 4}},
}};

const NamedEntry& entry(NamedGraph g) {
  for (const auto& e : kNamed) {
    if (e.id == g) return e;
  }
  throw Error("unknown named graph");
}

Graph load_named(NamedGraph which) {
  const auto& info = entry(which);
  std::istringstream in{std::string(named_graph_text(which))};
  Graph g = read_edge_list(in);
  const auto& f = info.facts;
  const auto where = "named graph '" + std::string(info.name) + "': ";
  if (g.num_vertices() != f.n || g.num_edges() != f.m) throw Error(where + "unexpected size");
  if (g.regular_degree() != f.degree) throw Error(where + "unexpected degree");
  if (girth(g) != f.girth) throw Error(where + "unexpected girth");
  if (diameter(g) != f.diameter) throw Error(where + "unexpected diameter");
  return g;
}

Graph make_cycle(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return build_graph(n, pairs);
}

Graph make_complete(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return build_graph(n, pairs);
}

Graph make_random_regular(const family::RandomRegular& spec) {
  Rng rng(spec.seed);
  const std::size_t points = spec.n * spec.k;
  std::vector<VertexId> stubs(points);
  std::vector<std::pair<VertexId, VertexId>> pairs(points / 2);
  for (std::uint64_t attempt = 0; attempt < spec.max_tries; ++attempt) {
    for (std::size_t i = 0; i < points; ++i) stubs[i] = static_cast<VertexId>(i / spec.k);
    for (std::size_t i = points - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[uniform_below(rng, i + 1)]);
    }
    bool simple = true;
    for (std::size_t i = 0; i < points / 2 && simple; ++i) {
      const VertexId a = stubs[2 * i], b = stubs[2 * i + 1];
      if (a == b) simple = false;
      pairs[i] = {std::min(a, b), std::max(a, b)};
    }
    if (!simple) continue;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
    Graph g = build_graph(spec.n, pairs);
    if (!is_connected(g)) continue;
    const auto gg = girth(g);
    if (gg && *gg < spec.girth_min) continue;
    return g;
  }
  throw GenerationFailed(spec.max_tries);
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

GenerationFailed::GenerationFailed(std::uint64_t attempts)
    : Error("random_regular: no graph met the constraints after " + std::to_string(attempts) +
            " attempts"),
      attempts_(attempts) {}

std::string_view named_graph_text(NamedGraph g) {
  const auto text = detail::embedded_graph_file(entry(g).name);
  if (text.empty()) throw Error("missing data file for " + std::string(entry(g).name));
  return text;
}

NamedGraphFacts facts(NamedGraph g) { return entry(g).facts; }

std::string_view name(NamedGraph g) { return entry(g).name; }

NamedGraph parse_named_graph(std::string_view s) {
  for (const auto& e : kNamed) {
    if (e.name == s) return e.id;
  }
  throw Error("unknown named graph '" + std::string(s) + "'");
}

void validate(const FamilySpec& spec) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) {
          if (f.n < 3) throw Error("cycle needs n >= 3");
        } else if constexpr (std::is_same_v<T, family::Complete>) {
          if (f.n < 3) throw Error("complete graph needs n >= 3");
        } else if constexpr (std::is_same_v<T, family::RandomRegular>) {
          if (f.k < 3) throw Error("random_regular needs k >= 3");
          if ((f.n * f.k) % 2 != 0) throw Error("random_regular needs n*k even");
          if (f.k >= f.n) throw Error("random_regular needs k < n");
          if (f.girth_min < 3) throw Error("random_regular needs girth_min >= 3");
          if (f.max_tries == 0) throw Error("random_regular needs max_tries >= 1");
        }
      },
      spec);
}

Graph make(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) {
          return make_cycle(f.n);
        } else if constexpr (std::is_same_v<T, family::Complete>) {
          return make_complete(f.n);
        } else if constexpr (std::is_same_v<T, family::Named>) {
          return load_named(f.which);
        } else {
          return make_random_regular(f);
        }
      },
      spec);
}

Rational girth_diam_ratio(const Graph& g) {
  if (g.num_vertices() == 0) throw Error("girth/diameter ratio of an empty graph");
  const auto d = diameter(g);
  if (d == 0) throw Error("girth/diameter ratio: diameter is 0");
  const auto gg = girth(g);
  if (!gg) throw Error("girth/diameter ratio: graph is a forest");
  return Rational(*gg, d);
}

FamilySpec parse_family(std::string_view text, std::uint32_t girth_min, std::uint64_t seed,
                        std::uint64_t max_tries) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const auto kind = parts.front();
  FamilySpec spec;
  if (kind == "cycle" && parts.size() == 2) {
    spec = family::Cycle{parse_size(parts[1], "cycle length")};
  } else if (kind == "complete" && parts.size() == 2) {
    spec = family::Complete{parse_size(parts[1], "vertex count")};
  } else if (kind == "random" && parts.size() == 3) {
    spec = family::RandomRegular{parse_size(parts[1], "vertex count"), parse_size(parts[2], "degree"),
                                 girth_min, seed, max_tries};
  } else if (parts.size() == 1) {
    spec = family::Named{parse_named_graph(kind)};
  } else {
    throw Error("unrecognised family '" + std::string(text) + "'");
  }
  validate(spec);
  return spec;
}

std::string describe(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) {
          return "cycle:" + std::to_string(f.n);
        } else if constexpr (std::is_same_v<T, family::Complete>) {
          return "complete:" + std::to_string(f.n);
        } else if constexpr (std::is_same_v<T, family::Named>) {
          return std::string(name(f.which));
        } else {
          return "random:" + std::to_string(f.n) + ":" + std::to_string(f.k) +
                 " girth_min=" + std::to_string(f.girth_min) + " seed=" + std::to_string(f.seed);
        }
      },
      spec);
}

}  // namespace girthlift
