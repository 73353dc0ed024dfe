#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "girthlift/error.hpp"
#include "girthlift/families.hpp"
#include "girthlift/graph.hpp"
#include "oracles.hpp"

using namespace girthlift;

namespace {

Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

std::vector<std::uint64_t> seeds(std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= k; ++s) out.push_back(s * 7919);
  return out;
}

}  // namespace

TEST_CASE("build_graph rejects malformed input") {
  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), Error);

  const Graph g = triangle();
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.regular_degree() == 2);
  CHECK(g.find_edge(2, 0) == 2);
  CHECK_FALSE(build_graph(3, {{0, 1}}).regular_degree());
}

TEST_CASE("edge list round trip and parse errors") {
  const Graph p = make(family::Named{NamedGraph::petersen});
  std::stringstream ss;
  write_edge_list(ss, p);
  const Graph q = read_edge_list(ss);
  CHECK(q.num_vertices() == 10);
  REQUIRE(q.num_edges() == 15);
  for (EdgeId e = 0; e < 15; ++e) {
    CHECK(q.edge(e).u == p.edge(e).u);
    CHECK(q.edge(e).v == p.edge(e).v);
  }

  for (const char* bad : {"", "3", "3 2\n0 1\n", "3 1\n0 5\n", "3 1\n0 1\n2 2\n", "3 1\n-1 1\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_edge_list(in), Error);
  }
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), Error);
}

TEST_CASE("BFS distances") {
  const auto d = bfs_distances(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 0);
  CHECK(d == std::vector<std::uint32_t>{0, 1, 2, 3});

  const auto split = bfs_distances(build_graph(3, {{0, 1}}), 0);
  CHECK(split[2] == kUnreachable);

  const Graph p = make(family::Named{NamedGraph::petersen});
  for (VertexId v = 0; v < 10; ++v) {
    std::map<std::uint32_t, int> hist;
    for (const auto x : bfs_distances(p, v)) ++hist[x];
    CHECK(hist == std::map<std::uint32_t, int>{{0, 1}, {1, 3}, {2, 6}});
  }
}

TEST_CASE("diameter and connectivity") {
  CHECK(diameter(triangle()) == 1);
  CHECK(diameter(make(family::Named{NamedGraph::petersen})) == 2);
  CHECK(diameter(make(family::Named{NamedGraph::heawood})) == 3);
  CHECK(diameter(oracle::cycle(7)) == 3);
  CHECK_FALSE(is_connected(build_graph(3, {{0, 1}})));
  CHECK_THROWS_AS(diameter(build_graph(3, {{0, 1}})), Error);
}

TEST_CASE("girth against edge-deletion oracle") {
  CHECK(girth(triangle()) == 3);
  CHECK_FALSE(girth(build_graph(4, {{0, 1}, {1, 2}, {1, 3}})));
  for (std::size_t n = 3; n <= 9; ++n) CHECK(girth(oracle::cycle(n)) == n);
  CHECK(girth(make(family::Named{NamedGraph::petersen})) == 5);
  CHECK(girth(make(family::Named{NamedGraph::heawood})) == 6);
  CHECK(girth(make(family::Named{NamedGraph::mcgee})) == 7);
  CHECK(girth(make(family::Named{NamedGraph::tutte_coxeter})) == 8);

  for (const auto s : seeds(200)) {
    Rng rng(s);
    const std::size_t n = 2 + uniform_below(rng, 9);
    const double p = 0.15 + 0.1 * static_cast<double>(s % 5);
    const Graph g = oracle::random_graph(n, p, rng);
    INFO("seed " << s << " n " << n << " m " << g.num_edges());
    CHECK(girth(g) == oracle::girth(g));
  }
}

TEST_CASE("spanning trees") {
  const Graph t = triangle();
  const auto td = spanning_tree(t);
  CHECK(td.tree_edges == std::vector<EdgeId>{0, 2});
  CHECK(td.cotree == std::vector<EdgeId>{1});
  CHECK(td.coordinate[1] == 0);
  CHECK(td.is_tree_edge(0));

  // DFS on a cycle walks the path 0-1-...-(n-1); the closing edge is cotree.
  const auto dfs = spanning_tree(oracle::cycle(6), TreeStrategy::dfs);
  CHECK(dfs.cotree == std::vector<EdgeId>{5});

  for (const auto which : {NamedGraph::k4, NamedGraph::petersen, NamedGraph::heawood, NamedGraph::pappus}) {
    const Graph g = make(family::Named{which});
    for (const auto strategy : {TreeStrategy::bfs, TreeStrategy::dfs}) {
      for (VertexId root = 0; root < g.num_vertices(); root += 3) {
        const auto d = spanning_tree(g, strategy, root);
        CHECK(d.root == root);
        CHECK(d.cotree_size() == g.num_edges() - g.num_vertices() + 1);
        CHECK(d.tree_edges.size() == g.num_vertices() - 1);
        CHECK(std::is_sorted(d.tree_edges.begin(), d.tree_edges.end()));
        // Tree edges alone connect everything.
        const auto seen = oracle::reachable(g, d.tree_edges, kUnreachable, root);
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        CHECK(d.order.front() == root);
      }
    }
  }
  CHECK_THROWS_AS(spanning_tree(build_graph(3, {{0, 1}})), Error);
  CHECK(parse_tree_strategy("dfs") == TreeStrategy::dfs);
  CHECK_THROWS_AS(parse_tree_strategy("prim"), Error);
}

TEST_CASE("bridges and 2-edge-connected components against deletion oracle") {
  // Triangle with a pendant vertex.
  const Graph tp = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto b = bridges_and_2ecc(tp);
  CHECK(b.bridge_ids == std::vector<EdgeId>{3});
  CHECK(b.component_of[0] == b.component_of[1]);
  CHECK(b.component_of[0] == b.component_of[2]);
  CHECK(b.component_of[3] != b.component_of[2]);
  CHECK(b.num_components() == 2);

  for (const auto s : seeds(200)) {
    Rng rng(s);
    const std::size_t n = 2 + uniform_below(rng, 11);
    const Graph g = oracle::random_graph(n, 0.12 + 0.05 * static_cast<double>(s % 6), rng);
    if (g.num_edges() > 40) continue;
    const auto got = bridges_and_2ecc(g);
    const auto want = oracle::bridges(g);
    INFO("seed " << s);
    CHECK(got.is_bridge == want);
    // Same component iff joined by a path avoiding bridges.
    std::vector<EdgeId> inner;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (!want[e]) inner.push_back(e);
    std::size_t inner_edges = 0;
    for (VertexId u = 0; u < n; ++u) {
      const auto seen = oracle::reachable(g, inner, kUnreachable, u);
      for (VertexId v = 0; v < n; ++v) CHECK((got.component_of[u] == got.component_of[v]) == seen[v]);
    }
    for (const auto c : got.component_edge_counts) inner_edges += c;
    CHECK(inner_edges == inner.size());
  }
}

TEST_CASE("tree_split") {
  const Graph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto td = spanning_tree(path);
  const auto s = tree_split(td, 1);
  CHECK(s.a == std::vector<VertexId>{0, 1});
  CHECK(s.b == std::vector<VertexId>{2, 3});

  // Star K_{1,3} centred at 1: removing edge 1-2 isolates 2; A holds 1.
  const Graph star = build_graph(4, {{1, 0}, {1, 2}, {1, 3}});
  const auto st = spanning_tree(star);
  const auto s2 = tree_split(st, 1);
  CHECK(s2.a == std::vector<VertexId>{0, 1, 3});
  CHECK(s2.b == std::vector<VertexId>{2});
  // Edge 0-1: the lower endpoint 0 lands in A alone.
  const auto s0 = tree_split(st, 0);
  CHECK(s0.a == std::vector<VertexId>{0});
  CHECK(s0.b == std::vector<VertexId>{1, 2, 3});

  CHECK_THROWS_AS(tree_split(spanning_tree(triangle()), 1), Error);

  for (const auto which : {NamedGraph::petersen, NamedGraph::heawood, NamedGraph::mcgee}) {
    const Graph g = make(family::Named{which});
    for (const auto strategy : {TreeStrategy::bfs, TreeStrategy::dfs}) {
      const auto d = spanning_tree(g, strategy);
      for (const EdgeId e : d.tree_edges) {
        const auto split = tree_split(d, e);
        const auto seen = oracle::reachable(g, d.tree_edges, e, g.edge(e).lower());
        std::vector<VertexId> a;
        for (VertexId v = 0; v < g.num_vertices(); ++v)
          if (seen[v]) a.push_back(v);
        CHECK(split.a == a);
        CHECK(split.a.size() + split.b.size() == g.num_vertices());
      }
    }
  }
}
