#include "girthlift/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "girthlift/error.hpp"

namespace girthlift {

CapExceeded::CapExceeded(std::size_t required, std::size_t cap)
    : Error("lift needs " + std::to_string(required) + " vertices, cap is " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  if (n > std::numeric_limits<VertexId>::max()) throw Error("vertex count too large");
  Graph g;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::size_t> degree(n, 0);
  g.edges_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.edges_.push_back({u, v});
    ++degree[u];
    ++degree[v];
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.incidences_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    const auto [u, v] = g.edges_[e];
    g.incidences_[fill[u]++] = {v, e};
    g.incidences_[fill[v]++] = {u, e};
  }
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  return build_graph(n, std::span<const std::pair<VertexId, VertexId>>(pairs.begin(), pairs.size()));
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  const VertexId from = degree(u) <= degree(v) ? u : v;
  const VertexId to = from == u ? v : u;
  for (const auto& inc : neighbors(from)) {
    if (inc.neighbor == to) return inc.edge;
  }
  return std::nullopt;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (num_vertices() == 0) return std::nullopt;
  const std::size_t k = degree(0);
  for (VertexId v = 1; v < num_vertices(); ++v) {
    if (degree(v) != k) return std::nullopt;
  }
  return k;
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw Error("edge list: missing 'n m' header");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw Error("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    if (u < 0 || v < 0 || static_cast<unsigned long long>(u) >= n ||
        static_cast<unsigned long long>(v) >= n) {
      throw Error("edge list: edge " + std::to_string(i) + " has an endpoint out of range");
    }
    pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  std::string trailing;
  if (in >> trailing) throw Error("edge list: trailing data after " + std::to_string(m) + " edges");
  return build_graph(n, pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
  if (source >= g.num_vertices()) throw Error("bfs source out of range");
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreachable);
  std::vector<VertexId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (const auto& inc : g.neighbors(u)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[u] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::uint32_t diameter(const Graph& g) {
  if (g.num_vertices() == 0) throw Error("diameter of an empty graph");
  std::uint32_t best = 0;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == kUnreachable) throw Error("diameter: graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<std::uint32_t> girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::uint32_t best = kUnreachable;
  std::vector<std::uint32_t> dist(n);
  std::vector<EdgeId> via(n);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    via[root] = std::numeric_limits<EdgeId>::max();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId u = queue[head];
      // Cycles closed from this level on are at least 2*dist[u] long.
      if (best != kUnreachable && 2 * dist[u] >= best) break;
      for (const auto& inc : g.neighbors(u)) {
        if (inc.edge == via[u]) continue;
        const VertexId w = inc.neighbor;
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          via[w] = inc.edge;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

TreeDecomposition spanning_tree(const Graph& g, TreeStrategy strategy, VertexId root) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw Error("spanning tree root out of range");
  TreeDecomposition td;
  td.root = root;
  td.parent.assign(n, std::nullopt);
  td.coordinate.assign(g.num_edges(), 0);
  std::vector<bool> seen(n, false);
  std::vector<bool> in_tree(g.num_edges(), false);
  seen[root] = true;
  td.order.push_back(root);

  if (strategy == TreeStrategy::bfs) {
    for (std::size_t head = 0; head < td.order.size(); ++head) {
      const VertexId u = td.order[head];
      for (const auto& inc : g.neighbors(u)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = true;
        td.parent[inc.neighbor] = TreeParent{u, inc.edge};
        in_tree[inc.edge] = true;
        td.order.push_back(inc.neighbor);
      }
    }
  } else {
    // Preorder DFS; each vertex follows its lowest-id unexplored edge first.
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto nbrs = g.neighbors(u);
      if (next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Incidence inc = nbrs[next++];
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      td.parent[inc.neighbor] = TreeParent{u, inc.edge};
      in_tree[inc.edge] = true;
      td.order.push_back(inc.neighbor);
      stack.emplace_back(inc.neighbor, 0);
    }
  }

  if (td.order.size() != n) throw Error("spanning tree: graph is disconnected");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in_tree[e]) {
      td.tree_edges.push_back(e);
      td.coordinate[e] = TreeDecomposition::kTreeEdge;
    } else {
      td.coordinate[e] = static_cast<std::int32_t>(td.cotree.size());
      td.cotree.push_back(e);
    }
  }
  return td;
}

BridgeDecomposition bridges_and_2ecc(const Graph& g) {
  const std::size_t n = g.num_vertices();
  BridgeDecomposition out;
  out.is_bridge.assign(g.num_edges(), false);

  // Iterative Tarjan low-link; the tree edge into a vertex is skipped by id.
  std::vector<std::uint32_t> disc(n, kUnreachable), low(n, 0);
  std::uint32_t timer = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (disc[s] != kUnreachable) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, std::numeric_limits<EdgeId>::max(), 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Incidence inc = nbrs[f.next++];
        if (inc.edge == f.via) continue;
        const VertexId w = inc.neighbor;
        if (disc[w] == kUnreachable) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, inc.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId p = stack.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] > disc[p]) out.is_bridge[done.via] = true;
      }
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (out.is_bridge[e]) out.bridge_ids.push_back(e);
  }

  out.component_of.assign(n, kUnreachable);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (out.component_of[s] != kUnreachable) continue;
    const auto label = static_cast<std::uint32_t>(out.component_edge_counts.size());
    out.component_edge_counts.push_back(0);
    out.component_of[s] = label;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& inc : g.neighbors(queue[head])) {
        if (out.is_bridge[inc.edge]) continue;
        if (out.component_of[inc.neighbor] == kUnreachable) {
          out.component_of[inc.neighbor] = label;
          queue.push_back(inc.neighbor);
        }
      }
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!out.is_bridge[e]) ++out.component_edge_counts[out.component_of[g.edge(e).u]];
  }
  return out;
}

TreeSplit tree_split(const TreeDecomposition& td, EdgeId tree_edge) {
  if (tree_edge >= td.coordinate.size()) throw Error("tree_split: edge id out of range");
  if (!td.is_tree_edge(tree_edge)) {
    throw Error("tree_split: edge " + std::to_string(tree_edge) + " is a cotree edge");
  }
  const std::size_t n = td.parent.size();
  VertexId child = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (td.parent[v] && td.parent[v]->edge == tree_edge) {
      child = v;
      break;
    }
  }
  std::vector<bool> below(n, false);
  for (const VertexId v : td.order) {
    below[v] = v == child || (td.parent[v] && below[td.parent[v]->vertex]);
  }
  const VertexId lower = std::min(child, td.parent[child]->vertex);
  const bool lower_below = below[lower];
  TreeSplit split;
  for (VertexId v = 0; v < n; ++v) {
    (below[v] == lower_below ? split.a : split.b).push_back(v);
  }
  return split;
}

std::string to_string(TreeStrategy s) { return s == TreeStrategy::bfs ? "bfs" : "dfs"; }

TreeStrategy parse_tree_strategy(const std::string& s) {
  if (s == "bfs") return TreeStrategy::bfs;
  if (s == "dfs") return TreeStrategy::dfs;
  throw Error("unknown tree strategy '" + s + "' (expected bfs or dfs)");
}

}  // namespace girthlift
