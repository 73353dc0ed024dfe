#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace girthlift {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct Edge {
  VertexId u;
  VertexId v;

  VertexId lower() const noexcept { return u < v ? u : v; }
  VertexId upper() const noexcept { return u < v ? v : u; }
  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  bool has(VertexId w) const noexcept { return w == u || w == v; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Simple undirected graph. Edge ids are dense and follow input order; each
// adjacency list is sorted by edge id. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> neighbors(VertexId v) const {
    return {incidences_.data() + offsets_[v], incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Edge id joining u and v, if any.
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  // Common degree when every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;

  friend Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs);

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidences_;
};

// Rejects self-loops, duplicate pairs (in either orientation) and
// out-of-range endpoints with girthlift::Error.
Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs);
Graph build_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs);

// Edge-list text format: "n m" followed by m lines "u v", 0-indexed, in
// ascending edge id order.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);
bool is_connected(const Graph& g);
std::uint32_t diameter(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

enum class TreeStrategy { bfs, dfs };

struct TreeParent {
  VertexId vertex;
  EdgeId edge;
};

// Spanning tree T plus the cotree S. Cotree edges are indexed 0..|S|-1 in
// ascending edge id order; those indices are the label coordinates of a lift.
struct TreeDecomposition {
  static constexpr std::int32_t kTreeEdge = -1;

  VertexId root = 0;
  std::vector<EdgeId> tree_edges;        // ascending edge id
  std::vector<EdgeId> cotree;            // coordinate i -> edge id
  std::vector<std::int32_t> coordinate;  // edge id -> coordinate or kTreeEdge
  std::vector<std::optional<TreeParent>> parent;
  std::vector<VertexId> order;           // discovery order; parents precede children

  bool is_tree_edge(EdgeId e) const { return coordinate.at(e) == kTreeEdge; }
  std::size_t cotree_size() const noexcept { return cotree.size(); }
};

TreeDecomposition spanning_tree(const Graph& g, TreeStrategy strategy = TreeStrategy::bfs,
                                VertexId root = 0);

struct BridgeDecomposition {
  std::vector<EdgeId> bridge_ids;                 // ascending
  std::vector<bool> is_bridge;                    // edge id -> flag
  std::vector<std::uint32_t> component_of;        // vertex -> 2-edge-connected component
  std::vector<std::uint32_t> component_edge_counts;  // non-bridge edges per component

  std::size_t num_components() const noexcept { return component_edge_counts.size(); }
};

BridgeDecomposition bridges_and_2ecc(const Graph& g);

// Two sides of T - e. `a` holds the side containing e's lower endpoint.
struct TreeSplit {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
};

TreeSplit tree_split(const TreeDecomposition& td, EdgeId tree_edge);

std::string to_string(TreeStrategy s);
TreeStrategy parse_tree_strategy(const std::string& s);

}  // namespace girthlift
