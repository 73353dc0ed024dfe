#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "girthlift/graph.hpp"

namespace girthlift {

inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 22;

// Element of {0,1}^S. Bit i is cotree coordinate i.
class Label {
 public:
  static constexpr std::uint32_t kMaxWidth = 62;

  Label() = default;
  Label(std::uint64_t bits, std::uint32_t width);

  static Label zero(std::uint32_t width) { return Label(0, width); }
  static Label unit(std::uint32_t coordinate, std::uint32_t width);

  std::uint64_t bits() const noexcept { return bits_; }
  std::uint32_t width() const noexcept { return width_; }
  bool test(std::uint32_t coordinate) const { return (bits_ >> coordinate) & 1U; }

  // Group operation on {0,1}^S; throws on width mismatch.
  Label operator^(const Label& other) const;
  bool operator==(const Label&) const = default;

  // Binary string with coordinate 0 rightmost; "-" for the empty label.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t width_ = 0;
};

struct LiftedVertex {
  VertexId base;
  Label label;

  bool operator==(const LiftedVertex&) const = default;
};

// Dense encoding base * 2^|S| + label.
using LiftedId = std::uint64_t;

struct LiftedEdge {
  LiftedId a;
  LiftedId b;
  EdgeId base_edge;
};

// Test hook: over `edge`, the lower endpoint's labels 0 and 1 trade partners.
// The result is still a lift, but no longer the tree/cotree one.
struct MatchingFault {
  EdgeId edge;
};

struct LiftOptions {
  std::size_t max_vertices = kDefaultMaxVertices;
  bool materialize = false;
  std::optional<MatchingFault> fault;
};

// Lift of a base graph over {0,1}^S: a tree edge uv matches (u,f) with (v,f);
// a cotree edge with coordinate i matches (u,f) with (v, f xor e_i).
// Neighbours are computed from the base adjacency unless materialized; either
// way they are enumerated in base edge id order.
class LiftedGraph {
 public:
  const Graph& base() const noexcept { return base_; }
  const TreeDecomposition& tree() const noexcept { return td_; }

  std::uint32_t label_width() const noexcept { return width_; }
  std::uint64_t num_labels() const noexcept { return std::uint64_t{1} << width_; }
  std::size_t num_vertices() const noexcept { return base_.num_vertices() * num_labels(); }
  std::size_t num_edges() const noexcept { return base_.num_edges() * num_labels(); }

  LiftedId encode(VertexId base, std::uint64_t label_bits) const noexcept {
    return (LiftedId{base} << width_) | label_bits;
  }
  LiftedId encode(const LiftedVertex& x) const;
  LiftedVertex decode(LiftedId x) const { return {base_of(x), Label(label_of(x), width_)}; }
  VertexId base_of(LiftedId x) const noexcept { return static_cast<VertexId>(x >> width_); }
  std::uint64_t label_of(LiftedId x) const noexcept { return x & (num_labels() - 1); }

  // Label bits flipped by crossing base edge e (0 for tree edges).
  std::uint64_t flip_mask(EdgeId e) const { return flip_.at(e); }

  // The other endpoint of the lifted edge over e at x; base_of(x) must be an
  // endpoint of e.
  LiftedId partner(LiftedId x, EdgeId e) const;

  std::size_t degree(LiftedId x) const { return base_.degree(base_of(x)); }

  template <class Fn>
  void for_each_neighbor(LiftedId x, Fn&& fn) const {
    if (materialized_) {
      const std::size_t k = base_.degree(base_of(x));
      const std::size_t at = offsets_[base_of(x)] * num_labels() + label_of(x) * k;
      for (std::size_t i = 0; i < k; ++i) fn(adjacency_[at + i], edge_of_slot_[at + i]);
      return;
    }
    for (const auto& inc : base_.neighbors(base_of(x))) fn(partner(x, inc.edge), inc.edge);
  }

  // Every lifted edge once, by base edge id then by label of the lower
  // endpoint's side.
  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    for (EdgeId e = 0; e < base_.num_edges(); ++e) {
      const VertexId lo = base_.edge(e).lower();
      for (std::uint64_t f = 0; f < num_labels(); ++f) {
        const LiftedId a = encode(lo, f);
        fn(LiftedEdge{a, partner(a, e), e});
      }
    }
  }

  bool materialized() const noexcept { return materialized_; }
  bool faulted() const noexcept { return fault_.has_value(); }

  friend LiftedGraph build_lift(const Graph& g, const TreeDecomposition& td, const LiftOptions& opts);

 private:
  Graph base_;
  TreeDecomposition td_;
  std::uint32_t width_ = 0;
  std::vector<std::uint64_t> flip_;
  std::optional<MatchingFault> fault_;

  bool materialized_ = false;
  std::vector<std::size_t> offsets_;  // base vertex -> prefix sum of base degrees
  std::vector<LiftedId> adjacency_;
  std::vector<EdgeId> edge_of_slot_;
};

// Throws CapExceeded when n * 2^|S| > opts.max_vertices.
LiftedGraph build_lift(const Graph& g, const TreeDecomposition& td, const LiftOptions& opts = {});

VertexId project_vertex(const LiftedGraph& lg, LiftedId x);
// Base edge under the lifted edge {a, b}; throws if {a, b} is not an edge.
EdgeId project_edge(const LiftedGraph& lg, LiftedId a, LiftedId b);

struct DirectedEdge {
  EdgeId edge;
  VertexId from;
};

// Unique lift of a base walk starting at `start`.
std::vector<LiftedVertex> lift_walk(const LiftedGraph& lg, std::span<const DirectedEdge> walk,
                                    const LiftedVertex& start);

// (u, f) -> (u, f xor shift); an automorphism of every tree/cotree lift.
LiftedVertex translate(const LiftedVertex& x, const Label& shift);

// Plain BFS over the lift from one vertex.
std::vector<std::uint32_t> lifted_bfs(const LiftedGraph& lg, LiftedId source);
bool is_connected(const LiftedGraph& lg);

// All-pairs distances via label translation: one BFS per representative
// (v, 0), and d((u,f),(v,h)) = d((u,0),(v,f xor h)).
class FiberDistances {
 public:
  std::uint32_t distance(LiftedId x, LiftedId y) const noexcept {
    const auto mask = num_labels_ - 1;
    const auto u = x >> width_;
    const auto shifted = y ^ (x & mask);
    return table_[u * num_vertices_ + shifted];
  }
  std::span<const std::uint32_t> from_representative(VertexId u) const {
    return {table_.data() + std::size_t{u} * num_vertices_, num_vertices_};
  }

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  bool connected() const noexcept { return connected_; }
  // Largest distance in the table; throws if the lift is disconnected.
  std::uint32_t diameter() const;
  // A pair realising the diameter: ((u,0), y) with the smallest (u, y).
  std::pair<LiftedId, LiftedId> diameter_pair(const LiftedGraph& lg) const;

  friend FiberDistances fiber_distances(const LiftedGraph& lg);

 private:
  std::uint32_t width_ = 0;
  std::uint64_t num_labels_ = 1;
  std::size_t num_vertices_ = 0;
  bool connected_ = true;
  std::vector<std::uint32_t> table_;
};

// Throws for faulted lifts, which lack the translation symmetry.
FiberDistances fiber_distances(const LiftedGraph& lg);

// Exact, from the n representatives. nullopt if the lift is a forest.
std::optional<std::uint32_t> lifted_girth(const LiftedGraph& lg);
std::uint32_t lifted_diameter_from_fibers(const LiftedGraph& lg);

// Lift as an edge list (lifted ids) plus "lifted_id base_vertex label_bits"
// mapping lines.
void write_lift_edge_list(std::ostream& out, const LiftedGraph& lg);
void write_lift_mapping(std::ostream& out, const LiftedGraph& lg);

}  // namespace girthlift
