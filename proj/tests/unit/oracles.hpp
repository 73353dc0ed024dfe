#pragma once

// Slow, obviously-correct reference implementations for cross-checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "girthlift/graph.hpp"
#include "girthlift/lift.hpp"
#include "girthlift/rng.hpp"

namespace oracle {

using girthlift::Graph;

// Shortest cycle by trying every edge: remove it, BFS between its ends.
std::optional<std::uint32_t> girth(const Graph& g);

// Floyd-Warshall; kUnreachable when disconnected.
std::vector<std::vector<std::uint32_t>> all_pairs(const Graph& g);

// e is a bridge iff deleting it disconnects its endpoints.
std::vector<bool> bridges(const Graph& g);

// Vertices reachable from `from` using only `edges`, minus `removed`.
std::vector<bool> reachable(const Graph& g, const std::vector<girthlift::EdgeId>& edges,
                            girthlift::EdgeId removed, girthlift::VertexId from);

// Backtracking isomorphism test for small graphs.
bool isomorphic(const Graph& a, const Graph& b);

Graph cycle(std::size_t n);
Graph random_graph(std::size_t n, double p, girthlift::Rng& rng);

// The lift as a plain graph on lifted ids, edges collected via for_each_edge.
Graph as_graph(const girthlift::LiftedGraph& lg);

}  // namespace oracle
