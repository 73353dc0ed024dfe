#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "girthlift/embedding.hpp"
#include "girthlift/graph.hpp"
#include "girthlift/lift.hpp"

namespace girthlift {

// Shortest path x -> y as a vertex sequence (just {x} when x == y). Built
// backwards from y; each step takes the smallest-id neighbour one closer to x,
// which is the BFS-from-x parent under smallest-id tie-breaking.
std::vector<LiftedId> shortest_lifted_path(const LiftedGraph& lg, const FiberDistances& fd, LiftedId x,
                                           LiftedId y);

// Proof objects for one shortest lifted path P.
//
// The projected walk pi(P) induces the base subgraph I(P). Counters, in the
// usual notation:
//   components      C   2-edge-connected components of I(P) with >= 1 edge
//   bridge_paths    N   maximal paths of bridges whose inner vertices have
//                       degree 2 in I(P)
//   single_bridges  M1  bridges used once
//   component_edges M2  edges inside 2-edge-connected components
//   double_bridges  M3  bridges used twice
struct WalkAnalysis {
  LiftedId x = 0;
  LiftedId y = 0;
  VertexId base_x = 0;
  VertexId base_y = 0;
  std::uint32_t path_len = 0;
  std::vector<LiftedId> path;
  std::vector<DirectedEdge> walk;

  // I(P) with local ids; ip_vertices / ip_edges map them back to the base.
  Graph ip;
  std::vector<VertexId> ip_vertices;
  std::vector<EdgeId> ip_edges;
  std::vector<std::uint32_t> multiplicity;  // per local edge
  BridgeDecomposition bridge_info;

  std::uint32_t components = 0;
  std::uint32_t bridge_paths = 0;
  std::uint32_t single_bridges = 0;
  std::uint32_t component_edges = 0;
  std::uint32_t double_bridges = 0;
  std::uint32_t odd_edges = 0;  // edges used an odd number of times

  // Maximal degree-2 paths of multiplicity-2 bridges, by length.
  std::vector<std::uint32_t> segments;

  std::uint32_t max_multiplicity() const;
};

WalkAnalysis analyze(const LiftedGraph& lg, std::span<const LiftedId> path);

struct Verdict {
  std::string check;
  bool pass = true;
  std::vector<std::string> violations;
};

// N(P) degrees are even away from pi(x) and pi(y).
Verdict verify_euler_parity(const WalkAnalysis& wa);
// Only bridges of I(P) repeat, and none more than twice.
Verdict verify_repetitions(const WalkAnalysis& wa);
// N <= 2C + 1; with C = 0 every edge is used once and d = ||F(x)-F(y)||_1.
Verdict verify_counting(const WalkAnalysis& wa);
// Every segment is no longer than the base diameter.
Verdict verify_segments(const WalkAnalysis& wa, std::uint32_t base_diameter);
// ||F(x)-F(y)||_1 = M1 + M2 = odd_edges, d = M1 + M2 + 2 M3, M2 >= C g and
// M3 <= N diam.
Verdict verify_accounting(const WalkAnalysis& wa, const EmbeddingTable& t, std::uint32_t base_girth,
                          std::uint32_t base_diameter);

// Degree-1 vertices of I(P) are pi(x) or pi(y).
Verdict verify_leaf_endpoints(const WalkAnalysis& wa);
// Each 2-edge-connected component with an edge has >= girth edges.
Verdict verify_component_girth(const WalkAnalysis& wa, std::uint32_t base_girth);
// Lifting pi(P) from x ends at y.
Verdict verify_relift(const LiftedGraph& lg, const WalkAnalysis& wa);

// Structured text: pair, path, multiplicities, I(P) edges, counters, verdicts.
std::string forensic_dump(const LiftedGraph& lg, const WalkAnalysis& wa, std::span<const Verdict> verdicts);

struct LemmaContext {
  const LiftedGraph& lg;
  const FiberDistances& fd;
  const EmbeddingTable& table;
  std::uint32_t base_girth;
  std::uint32_t base_diameter;
};

// The full battery for one pair, in a fixed order.
std::vector<Verdict> check_pair(const LemmaContext& ctx, const WalkAnalysis& wa);

struct CheckTally {
  std::string check;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct SweepSummary {
  std::uint64_t pairs = 0;
  std::uint64_t failed_pairs = 0;
  std::vector<CheckTally> tallies;
  std::vector<std::string> dumps;  // forensic dumps of the first failures

  bool pass() const noexcept { return failed_pairs == 0; }
};

// Called once per pair, in pair order.
using PairObserver = std::function<void(const WalkAnalysis&, std::span<const Verdict>)>;

// Verdicts are collected, never thrown; one bad pair does not stop a sweep.
SweepSummary sweep(const LemmaContext& ctx, const PairPolicy& policy, std::size_t max_dumps = 4,
                   const PairObserver& observer = {});
SweepSummary sweep(const LemmaContext& ctx, std::span<const LiftedPair> pairs, std::size_t max_dumps = 4,
                   const PairObserver& observer = {});

// Stable names of the checks run by check_pair.
std::span<const std::string_view> check_names();

}  // namespace girthlift
