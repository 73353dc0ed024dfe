#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "girthlift/lift.hpp"
#include "girthlift/rational.hpp"

namespace girthlift {

// Sides of the cut R(e) = pi^{-1}(e) for every base edge, as bit masks.
//
//   h_e(v, f) = [v in B_e] xor parity(f & crossing_e)
//
// Cotree edge with coordinate i: B_e is empty and crossing_e = {i}, so h_e
// reads bit i (0-side = labels with bit i clear). Tree edge: (A_e, B_e) are
// the sides of T - e with A_e holding the lower endpoint, and crossing_e is
// the set of cotree coordinates whose edges join A_e to B_e (0-side = P1).
class CutIndex {
 public:
  CutIndex(const Graph& g, const TreeDecomposition& td);

  bool side(EdgeId e, VertexId v, std::uint64_t label_bits) const {
    const bool parity = (__builtin_popcountll(label_bits & crossing_[e]) & 1) != 0;
    return in_b_[e * n_ + v] != parity;
  }
  std::uint64_t crossing_mask(EdgeId e) const { return crossing_.at(e); }
  bool in_b(EdgeId e, VertexId v) const { return in_b_.at(e * n_ + v) != 0; }
  std::size_t num_edges() const noexcept { return crossing_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> crossing_;
  std::vector<std::uint8_t> in_b_;  // m x n
};

// h_e(x) straight from the definition: tree_split plus a scan over the
// cotree. Slow; used as a cross-check for CutIndex.
bool cut_side(const LiftedGraph& lg, EdgeId e, const LiftedVertex& x);
bool cut_side(const CutIndex& cuts, EdgeId e, const LiftedVertex& x);

// F: one {0,1}^{E(G)} row per lifted vertex, packed into 64-bit words.
class EmbeddingTable {
 public:
  std::size_t num_rows() const noexcept { return rows_; }
  std::size_t num_coordinates() const noexcept { return coordinates_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const std::uint64_t> row(LiftedId x) const { return {data_.data() + x * words_, words_}; }
  bool bit(LiftedId x, EdgeId e) const { return (data_[x * words_ + e / 64] >> (e % 64)) & 1U; }

  friend EmbeddingTable embed(const LiftedGraph& lg);

 private:
  std::size_t rows_ = 0;
  std::size_t coordinates_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

EmbeddingTable embed(const LiftedGraph& lg);

// ||F(x) - F(y)||_1, the Hamming distance of the rows.
std::uint32_t l1_distance(const EmbeddingTable& t, LiftedId x, LiftedId y);

struct LiftedPair {
  LiftedId x;
  LiftedId y;

  auto operator<=>(const LiftedPair&) const = default;
};

namespace pairs {
struct Exhaustive {};
struct Sampled {
  std::uint64_t count;
  std::uint64_t seed;
};
}  // namespace pairs

using PairPolicy = std::variant<pairs::Exhaustive, pairs::Sampled>;

// Sampled pair set: `count` uniform draws of distinct vertices, every lifted
// edge, and the diameter pair; normalised to x < y, sorted, deduplicated.
std::vector<LiftedPair> sampled_pairs(const LiftedGraph& lg, const FiberDistances& fd,
                                      std::uint64_t count, std::uint64_t seed);

// Visits pairs in ascending (x, y) order with x < y.
template <class Fn>
void for_each_pair(const LiftedGraph& lg, const FiberDistances& fd, const PairPolicy& policy, Fn&& fn) {
  if (const auto* s = std::get_if<pairs::Sampled>(&policy)) {
    for (const auto& p : sampled_pairs(lg, fd, s->count, s->seed)) fn(p);
    return;
  }
  const auto n = static_cast<LiftedId>(lg.num_vertices());
  for (LiftedId x = 0; x < n; ++x) {
    for (LiftedId y = x + 1; y < n; ++y) fn(LiftedPair{x, y});
  }
}

std::string describe(const PairPolicy& policy);

struct DistortionReport {
  Rational lip{0};
  Rational colip{0};
  Rational distortion{0};
  LiftedPair witness{0, 0};  // attains colip; smallest such pair
  std::uint32_t witness_distance = 0;
  std::uint32_t witness_l1 = 0;
  std::uint64_t pairs_examined = 0;
  PairPolicy mode;
};

// Exact Lipschitz constants of F and F^{-1} over the policy's pairs (plus,
// in sampled mode, every lifted edge). Throws if F collapses a pair.
DistortionReport distortion(const LiftedGraph& lg, const EmbeddingTable& t, const FiberDistances& fd,
                            const PairPolicy& policy);

// max(1, 1 + 6 * diam / girth).
Rational theorem_bound(std::uint32_t base_girth, std::uint32_t base_diameter);

// Every lifted edge over e must cross R(e) and no other cut. Covers the cut
// lemma, the partition of lifted edges by the m cuts, and 1-Lipschitz rows.
struct CutCheck {
  std::uint64_t edges_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // first few, human readable

  bool pass() const noexcept { return violation_count == 0; }
};

CutCheck check_cut_properties(const LiftedGraph& lg, const EmbeddingTable& t);

}  // namespace girthlift
