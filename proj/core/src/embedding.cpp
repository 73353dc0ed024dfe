#include "girthlift/embedding.hpp"

#include <algorithm>
#include <bit>

#include "girthlift/error.hpp"
#include "girthlift/rng.hpp"

namespace girthlift {

CutIndex::CutIndex(const Graph& g, const TreeDecomposition& td)
    : n_(g.num_vertices()), crossing_(g.num_edges(), 0), in_b_(g.num_edges() * g.num_vertices(), 0) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!td.is_tree_edge(e)) {
      crossing_[e] = std::uint64_t{1} << td.coordinate[e];
      continue;
    }
    const auto split = tree_split(td, e);
    for (const VertexId v : split.b) in_b_[e * n_ + v] = 1;
    for (std::size_t i = 0; i < td.cotree.size(); ++i) {
      const Edge& c = g.edge(td.cotree[i]);
      if (in_b_[e * n_ + c.u] != in_b_[e * n_ + c.v]) crossing_[e] |= std::uint64_t{1} << i;
    }
  }
}

bool cut_side(const CutIndex& cuts, EdgeId e, const LiftedVertex& x) {
  return cuts.side(e, x.base, x.label.bits());
}

bool cut_side(const LiftedGraph& lg, EdgeId e, const LiftedVertex& x) {
  const auto& td = lg.tree();
  if (e >= lg.base().num_edges()) throw Error("cut_side: edge out of range");
  if (!td.is_tree_edge(e)) return x.label.test(static_cast<std::uint32_t>(td.coordinate[e]));

  const auto split = tree_split(td, e);
  const auto in_a = [&](VertexId v) { return std::find(split.a.begin(), split.a.end(), v) != split.a.end(); };
  unsigned sum = 0;
  for (std::size_t i = 0; i < td.cotree.size(); ++i) {
    const Edge& c = lg.base().edge(td.cotree[i]);
    if (in_a(c.u) != in_a(c.v)) sum += x.label.test(static_cast<std::uint32_t>(i)) ? 1 : 0;
  }
  const bool even = sum % 2 == 0;
  const bool in_p1 = in_a(x.base) ? even : !even;
  return !in_p1;
}

EmbeddingTable embed(const LiftedGraph& lg) {
  const CutIndex cuts(lg.base(), lg.tree());
  EmbeddingTable t;
  t.rows_ = lg.num_vertices();
  t.coordinates_ = lg.base().num_edges();
  t.words_ = std::max<std::size_t>(1, (t.coordinates_ + 63) / 64);
  t.data_.assign(t.rows_ * t.words_, 0);
  for (LiftedId x = 0; x < t.rows_; ++x) {
    const VertexId v = lg.base_of(x);
    const std::uint64_t f = lg.label_of(x);
    std::uint64_t* row = t.data_.data() + x * t.words_;
    for (EdgeId e = 0; e < t.coordinates_; ++e) {
      if (cuts.side(e, v, f)) row[e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }
  return t;
}

std::uint32_t l1_distance(const EmbeddingTable& t, LiftedId x, LiftedId y) {
  const auto a = t.row(x);
  const auto b = t.row(y);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += static_cast<std::uint32_t>(std::popcount(a[i] ^ b[i]));
  return d;
}

std::vector<LiftedPair> sampled_pairs(const LiftedGraph& lg, const FiberDistances& fd,
                                      std::uint64_t count, std::uint64_t seed) {
  if (count == 0) throw Error("sampled pair policy needs count >= 1");
  const auto n = static_cast<std::uint64_t>(lg.num_vertices());
  if (n < 2) throw Error("sampled pair policy needs at least two lifted vertices");
  std::vector<LiftedPair> out;
  out.reserve(count + lg.num_edges() + 1);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    const LiftedId x = uniform_below(rng, n);
    LiftedId y = uniform_below(rng, n - 1);
    if (y >= x) ++y;
    out.push_back({std::min(x, y), std::max(x, y)});
  }
  lg.for_each_edge([&](const LiftedEdge& e) { out.push_back({std::min(e.a, e.b), std::max(e.a, e.b)}); });
  const auto [dx, dy] = fd.diameter_pair(lg);
  if (dx != dy) out.push_back({std::min(dx, dy), std::max(dx, dy)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string describe(const PairPolicy& policy) {
  if (const auto* s = std::get_if<pairs::Sampled>(&policy)) {
    return "sample:" + std::to_string(s->count) + " seed=" + std::to_string(s->seed);
  }
  return "exhaustive";
}

DistortionReport distortion(const LiftedGraph& lg, const EmbeddingTable& t, const FiberDistances& fd,
                            const PairPolicy& policy) {
  if (!fd.connected()) throw Error("distortion: lift is disconnected");
  DistortionReport r;
  r.mode = policy;
  // Running maxima as fractions num/den, compared by cross-multiplication.
  std::uint64_t lip_num = 0, lip_den = 1;
  std::uint64_t co_num = 0, co_den = 1;
  bool have = false;
  const auto visit = [&](LiftedPair p) {
    const std::uint32_t d = fd.distance(p.x, p.y);
    const std::uint32_t h = l1_distance(t, p.x, p.y);
    if (h == 0) {
      throw Error("F is not injective: lifted vertices " + std::to_string(p.x) + " and " +
                  std::to_string(p.y) + " share a row");
    }
    ++r.pairs_examined;
    if (std::uint64_t{h} * lip_den > lip_num * d) {
      lip_num = h;
      lip_den = d;
    }
    if (!have || std::uint64_t{d} * co_den > co_num * h) {
      co_num = d;
      co_den = h;
      r.witness = p;
      r.witness_distance = d;
      r.witness_l1 = h;
      have = true;
    }
  };
  for_each_pair(lg, fd, policy, visit);
  if (!have) throw Error("distortion: no pairs examined");
  r.lip = Rational(static_cast<std::int64_t>(lip_num), static_cast<std::int64_t>(lip_den));
  r.colip = Rational(static_cast<std::int64_t>(co_num), static_cast<std::int64_t>(co_den));
  r.distortion = r.lip * r.colip;
  return r;
}

Rational theorem_bound(std::uint32_t base_girth, std::uint32_t base_diameter) {
  if (base_girth == 0) throw Error("theorem bound: girth must be positive");
  const Rational b = Rational(1) + Rational(6 * static_cast<std::int64_t>(base_diameter), base_girth);
  return std::max(Rational(1), b);
}

CutCheck check_cut_properties(const LiftedGraph& lg, const EmbeddingTable& t) {
  CutCheck check;
  lg.for_each_edge([&](const LiftedEdge& e) {
    ++check.edges_checked;
    const auto a = t.row(e.a);
    const auto b = t.row(e.b);
    std::vector<EdgeId> crossed;
    for (std::size_t w = 0; w < a.size(); ++w) {
      for (std::uint64_t diff = a[w] ^ b[w]; diff != 0; diff &= diff - 1) {
        crossed.push_back(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(diff))));
      }
    }
    if (crossed.size() == 1 && crossed.front() == e.base_edge) return;
    ++check.violation_count;
    if (check.violations.size() < 8) {
      std::string msg = "lifted edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " over base edge " +
                        std::to_string(e.base_edge) + " crosses cuts {";
      for (std::size_t i = 0; i < crossed.size(); ++i) msg += (i ? "," : "") + std::to_string(crossed[i]);
      check.violations.push_back(msg + "}");
    }
  });
  return check;
}

}  // namespace girthlift
