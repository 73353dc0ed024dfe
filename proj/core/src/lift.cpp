#include "girthlift/lift.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>

#include "girthlift/error.hpp"

namespace girthlift {

Label::Label(std::uint64_t bits, std::uint32_t width) : bits_(bits), width_(width) {
  if (width > kMaxWidth) throw Error("label width " + std::to_string(width) + " is too large");
  if (width < 64 && (bits >> width) != 0) throw Error("label bits exceed width");
}

Label Label::unit(std::uint32_t coordinate, std::uint32_t width) {
  if (coordinate >= width) throw Error("label coordinate out of range");
  return Label(std::uint64_t{1} << coordinate, width);
}

Label Label::operator^(const Label& other) const {
  if (width_ != other.width_) throw Error("label width mismatch");
  return Label(bits_ ^ other.bits_, width_);
}

std::string Label::to_string() const {
  if (width_ == 0) return "-";
  std::string s(width_, '0');
  for (std::uint32_t i = 0; i < width_; ++i) {
    if (test(i)) s[width_ - 1 - i] = '1';
  }
  return s;
}

LiftedId LiftedGraph::encode(const LiftedVertex& x) const {
  if (x.base >= base_.num_vertices()) throw Error("lifted vertex base out of range");
  if (x.label.width() != width_) throw Error("label width does not match the lift");
  return encode(x.base, x.label.bits());
}

namespace {

std::uint64_t swap_first_two(std::uint64_t f) { return f <= 1 ? f ^ 1U : f; }

}  // namespace

LiftedId LiftedGraph::partner(LiftedId x, EdgeId e) const {
  const Edge& ed = base_.edge(e);
  const VertexId u = base_of(x);
  const VertexId v = ed.other(u);
  const std::uint64_t f = label_of(x);
  if (!fault_ || fault_->edge != e) return encode(v, f ^ flip_[e]);
  if (u == ed.lower()) return encode(v, swap_first_two(f) ^ flip_[e]);
  return encode(v, swap_first_two(f ^ flip_[e]));
}

LiftedGraph build_lift(const Graph& g, const TreeDecomposition& td, const LiftOptions& opts) {
  if (td.coordinate.size() != g.num_edges() || td.parent.size() != g.num_vertices()) {
    throw Error("tree decomposition does not belong to this graph");
  }
  const std::size_t width = td.cotree_size();
  // n * 2^width, saturating when it does not fit in size_t.
  const std::size_t n = g.num_vertices();
  const bool fits = width <= Label::kMaxWidth && (n == 0 || width <= static_cast<std::size_t>(std::countl_zero(n)));
  const std::size_t required = fits ? n << width : std::numeric_limits<std::size_t>::max();
  if (!fits || required > opts.max_vertices) {
    throw CapExceeded(required, opts.max_vertices);
  }

  LiftedGraph lg;
  lg.base_ = g;
  lg.td_ = td;
  lg.width_ = static_cast<std::uint32_t>(width);
  lg.flip_.assign(g.num_edges(), 0);
  for (std::size_t i = 0; i < width; ++i) lg.flip_[td.cotree[i]] = std::uint64_t{1} << i;

  if (opts.fault) {
    if (opts.fault->edge >= g.num_edges()) throw Error("fault edge out of range");
    if (width == 0) throw Error("fault injection needs at least one cotree edge");
    lg.fault_ = opts.fault;
  }

  if (opts.materialize) {
    const std::size_t n = g.num_vertices();
    lg.offsets_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) lg.offsets_[v + 1] = lg.offsets_[v] + g.degree(v);
    lg.adjacency_.reserve(lg.offsets_[n] * lg.num_labels());
    lg.edge_of_slot_.reserve(lg.offsets_[n] * lg.num_labels());
    for (VertexId v = 0; v < n; ++v) {
      for (std::uint64_t f = 0; f < lg.num_labels(); ++f) {
        const LiftedId x = lg.encode(v, f);
        for (const auto& inc : g.neighbors(v)) {
          lg.adjacency_.push_back(lg.partner(x, inc.edge));
          lg.edge_of_slot_.push_back(inc.edge);
        }
      }
    }
    lg.materialized_ = true;
  }
  return lg;
}

VertexId project_vertex(const LiftedGraph& lg, LiftedId x) { return lg.base_of(x); }

EdgeId project_edge(const LiftedGraph& lg, LiftedId a, LiftedId b) {
  const auto e = lg.base().find_edge(lg.base_of(a), lg.base_of(b));
  if (!e || lg.partner(a, *e) != b) throw Error("not an edge of the lift");
  return *e;
}

std::vector<LiftedVertex> lift_walk(const LiftedGraph& lg, std::span<const DirectedEdge> walk,
                                    const LiftedVertex& start) {
  LiftedId at = lg.encode(start);
  std::vector<LiftedVertex> out{start};
  out.reserve(walk.size() + 1);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto& step = walk[i];
    if (step.edge >= lg.base().num_edges()) throw Error("walk step " + std::to_string(i) + ": bad edge");
    if (step.from != lg.base_of(at) || !lg.base().edge(step.edge).has(step.from)) {
      throw Error("walk step " + std::to_string(i) + " does not continue from vertex " +
                  std::to_string(lg.base_of(at)));
    }
    at = lg.partner(at, step.edge);
    out.push_back(lg.decode(at));
  }
  return out;
}

LiftedVertex translate(const LiftedVertex& x, const Label& shift) { return {x.base, x.label ^ shift}; }

std::vector<std::uint32_t> lifted_bfs(const LiftedGraph& lg, LiftedId source) {
  std::vector<std::uint32_t> dist(lg.num_vertices(), kUnreachable);
  std::vector<LiftedId> queue;
  queue.reserve(lg.num_vertices());
  queue.push_back(source);
  dist.at(source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const LiftedId x = queue[head];
    const std::uint32_t next = dist[x] + 1;
    lg.for_each_neighbor(x, [&](LiftedId y, EdgeId) {
      if (dist[y] == kUnreachable) {
        dist[y] = next;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

bool is_connected(const LiftedGraph& lg) {
  if (lg.num_vertices() == 0) return true;
  const auto dist = lifted_bfs(lg, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::uint32_t FiberDistances::diameter() const {
  if (!connected_) throw Error("lift is disconnected");
  return table_.empty() ? 0 : *std::max_element(table_.begin(), table_.end());
}

std::pair<LiftedId, LiftedId> FiberDistances::diameter_pair(const LiftedGraph& lg) const {
  const auto diam = diameter();
  const auto it = std::find(table_.begin(), table_.end(), diam);
  const auto pos = static_cast<std::size_t>(it - table_.begin());
  const auto u = static_cast<VertexId>(pos / num_vertices_);
  return {lg.encode(u, 0), pos % num_vertices_};
}

FiberDistances fiber_distances(const LiftedGraph& lg) {
  if (lg.faulted()) throw Error("faulted lift has no label symmetry");
  FiberDistances fd;
  fd.width_ = lg.label_width();
  fd.num_labels_ = lg.num_labels();
  fd.num_vertices_ = lg.num_vertices();
  const std::size_t n = lg.base().num_vertices();
  fd.table_.reserve(n * fd.num_vertices_);
  for (VertexId u = 0; u < n; ++u) {
    const auto dist = lifted_bfs(lg, lg.encode(u, 0));
    if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) fd.connected_ = false;
    fd.table_.insert(fd.table_.end(), dist.begin(), dist.end());
  }
  return fd;
}

std::optional<std::uint32_t> lifted_girth(const LiftedGraph& lg) {
  if (lg.faulted()) throw Error("faulted lift has no label symmetry");
  std::uint32_t best = kUnreachable;
  std::vector<std::uint32_t> dist(lg.num_vertices(), kUnreachable);
  std::vector<EdgeId> via(lg.num_vertices());
  std::vector<LiftedId> queue;
  for (VertexId u = 0; u < lg.base().num_vertices(); ++u) {
    for (const LiftedId x : queue) dist[x] = kUnreachable;
    const LiftedId root = lg.encode(u, 0);
    queue.assign(1, root);
    dist[root] = 0;
    via[root] = std::numeric_limits<EdgeId>::max();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const LiftedId x = queue[head];
      if (best != kUnreachable && 2 * dist[x] >= best) break;
      lg.for_each_neighbor(x, [&](LiftedId y, EdgeId e) {
        if (e == via[x]) return;
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      });
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

std::uint32_t lifted_diameter_from_fibers(const LiftedGraph& lg) { return fiber_distances(lg).diameter(); }

void write_lift_edge_list(std::ostream& out, const LiftedGraph& lg) {
  out << lg.num_vertices() << ' ' << lg.num_edges() << '\n';
  lg.for_each_edge([&](const LiftedEdge& e) { out << e.a << ' ' << e.b << '\n'; });
}

void write_lift_mapping(std::ostream& out, const LiftedGraph& lg) {
  for (LiftedId x = 0; x < lg.num_vertices(); ++x) {
    const auto v = lg.decode(x);
    out << x << ' ' << v.base << ' ' << v.label.to_string() << '\n';
  }
}

}  // namespace girthlift
