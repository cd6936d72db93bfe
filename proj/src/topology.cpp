#include "lipscomb/topology.hpp"

#include <queue>

#include "lipscomb/error.hpp"

namespace lipscomb {

Rational simplex_diameter_squared(const EmbeddingConfig& cfg) {
  std::vector<ExactPoint> corners{origin(cfg)};
  for (Symbol a = 0; a < cfg.symbol_count(); ++a)
    if (a != cfg.z()) corners.push_back(basis_point(cfg, a));
  Rational best = 0;
  for (std::size_t p = 0; p < corners.size(); ++p)
    for (std::size_t q = p + 1; q < corners.size(); ++q)
      best = std::max(best, distance_squared(corners[p], corners[q]));
  return best;
}

Rational connectivity_epsilon_squared(const EmbeddingConfig& cfg, std::size_t depth) {
  if (depth == 0) throw InvalidInput("depth must be at least 1");
  return simplex_diameter_squared(cfg) / pow(Rational(4), static_cast<unsigned>(depth - 1));
}

namespace {

// f_w([0,1]^d) = [offset, offset + scale] per coordinate.
struct Cell {
  std::vector<Rational> offset;
  std::vector<Rational> scale;
  std::size_t depth;
};

Cell child(const Cell& parent, const AffineContraction& f) {
  Cell c{parent.offset, parent.scale, parent.depth + 1};
  for (std::size_t k = 0; k < c.offset.size(); ++k) {
    c.offset[k] += parent.scale[k] * f.shift[k];
    c.scale[k] *= f.scale[k];
  }
  return c;
}

Rational box_gap_squared(const Cell& a, const Cell& b) {
  Rational sum = 0;
  for (std::size_t k = 0; k < a.offset.size(); ++k) {
    Rational gap = 0;
    Rational a_hi = a.offset[k] + a.scale[k];
    Rational b_hi = b.offset[k] + b.scale[k];
    if (b.offset[k] > a_hi) gap = b.offset[k] - a_hi;
    else if (a.offset[k] > b_hi) gap = a.offset[k] - b_hi;
    sum += gap * gap;
  }
  return sum;
}

constexpr std::size_t kMaxCellPairs = 2'000'000;

}  // namespace

Rational cell_gap_squared(const IFS& s, const std::vector<Symbol>& first_s,
                          const std::vector<Symbol>& first_t, std::size_t depth) {
  if (depth == 0) throw InvalidInput("cell depth must be at least 1");
  if (first_s.empty() || first_t.empty()) throw InvalidInput("both sides need a symbol");
  const std::size_t dim = s.dimension();
  const Cell unit{std::vector<Rational>(dim, 0), std::vector<Rational>(dim, 1), 0};

  std::vector<Cell> cells;
  struct Pair {
    Rational gap;
    std::size_t depth_sum;
    std::size_t a, b;
  };
  // Smallest gap first; among equal gaps, deepest first.
  auto later = [](const Pair& x, const Pair& y) {
    if (x.gap != y.gap) return x.gap > y.gap;
    return x.depth_sum < y.depth_sum;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  auto push = [&](std::size_t a, std::size_t b) {
    queue.push(Pair{box_gap_squared(cells[a], cells[b]), cells[a].depth + cells[b].depth, a, b});
  };

  std::vector<std::size_t> left, right;
  for (Symbol a : first_s) {
    cells.push_back(child(unit, s.map_for(a)));
    left.push_back(cells.size() - 1);
  }
  for (Symbol b : first_t) {
    cells.push_back(child(unit, s.map_for(b)));
    right.push_back(cells.size() - 1);
  }
  for (std::size_t a : left)
    for (std::size_t b : right) push(a, b);

  std::size_t expanded = 0;
  while (!queue.empty()) {
    Pair top = queue.top();
    queue.pop();
    if (cells[top.a].depth == depth && cells[top.b].depth == depth) return top.gap;
    if (++expanded > kMaxCellPairs) throw ResourceLimit("cell gap search exceeded its budget");
    // Refine the shallower cell of the pair.
    bool refine_a = cells[top.a].depth <= cells[top.b].depth;
    std::size_t parent = refine_a ? top.a : top.b;
    for (const auto& f : s.maps()) {
      cells.push_back(child(cells[parent], f));
      std::size_t c = cells.size() - 1;
      if (refine_a) push(c, top.b);
      else push(top.a, c);
    }
  }
  throw InvariantViolation("cell gap search ended without a leaf pair");
}

ConnectivityReport connectivity_verdict(const EmbeddingConfig& cfg, std::size_t depth,
                                        const IterationOptions& options,
                                        const std::optional<Rational>& eps_squared) {
  if (depth == 0) throw InvalidInput("connectivity depth must be at least 1");
  const Graph& g = cfg.graph();
  const IFS system = build_system(cfg);
  ConnectivityReport report;
  report.graph_connected = is_connected(g);
  report.verdict = report.graph_connected ? Verdict::connected : Verdict::disconnected;

  if (report.graph_connected) {
    PointCloud cloud = attractor_cloud(system, depth, options);
    EpsilonWitness w;
    w.depth = depth;
    w.eps_squared = eps_squared ? *eps_squared : connectivity_epsilon_squared(cfg, depth);
    if (sgn(w.eps_squared) <= 0) throw InvalidInput("epsilon must be positive");
    w.point_count = cloud.size();
    w.component_count = epsilon_components(cloud, w.eps_squared).block_count;
    if (w.component_count != 1)
      throw InvariantViolation("connected graph but the depth-" + std::to_string(depth) +
                               " cloud has " + std::to_string(w.component_count) +
                               " epsilon-components");
    report.epsilon = w;
    return report;
  }

  auto blocks = components(g);
  SeparationWitness w;
  w.depth = depth;
  w.side_s = blocks.front();
  for (std::size_t b = 1; b < blocks.size(); ++b)
    w.side_t.insert(w.side_t.end(), blocks[b].begin(), blocks[b].end());
  std::sort(w.side_t.begin(), w.side_t.end());

  PointCloud previous = attractor_cloud(system, depth - 1, options);
  PointCloud part_s = hutchinson_step(system.restricted(w.side_s), previous, options);
  PointCloud part_t = hutchinson_step(system.restricted(w.side_t), previous, options);
  w.cloud_gap_squared = min_distance_squared(part_s, part_t);
  w.box_gap_squared = cell_gap_squared(system, w.side_s, w.side_t, depth);
  if (sgn(w.box_gap_squared) <= 0)
    throw InvariantViolation("disconnected graph but the cell gap is not positive");
  if (w.box_gap_squared > w.cloud_gap_squared)
    throw InvariantViolation("cell gap exceeds the distance between cloud parts");
  report.separation = w;
  return report;
}

PieceIntersection piece_intersection(const EmbeddingConfig& cfg, Symbol i, Symbol j,
                                     std::size_t depth, const IterationOptions& options) {
  if (i == j) throw InvalidInput("piece intersection needs two distinct symbols");
  if (i >= cfg.symbol_count() || j >= cfg.symbol_count()) throw InvalidInput("unknown symbol");
  const IFS system = build_system(cfg);
  PieceIntersection out;
  if (cfg.graph().adjacent(i, j)) {
    ExactPoint mid = basis_point(cfg, i);
    ExactPoint uj = basis_point(cfg, j);
    for (std::size_t k = 0; k < mid.size(); ++k) mid[k] = (mid[k] + uj[k]) / 2;
    PointCloud cloud = attractor_cloud(system, depth, options);
    out.in_piece_i = hutchinson_step(system.restricted({i}), cloud, options).contains(mid);
    out.in_piece_j = hutchinson_step(system.restricted({j}), cloud, options).contains(mid);
    out.point = std::move(mid);
    return out;
  }
  out.gap_squared = cell_gap_squared(system, {i}, {j}, std::max<std::size_t>(depth, 1));
  if (sgn(out.gap_squared) <= 0)
    throw InvariantViolation("non-adjacent pieces with non-positive cell gap");
  return out;
}

bool family_connectivity(const Graph& g) {
  const auto edges = g.edges();
  UnionFind uf(edges.size());
  std::vector<std::size_t> first_edge_at(g.vertex_count(), edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (Vertex v : {edges[e].first, edges[e].second}) {
      if (first_edge_at[v] == edges.size()) first_edge_at[v] = e;
      else uf.unite(first_edge_at[v], e);
    }
  return uf.set_count() == 1;
}

LocalVerdict local_connectedness_verdict(const Graph& g) {
  return is_connected(g) ? LocalVerdict::connected_locally_arcwise : LocalVerdict::disconnected;
}

}  // namespace lipscomb
