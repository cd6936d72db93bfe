#include "lipscomb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lipscomb/error.hpp"

namespace lipscomb {

namespace {

void add_edge(std::vector<std::vector<Vertex>>& adjacency, Vertex u, Vertex v) {
  adjacency[u].push_back(v);
  if (u != v) adjacency[v].push_back(u);
}

}  // namespace

Graph::Graph(std::shared_ptr<const Labels> labels, std::vector<std::vector<Vertex>> adjacency)
    : labels_(std::move(labels)), adjacency_(std::move(adjacency)) {
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    auto& nbrs = adjacency_[v];
    nbrs.push_back(v);
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  std::size_t half_degree_sum = 0;
  for (Vertex v = 0; v < adjacency_.size(); ++v) half_degree_sum += adjacency_[v].size() - 1;
  edge_count_ = adjacency_.size() + half_degree_sum / 2;
}

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  if (labels.empty()) throw InvalidInput("graph needs at least one vertex");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InvalidInput("duplicate vertex label");
  std::vector<std::pair<Vertex, Vertex>> indexed;
  indexed.reserve(edges.size());
  auto find = [&](const std::string& l) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) throw InvalidInput("edge endpoint is not a vertex: " + l);
    return static_cast<Vertex>(it - labels.begin());
  };
  for (const auto& [a, b] : edges) indexed.emplace_back(find(a), find(b));
  *this = from_sorted(std::move(labels), indexed);
}

Graph Graph::from_sorted(std::vector<std::string> sorted_labels,
                         const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (sorted_labels.empty()) throw InvalidInput("graph needs at least one vertex");
  for (std::size_t i = 1; i < sorted_labels.size(); ++i)
    if (!(sorted_labels[i - 1] < sorted_labels[i]))
      throw InvalidInput("labels must be strictly increasing");
  std::vector<std::vector<Vertex>> adjacency(sorted_labels.size());
  for (const auto& [u, v] : edges) {
    if (u >= adjacency.size() || v >= adjacency.size())
      throw InvalidInput("edge endpoint out of range");
    add_edge(adjacency, u, v);
  }
  return Graph(std::make_shared<const Labels>(std::move(sorted_labels)), std::move(adjacency));
}

Vertex Graph::index_of(const std::string& l) const {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), l);
  if (it == labels_->end() || *it != l) throw InvalidInput("unknown vertex: " + l);
  return static_cast<Vertex>(it - labels_->begin());
}

bool Graph::has_vertex(const std::string& l) const {
  return std::binary_search(labels_->begin(), labels_->end(), l);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u <= v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw InvalidInput("induced subgraph needs at least one vertex");
  // Labels are sorted already, so the induced labels stay sorted.
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (Vertex v : sorted) labels.push_back(label(v));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (Vertex w : adjacency_[sorted[i]]) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
      if (it != sorted.end() && *it == w) {
        auto j = static_cast<std::size_t>(it - sorted.begin());
        if (i < j) edges.emplace_back(i, j);
      }
    }
  return from_sorted(std::move(labels), edges);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.labels() == b.labels() && a.adjacency_ == b.adjacency_;
}

Graph complete_graph(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidInput("complete graph needs at least one label");
  std::sort(labels.begin(), labels.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < labels.size(); ++u)
    for (Vertex v = u + 1; v < labels.size(); ++v) edges.emplace_back(u, v);
  return Graph::from_sorted(std::move(labels), edges);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> block;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<Vertex>& image,
                        std::vector<bool>& used, Vertex next) {
  const std::size_t n = g.vertex_count();
  if (next == n) return true;
  for (Vertex candidate = 0; candidate < n; ++candidate) {
    if (used[candidate]) continue;
    if (g.neighbors(next).size() != h.neighbors(candidate).size()) continue;
    bool consistent = true;
    for (Vertex prev = 0; prev < next && consistent; ++prev)
      consistent = g.adjacent(next, prev) == h.adjacent(candidate, image[prev]);
    if (!consistent) continue;
    image[next] = candidate;
    used[candidate] = true;
    if (extend_isomorphism(g, h, image, used, next + 1)) return true;
    used[candidate] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto degrees = [](const Graph& x) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < x.vertex_count(); ++v) d.push_back(x.neighbors(v).size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  std::vector<Vertex> image(g.vertex_count());
  std::vector<bool> used(g.vertex_count(), false);
  return extend_isomorphism(g, h, image, used, 0);
}

GraphMap::GraphMap(std::shared_ptr<const Graph> source, std::shared_ptr<const Graph> target,
                   std::vector<Vertex> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (!source_ || !target_) throw InvalidInput("graph map needs source and target");
  if (assignment_.size() != source_->vertex_count())
    throw InvalidInput("graph map assignment is not total");
  for (Vertex v : assignment_)
    if (v >= target_->vertex_count()) throw InvalidInput("graph map image outside target");
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner) {
  if (inner.target_ptr() != outer.source_ptr() && !(inner.target() == outer.source()))
    throw InvalidInput("maps are not composable");
  std::vector<Vertex> assignment(inner.source().vertex_count());
  for (Vertex v = 0; v < assignment.size(); ++v) assignment[v] = outer(inner(v));
  return GraphMap(inner.source_ptr(), outer.target_ptr(), std::move(assignment));
}

bool is_homomorphism(const GraphMap& m) {
  const Graph& src = m.source();
  for (Vertex u = 0; u < src.vertex_count(); ++u)
    for (Vertex v : src.neighbors(u))
      if (u < v && !m.target().adjacent(m(u), m(v))) return false;
  return true;
}

bool is_surjective(const GraphMap& m) {
  std::vector<bool> hit(m.target().vertex_count(), false);
  for (Vertex v : m.assignment()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_proper_epimorphism(const GraphMap& m) {
  if (!is_homomorphism(m)) throw InvalidInput("map is not a graph homomorphism");
  if (!is_surjective(m)) return false;
  const Graph& src = m.source();
  const Graph& dst = m.target();
  // covered[t][k]: the k-th neighbor of t is reached by some source edge.
  std::vector<std::vector<bool>> covered(dst.vertex_count());
  for (Vertex t = 0; t < dst.vertex_count(); ++t) covered[t].assign(dst.neighbors(t).size(), false);
  auto mark = [&](Vertex a, Vertex b) {
    const auto& nbrs = dst.neighbors(a);
    auto k = static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), b) - nbrs.begin());
    covered[a][k] = true;
  };
  for (Vertex u = 0; u < src.vertex_count(); ++u)
    for (Vertex v : src.neighbors(u)) mark(m(u), m(v));
  for (const auto& row : covered)
    if (!std::all_of(row.begin(), row.end(), [](bool b) { return b; })) return false;
  return true;
}

std::vector<std::vector<Vertex>> preimages(const GraphMap& m) {
  std::vector<std::vector<Vertex>> out(m.target().vertex_count());
  for (Vertex u = 0; u < m.source().vertex_count(); ++u) out[m(u)].push_back(u);
  return out;
}

Graph fiber_subgraph(const GraphMap& m, Vertex v) {
  if (v >= m.target().vertex_count()) throw InvalidInput("fiber vertex not in target");
  std::vector<Vertex> preimage;
  for (Vertex u = 0; u < m.source().vertex_count(); ++u)
    if (m(u) == v) preimage.push_back(u);
  if (preimage.empty()) throw InvalidInput("empty fiber over " + m.target().label(v));
  return m.source().induced(preimage);
}

}  // namespace lipscomb
