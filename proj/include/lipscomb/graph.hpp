#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lipscomb {

using Vertex = std::size_t;
using Labels = std::vector<std::string>;

// Finite undirected simple graph with a loop at every vertex.
//
// Vertices are identified by string labels kept in lexicographic order;
// vertex indices refer to that order. Loops are always present, whether or
// not the caller lists them. Values are immutable after construction.
class Graph {
 public:
  // Throws InvalidInput on an empty or duplicated label set, or on an edge
  // endpoint that is not a vertex. Labels may be given in any order.
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& edges);

  // Same, with edges given as indices into `sorted_labels`, which must
  // already be strictly increasing.
  static Graph from_sorted(std::vector<std::string> sorted_labels,
                           const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return labels_->size(); }
  const std::string& label(Vertex v) const { return (*labels_)[v]; }
  const Labels& labels() const { return *labels_; }
  // Shared handle so words can reference the alphabet without copying it.
  const std::shared_ptr<const Labels>& alphabet() const { return labels_; }

  // Throws InvalidInput for an unknown label.
  Vertex index_of(const std::string& label) const;
  bool has_vertex(const std::string& label) const;

  bool adjacent(Vertex u, Vertex v) const;
  // Sorted, includes v itself.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }

  // Number of edges, counting each loop once.
  std::size_t edge_count() const { return edge_count_; }
  // Edges {u, v} with u <= v, in lexicographic order of (u, v).
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Induced subgraph on the given vertices (labels preserved).
  Graph induced(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph(std::shared_ptr<const Labels> labels, std::vector<std::vector<Vertex>> adjacency);

  std::shared_ptr<const Labels> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Every unordered pair of labels, loops included, is an edge.
Graph complete_graph(std::vector<std::string> labels);

bool is_connected(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

// A vertex assignment between two graphs. The assignment is total and lands
// in the target's vertex range (checked at construction).
class GraphMap {
 public:
  GraphMap(std::shared_ptr<const Graph> source, std::shared_ptr<const Graph> target,
           std::vector<Vertex> assignment);

  const Graph& source() const { return *source_; }
  const Graph& target() const { return *target_; }
  const std::shared_ptr<const Graph>& source_ptr() const { return source_; }
  const std::shared_ptr<const Graph>& target_ptr() const { return target_; }
  Vertex operator()(Vertex v) const { return assignment_[v]; }
  const std::vector<Vertex>& assignment() const { return assignment_; }

 private:
  std::shared_ptr<const Graph> source_;
  std::shared_ptr<const Graph> target_;
  std::vector<Vertex> assignment_;
};

// outer ∘ inner; inner's target must be outer's source.
GraphMap compose(const GraphMap& outer, const GraphMap& inner);

bool is_homomorphism(const GraphMap& m);

bool is_surjective(const GraphMap& m);

// Surjective and every target edge is the image of some source edge.
// Throws InvalidInput when m is not a homomorphism.
bool is_proper_epimorphism(const GraphMap& m);

// preimages(m)[v] lists the source vertices mapped to v, in increasing order.
std::vector<std::vector<Vertex>> preimages(const GraphMap& m);

// Induced subgraph on the preimage of v. Throws InvalidInput when v is out
// of range or the preimage is empty.
Graph fiber_subgraph(const GraphMap& m, Vertex v);

}  // namespace lipscomb
