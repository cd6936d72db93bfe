#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lipscomb/graph.hpp"
#include "lipscomb/rational.hpp"
#include "lipscomb/word.hpp"

namespace lipscomb {

// A point of the coordinate space indexed by A' = A \ {z}; entry k belongs to
// the symbol EmbeddingConfig::coordinate_symbol(k).
using ExactPoint = std::vector<Rational>;

// A graph together with the distinguished vertex z whose coordinate is
// dropped. Requires at least two vertices.
class EmbeddingConfig {
 public:
  EmbeddingConfig(Graph graph, Symbol z);
  // z defaults to the lexicographically smallest vertex.
  explicit EmbeddingConfig(Graph graph) : EmbeddingConfig(std::move(graph), 0) {}

  const Graph& graph() const { return graph_; }
  Symbol z() const { return z_; }
  std::size_t symbol_count() const { return graph_.vertex_count(); }
  std::size_t dimension() const { return graph_.vertex_count() - 1; }

  // Coordinate slot of b, or nullopt for b == z.
  std::optional<std::size_t> coordinate(Symbol b) const;
  Symbol coordinate_symbol(std::size_t k) const { return k < z_ ? k : k + 1; }

 private:
  Graph graph_;
  Symbol z_;
};

// u_a: 1 at coordinate a, 0 elsewhere; the origin for a == z.
ExactPoint basis_point(const EmbeddingConfig& cfg, Symbol a);
ExactPoint origin(const EmbeddingConfig& cfg);

// c_{a a' b}: 0 unless a' == b, then 1/2 for {a, a'} an edge and 1/3 otherwise.
Rational coefficient(const EmbeddingConfig& cfg, Symbol a, Symbol a_prime, Symbol b);

// Exact image of an eventually periodic word under the embedding
//   x  ->  sum_i ( prod_{j<=i} c_{x_j x_i x_i} ) u_{x_i}.
// The periodic tail is summed as a geometric series.
ExactPoint embed(const EmbeddingConfig& cfg, const AddressWord& x);

// prod_{j<=i} c_{x_j x_i x_i}, or 0 when x_i == z.
Rational partial_product(const EmbeddingConfig& cfg, const AddressWord& x, std::size_t i);

Rational distance_squared(const ExactPoint& p, const ExactPoint& q);
inline Rational embedding_distance_squared(const ExactPoint& p, const ExactPoint& q) {
  return distance_squared(p, q);
}

// "1=0 2=1/3" in coordinate order.
std::string format_point(const EmbeddingConfig& cfg, const ExactPoint& p);

}  // namespace lipscomb
