#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "lipscomb/graph.hpp"
#include "lipscomb/word.hpp"

namespace lipscomb {

// The graph (A^n, E_n) whose inverse limit under truncation is the Baire
// space: {u, v} is an edge iff u == v or u = s a b^k, v = s b a^k for an edge
// {a, b} of the base graph with a != b. Level 0 is the single empty word,
// labelled "-".
class LevelGraph {
 public:
  std::size_t level() const { return level_; }
  const Graph& base() const { return *base_; }
  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }

  // Vertex of the word with base-|A| code sum_i w_i |A|^(n-i).
  Vertex vertex_of_code(std::size_t code) const { return vertex_of_code_[code]; }
  Vertex vertex_of(const FiniteWord& w) const;

  friend LevelGraph level_graph(const Graph& g, std::size_t n, std::size_t vertex_cap);

 private:
  std::size_t level_ = 0;
  std::shared_ptr<const Graph> base_;
  std::shared_ptr<const Graph> graph_;
  std::vector<Vertex> vertex_of_code_;
};

// Throws ResourceLimit when |A|^n exceeds vertex_cap.
LevelGraph level_graph(const Graph& g, std::size_t n, std::size_t vertex_cap = 10'000'000);

// The E_n rule evaluated directly on two words of equal length.
bool level_adjacent(const Graph& g, const FiniteWord& u, const FiniteWord& v);

// |A|^n + (non-loop edges) * (|A|^n - 1) / (|A| - 1)
std::size_t level_edge_count(const Graph& g, std::size_t n);

// Drop-last-symbol map from level n to level n - 1.
GraphMap truncation_map(const LevelGraph& upper, const LevelGraph& lower);

struct LevelCheck {
  std::size_t level = 0;
  bool proper_epimorphism = false;
  bool fibers_isomorphic = false;
  bool level_connected = false;
  bool connectivity_matches = false;

  bool ok() const { return proper_epimorphism && fibers_isomorphic && connectivity_matches; }
};

// For m = 1..n: truncation A^m -> A^(m-1) is a proper epimorphism, every
// fiber is isomorphic to g, and level m is connected iff g is.
std::vector<LevelCheck> check_level_chain(const Graph& g, std::size_t n);

// x ~ y in the inverse limit: truncations adjacent in every E_n. Decided by
// checking levels up to a horizon past which eventually periodic words
// cannot change the answer.
bool limit_relation(const Graph& g, const AddressWord& x, const AddressWord& y);

// A finite prefix G_0 <- G_1 <- ... <- G_N of an inverse sequence;
// bonds()[k] maps G_{k+1} onto G_k and is verified to be a proper
// epimorphism at construction (InvalidInput otherwise).
class InverseSequence {
 public:
  InverseSequence(std::vector<std::shared_ptr<const Graph>> graphs, std::vector<GraphMap> bonds);

  std::size_t size() const { return graphs_.size(); }
  const Graph& graph(std::size_t k) const { return *graphs_[k]; }
  const std::vector<GraphMap>& bonds() const { return bonds_; }

 private:
  std::vector<std::shared_ptr<const Graph>> graphs_;
  std::vector<GraphMap> bonds_;
};

// Level graphs 0..max_level of g with truncation bonds.
InverseSequence lipscomb_sequence(const Graph& g, std::size_t max_level);

// Verdicts about the quotient of the limit by its adjacency relation. They
// presuppose that relation is transitive, which a finite prefix cannot
// certify; `assumes_transitive` records that.
struct QuotientConnectedness {
  bool connected = false;
  bool assumes_transitive = true;
};

// Least n0 such that every bond G_{m+1} -> G_m with m >= n0 in the prefix has
// connected fibers; nullopt when every nonempty suffix has a bad bond.
struct QuotientLocalConnectedness {
  std::optional<std::size_t> from_level;
  bool assumes_transitive = true;
};

QuotientConnectedness quotient_connected_verdict(const InverseSequence& seq);
QuotientLocalConnectedness quotient_locally_connected_verdict(const InverseSequence& seq);

bool all_fibers_connected(const GraphMap& bond);

}  // namespace lipscomb
