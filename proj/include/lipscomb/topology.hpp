#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lipscomb/embedding.hpp"
#include "lipscomb/graph.hpp"
#include "lipscomb/ifs.hpp"
#include "lipscomb/rational.hpp"
#include "lipscomb/spatial.hpp"

namespace lipscomb {

enum class Verdict { connected, disconnected };

// The depth-n fixed-point cloud is eps-connected.
struct EpsilonWitness {
  std::size_t depth = 0;
  Rational eps_squared;
  std::size_t point_count = 0;
  std::size_t component_count = 0;
};

// Pieces whose addresses start in `side_s` are separated from those starting
// in `side_t`. box_gap_squared is a lower bound for the squared distance of
// the two parts of the attractor; cloud_gap_squared is the squared distance
// between the two parts of the depth-n cloud.
struct SeparationWitness {
  std::size_t depth = 0;
  std::vector<Symbol> side_s;
  std::vector<Symbol> side_t;
  Rational box_gap_squared;
  Rational cloud_gap_squared;
};

struct ConnectivityReport {
  bool graph_connected = false;
  Verdict verdict = Verdict::disconnected;
  std::optional<EpsilonWitness> epsilon;
  std::optional<SeparationWitness> separation;
};

// Squared max pairwise distance among the origin and the unit points.
Rational simplex_diameter_squared(const EmbeddingConfig& cfg);

// (diam * 2^-(depth-1))^2
Rational connectivity_epsilon_squared(const EmbeddingConfig& cfg, std::size_t depth);

// Verdict from the graph, plus a numerical witness computed at `depth` >= 1.
// Throws InvariantViolation if the witness fails. `eps_squared` replaces the
// default connectivity_epsilon_squared(cfg, depth).
ConnectivityReport connectivity_verdict(const EmbeddingConfig& cfg, std::size_t depth,
                                        const IterationOptions& options = {},
                                        const std::optional<Rational>& eps_squared = std::nullopt);

// Squared minimum distance between depth-n cells f_w([0,1]^d) whose words
// start in `first_s` and those whose words start in `first_t`. Exact.
Rational cell_gap_squared(const IFS& s, const std::vector<Symbol>& first_s,
                          const std::vector<Symbol>& first_t, std::size_t depth);

struct PieceIntersection {
  // (u_i + u_j)/2 when {i, j} is an edge.
  std::optional<ExactPoint> point;
  bool in_piece_i = false;
  bool in_piece_j = false;
  // Positive lower bound on the squared piece distance for non-edges.
  Rational gap_squared = 0;
};

// f_i(cloud) and f_j(cloud) for the depth-n fixed-point cloud. i != j.
PieceIntersection piece_intersection(const EmbeddingConfig& cfg, Symbol i, Symbol j,
                                     std::size_t depth, const IterationOptions& options = {});

// Connectivity of the family of two-map sub-attractors indexed by edges
// (loops give the singletons {u_i}); two members meet when the edges share
// a vertex.
bool family_connectivity(const Graph& g);

enum class LocalVerdict { connected_locally_arcwise, disconnected };

LocalVerdict local_connectedness_verdict(const Graph& g);

}  // namespace lipscomb
