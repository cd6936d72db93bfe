#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lipscomb/embedding.hpp"
#include "lipscomb/point_cloud.hpp"
#include "lipscomb/rational.hpp"

namespace lipscomb {

// x -> diag(scale) x + shift, with every scale entry in (0, 1).
struct AffineContraction {
  std::vector<Rational> scale;
  ExactPoint shift;

  Rational lipschitz() const;
};

ExactPoint apply(const AffineContraction& f, const ExactPoint& p);

// Componentwise shift / (1 - scale).
ExactPoint fixed_point(const AffineContraction& f);

// One contraction per symbol; maps()[i] belongs to symbol symbols()[i].
class IFS {
 public:
  IFS(EmbeddingConfig config, std::vector<Symbol> symbols, std::vector<AffineContraction> maps);

  const EmbeddingConfig& config() const { return config_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const std::vector<AffineContraction>& maps() const { return maps_; }
  std::size_t dimension() const { return config_.dimension(); }

  // Map for symbol a. Throws InvalidInput when a is not part of the system.
  const AffineContraction& map_for(Symbol a) const;

  // max over maps of their Lipschitz constants
  const Rational& lipschitz() const { return lipschitz_; }

  // The subsystem keeping only the listed symbols (in the given order).
  IFS restricted(const std::vector<Symbol>& keep) const;

  // Integer form of the maps on a lattice: numerator' = factor_k X_k +
  // offset_k * D, with the denominator multiplied by lattice_multiplier().
  std::int64_t lattice_multiplier() const { return multiplier_; }
  const std::vector<std::int64_t>& lattice_factors(std::size_t m) const { return factors_[m]; }
  const std::vector<std::int64_t>& lattice_offsets(std::size_t m) const { return offsets_[m]; }

 private:
  EmbeddingConfig config_;
  std::vector<Symbol> symbols_;
  std::vector<AffineContraction> maps_;
  Rational lipschitz_;
  std::int64_t multiplier_ = 1;
  std::vector<std::vector<std::int64_t>> factors_;
  std::vector<std::vector<std::int64_t>> offsets_;
};

// f_i(x)_k = c_{i k k} x_k + (1/2) [k == i], one map per vertex.
IFS build_system(const EmbeddingConfig& cfg);

struct IterationOptions {
  std::size_t point_cap = 10'000'000;
  unsigned threads = 1;
};

// F(K) = union of f(K). Depth increases by one; the certificate, when set,
// shrinks by the system's Lipschitz constant. Throws ResourceLimit when the
// number of images would exceed options.point_cap.
PointCloud hutchinson_step(const IFS& s, const PointCloud& cloud, const IterationOptions& options = {});

// {u_i : i in the system}.
PointCloud fixed_point_seed(const IFS& s);

// n Hutchinson steps from the seed, with certificate
//   error_bound = lip^n * h(seed, F(seed)) / (1 - lip).
PointCloud attractor_cloud(const IFS& s, std::size_t depth, const PointCloud& seed,
                           const IterationOptions& options = {});
inline PointCloud attractor_cloud(const IFS& s, std::size_t depth, const IterationOptions& options = {}) {
  return attractor_cloud(s, depth, fixed_point_seed(s), options);
}

// Cloud of the two-map subsystem {f_i, f_j} seeded with {u_i, u_j}; for
// i == j this is {u_i}.
PointCloud sub_attractor(const IFS& s, Symbol i, Symbol j, std::size_t depth,
                         const IterationOptions& options = {});

// f_{w_1} o ... o f_{w_n} (p)
ExactPoint apply_word(const IFS& s, const FiniteWord& w, const ExactPoint& p);

// Random-iteration sampler: uniform map choice, `burn_in` discarded steps.
// Floating point; not used for certificates.
std::vector<std::vector<double>> chaos_game(const IFS& s, std::size_t samples, std::uint64_t seed,
                                            std::size_t burn_in = 20);

}  // namespace lipscomb
