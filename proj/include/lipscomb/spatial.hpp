#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "lipscomb/point_cloud.hpp"
#include "lipscomb/rational.hpp"

namespace lipscomb {

using Wide = unsigned __int128;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --sets_;
    return true;
  }

  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::size_t sets_;
};

// Exact nearest-neighbour and radius queries over a cloud's lattice rows.
// Query rows must use the same denominator as the indexed cloud. The cloud
// must outlive the tree.
class LatticeKdTree {
 public:
  explicit LatticeKdTree(const PointCloud& cloud);

  // Squared distance, in lattice units, from `query` to the nearest point,
  // or `bound` if no point is strictly closer than that.
  Wide nearest_squared(std::span<const std::int64_t> query, Wide bound = ~Wide{0}) const;

  // Indices of points with squared lattice distance <= radius_squared.
  void within(std::span<const std::int64_t> query, Wide radius_squared,
              std::vector<std::size_t>& out) const;

 private:
  void build(std::size_t lo, std::size_t hi, std::size_t axis);
  void nearest(std::span<const std::int64_t> q, std::size_t lo, std::size_t hi, std::size_t axis,
               Wide& best) const;
  // Squared distance from q to the bounding box of the subtree rooted at `node`.
  Wide box_distance(std::span<const std::int64_t> q, std::size_t node) const;
  void collect(std::span<const std::int64_t> q, Wide r2, std::size_t lo, std::size_t hi,
               std::size_t axis, std::vector<std::size_t>& out) const;

  const PointCloud* cloud_;
  std::vector<std::uint32_t> order_;
  // Subtree bounding boxes, indexed by the subtree's pivot position.
  std::vector<std::int64_t> box_lo_;
  std::vector<std::int64_t> box_hi_;
};

Wide lattice_distance_squared(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// Throws ResourceLimit when squared lattice distances of the given cloud
// could overflow 128 bits.
void require_wide_range(const PointCloud& cloud);

// A partition of the indices 0..n-1. Block ids are numbered in order of
// their smallest member.
struct Partition {
  std::vector<std::size_t> block_of;
  std::size_t block_count = 0;

  std::vector<std::vector<std::size_t>> blocks() const;
};

// Components of the graph joining points at distance <= sqrt(eps_squared).
Partition epsilon_components(const PointCloud& cloud, const Rational& eps_squared);

// Exact symmetric Hausdorff distance between finite clouds, squared.
Rational hausdorff_distance_squared(const PointCloud& a, const PointCloud& b);
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

// Exact min distance between two clouds, squared.
Rational min_distance_squared(const PointCloud& a, const PointCloud& b);

}  // namespace lipscomb
