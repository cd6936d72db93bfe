#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lipscomb/embedding.hpp"
#include "lipscomb/rational.hpp"

namespace lipscomb {

// A finite, nonempty set of exact points on a common-denominator lattice:
// point i is row(i) / denominator(). Rows are kept sorted lexicographically
// and unique, which is also the canonical export order.
class PointCloud {
 public:
  PointCloud(std::size_t dim, std::int64_t denominator, std::vector<std::int64_t> numerators);

  // Rows already strictly increasing (checked).
  static PointCloud from_canonical_rows(std::size_t dim, std::int64_t denominator,
                                        std::vector<std::int64_t> numerators);

  // Throws ResourceLimit when the common denominator leaves int64 range.
  static PointCloud from_points(std::size_t dim, const std::vector<ExactPoint>& points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return numerators_.size() / dim_; }
  std::int64_t denominator() const { return denominator_; }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {numerators_.data() + i * dim_, dim_};
  }
  const std::vector<std::int64_t>& numerators() const { return numerators_; }

  ExactPoint point(std::size_t i) const;
  std::vector<ExactPoint> points() const;
  double coordinate(std::size_t i, std::size_t k) const {
    return static_cast<double>(numerators_[i * dim_ + k]) / static_cast<double>(denominator_);
  }

  bool contains(const ExactPoint& p) const;
  bool is_subset_of(const PointCloud& other) const;

  // Same points over a multiple of the current denominator.
  PointCloud rescaled(std::int64_t denominator) const;

  // Number of Hutchinson steps applied to the seed.
  std::size_t depth() const { return depth_; }
  void set_depth(std::size_t d) { depth_ = d; }
  // Upper bound on the Hausdorff distance to the attractor (0 = unknown/unset).
  const Rational& error_bound() const { return error_bound_; }
  void set_error_bound(Rational b) { error_bound_ = std::move(b); }

  // Same point sets; depth and certificate are ignored.
  friend bool operator==(const PointCloud& a, const PointCloud& b);

 private:
  PointCloud() = default;
  bool contains_row(std::span<const std::int64_t> row, std::int64_t row_denominator) const;

  std::size_t dim_ = 1;
  std::int64_t denominator_ = 1;
  std::vector<std::int64_t> numerators_;
  std::size_t depth_ = 0;
  Rational error_bound_ = 0;
};

// Lexicographic row comparison.
int compare_rows(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

// lcm(a, b), throwing ResourceLimit on int64 overflow.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
// a * b, throwing ResourceLimit on int64 overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace lipscomb
