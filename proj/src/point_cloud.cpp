#include "lipscomb/point_cloud.hpp"

#include <algorithm>
#include <numeric>

#include "lipscomb/error.hpp"

namespace lipscomb {

int compare_rows(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return -1;
    if (a[k] > b[k]) return 1;
  }
  return 0;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceLimit("exact lattice overflow");
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

PointCloud::PointCloud(std::size_t dim, std::int64_t denominator,
                       std::vector<std::int64_t> numerators)
    : dim_(dim), denominator_(denominator) {
  if (dim_ == 0) throw InvalidInput("point cloud dimension must be positive");
  if (denominator_ <= 0) throw InvalidInput("point cloud denominator must be positive");
  if (numerators.empty() || numerators.size() % dim_ != 0)
    throw InvalidInput("point cloud must hold a positive whole number of points");
  const std::size_t n = numerators.size() / dim_;
  auto row_of = [&](std::size_t i) {
    return std::span<const std::int64_t>(numerators.data() + i * dim_, dim_);
  };
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return compare_rows(row_of(a), row_of(b)) < 0; });
  numerators_.reserve(numerators.size());
  for (std::size_t idx = 0; idx < n; ++idx) {
    auto r = row_of(order[idx]);
    if (idx > 0 && compare_rows(r, row_of(order[idx - 1])) == 0) continue;
    numerators_.insert(numerators_.end(), r.begin(), r.end());
  }
}

PointCloud PointCloud::from_points(std::size_t dim, const std::vector<ExactPoint>& points) {
  if (points.empty()) throw InvalidInput("point cloud must be nonempty");
  std::int64_t denominator = 1;
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidInput("point has wrong dimension");
    for (const auto& c : p) {
      if (!c.get_den().fits_slong_p()) throw ResourceLimit("seed denominator too large");
      denominator = checked_lcm(denominator, c.get_den().get_si());
    }
  }
  std::vector<std::int64_t> numerators;
  numerators.reserve(points.size() * dim);
  for (const auto& p : points)
    for (const auto& c : p) {
      Integer scaled = c.get_num() * (denominator / c.get_den());
      if (!scaled.fits_slong_p()) throw ResourceLimit("seed coordinate too large");
      numerators.push_back(scaled.get_si());
    }
  return PointCloud(dim, denominator, std::move(numerators));
}

PointCloud PointCloud::from_canonical_rows(std::size_t dim, std::int64_t denominator,
                                           std::vector<std::int64_t> numerators) {
  if (dim == 0 || denominator <= 0 || numerators.empty() || numerators.size() % dim != 0)
    throw InvalidInput("malformed lattice rows");
  for (std::size_t i = dim; i < numerators.size(); i += dim)
    if (compare_rows({numerators.data() + i - dim, dim}, {numerators.data() + i, dim}) >= 0)
      throw InvalidInput("lattice rows are not strictly increasing");
  PointCloud out;
  out.dim_ = dim;
  out.denominator_ = denominator;
  out.numerators_ = std::move(numerators);
  return out;
}

ExactPoint PointCloud::point(std::size_t i) const {
  ExactPoint p(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    p[k] = Rational(static_cast<long>(numerators_[i * dim_ + k]), static_cast<long>(denominator_));
    p[k].canonicalize();
  }
  return p;
}

std::vector<ExactPoint> PointCloud::points() const {
  std::vector<ExactPoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

bool PointCloud::contains_row(std::span<const std::int64_t> r, std::int64_t row_denominator) const {
  std::vector<std::int64_t> scaled(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    __int128 num = static_cast<__int128>(r[k]) * denominator_;
    if (num % row_denominator != 0) return false;
    __int128 q = num / row_denominator;
    if (q > INT64_MAX || q < INT64_MIN) return false;
    scaled[k] = static_cast<std::int64_t>(q);
  }
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = compare_rows(row(mid), scaled);
    if (c == 0) return true;
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  return false;
}

bool PointCloud::contains(const ExactPoint& p) const {
  if (p.size() != dim_) throw InvalidInput("point has wrong dimension");
  std::vector<std::int64_t> scaled(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    Rational v = p[k] * denominator_;
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return false;
    scaled[k] = v.get_num().get_si();
  }
  return contains_row(scaled, denominator_);
}

bool PointCloud::is_subset_of(const PointCloud& other) const {
  if (other.dim_ != dim_) throw InvalidInput("clouds have different dimensions");
  for (std::size_t i = 0; i < size(); ++i)
    if (!other.contains_row(row(i), denominator_)) return false;
  return true;
}

PointCloud PointCloud::rescaled(std::int64_t denominator) const {
  if (denominator % denominator_ != 0) throw InvalidInput("rescale target is not a multiple");
  const std::int64_t factor = denominator / denominator_;
  std::vector<std::int64_t> numerators(numerators_.size());
  for (std::size_t i = 0; i < numerators_.size(); ++i)
    numerators[i] = checked_mul(numerators_[i], factor);
  PointCloud out(dim_, denominator, std::move(numerators));
  out.depth_ = depth_;
  out.error_bound_ = error_bound_;
  return out;
}

bool operator==(const PointCloud& a, const PointCloud& b) {
  return a.size() == b.size() && a.is_subset_of(b);
}

}  // namespace lipscomb
