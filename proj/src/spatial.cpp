#include "lipscomb/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "lipscomb/error.hpp"

namespace lipscomb {

namespace {

Integer to_integer(Wide w) {
  Integer hi = static_cast<unsigned long>(static_cast<std::uint64_t>(w >> 64));
  Integer lo = static_cast<unsigned long>(static_cast<std::uint64_t>(w));
  return (hi << 64) + lo;
}

// Largest w with w <= q, clamped to the Wide range.
Wide floor_to_wide(const Rational& q) {
  if (sgn(q) < 0) return 0;
  Integer f = q.get_num() / q.get_den();
  if (mpz_sizeinbase(f.get_mpz_t(), 2) > 127) return ~Wide{0} >> 1;
  Integer hi = f >> 64;
  Integer lo = f - (hi << 64);
  return (static_cast<Wide>(hi.get_ui()) << 64) | static_cast<Wide>(lo.get_ui());
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Wide lattice_distance_squared(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  Wide sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    __int128 d = static_cast<__int128>(a[k]) - b[k];
    Wide ad = static_cast<Wide>(d < 0 ? -d : d);
    sum += ad * ad;
  }
  return sum;
}

void require_wide_range(const PointCloud& cloud) {
  std::int64_t largest = 0;
  for (std::int64_t v : cloud.numerators()) largest = std::max(largest, v < 0 ? -v : v);
  // Differences stay below 2*largest; dim of them squared must fit in 127 bits.
  long double bound = 4.0L * static_cast<long double>(largest) * static_cast<long double>(largest) *
                      static_cast<long double>(cloud.dim());
  if (bound >= std::ldexp(1.0L, 126)) throw ResourceLimit("lattice too fine for exact distances");
}

LatticeKdTree::LatticeKdTree(const PointCloud& cloud)
    : cloud_(&cloud),
      order_(cloud.size()),
      box_lo_(cloud.size() * cloud.dim()),
      box_hi_(cloud.size() * cloud.dim()) {
  require_wide_range(cloud);
  std::iota(order_.begin(), order_.end(), 0u);
  build(0, order_.size(), 0);
}

void LatticeKdTree::build(std::size_t lo, std::size_t hi, std::size_t axis) {
  if (lo >= hi) return;
  const std::size_t dim = cloud_->dim();
  std::size_t mid = (lo + hi) / 2;
  if (hi - lo > 1)
    std::nth_element(order_.begin() + lo, order_.begin() + mid, order_.begin() + hi,
                     [&](std::uint32_t a, std::uint32_t b) {
                       return cloud_->row(a)[axis] < cloud_->row(b)[axis];
                     });
  std::size_t next = (axis + 1) % dim;
  build(lo, mid, next);
  build(mid + 1, hi, next);
  auto pivot = cloud_->row(order_[mid]);
  std::int64_t* lo_box = box_lo_.data() + mid * dim;
  std::int64_t* hi_box = box_hi_.data() + mid * dim;
  for (std::size_t k = 0; k < dim; ++k) lo_box[k] = hi_box[k] = pivot[k];
  auto absorb = [&](std::size_t child_lo, std::size_t child_hi) {
    if (child_lo >= child_hi) return;
    std::size_t child = (child_lo + child_hi) / 2;
    for (std::size_t k = 0; k < dim; ++k) {
      lo_box[k] = std::min(lo_box[k], box_lo_[child * dim + k]);
      hi_box[k] = std::max(hi_box[k], box_hi_[child * dim + k]);
    }
  };
  absorb(lo, mid);
  absorb(mid + 1, hi);
}

Wide LatticeKdTree::box_distance(std::span<const std::int64_t> q, std::size_t node) const {
  const std::size_t dim = cloud_->dim();
  Wide sum = 0;
  for (std::size_t k = 0; k < dim; ++k) {
    __int128 d = 0;
    if (q[k] < box_lo_[node * dim + k]) d = static_cast<__int128>(box_lo_[node * dim + k]) - q[k];
    else if (q[k] > box_hi_[node * dim + k]) d = static_cast<__int128>(q[k]) - box_hi_[node * dim + k];
    Wide ad = static_cast<Wide>(d);
    sum += ad * ad;
  }
  return sum;
}

void LatticeKdTree::nearest(std::span<const std::int64_t> q, std::size_t lo, std::size_t hi,
                            std::size_t axis, Wide& best) const {
  if (lo >= hi) return;
  std::size_t mid = (lo + hi) / 2;
  if (box_distance(q, mid) >= best) return;
  auto pivot = cloud_->row(order_[mid]);
  best = std::min(best, lattice_distance_squared(q, pivot));
  std::size_t next = (axis + 1) % cloud_->dim();
  if (q[axis] < pivot[axis]) {
    nearest(q, lo, mid, next, best);
    nearest(q, mid + 1, hi, next, best);
  } else {
    nearest(q, mid + 1, hi, next, best);
    nearest(q, lo, mid, next, best);
  }
}

Wide LatticeKdTree::nearest_squared(std::span<const std::int64_t> query, Wide bound) const {
  Wide best = bound;
  nearest(query, 0, order_.size(), 0, best);
  return best;
}

void LatticeKdTree::collect(std::span<const std::int64_t> q, Wide r2, std::size_t lo,
                            std::size_t hi, std::size_t axis, std::vector<std::size_t>& out) const {
  if (lo >= hi) return;
  std::size_t mid = (lo + hi) / 2;
  if (box_distance(q, mid) > r2) return;
  if (lattice_distance_squared(q, cloud_->row(order_[mid])) <= r2) out.push_back(order_[mid]);
  std::size_t next = (axis + 1) % cloud_->dim();
  collect(q, r2, lo, mid, next, out);
  collect(q, r2, mid + 1, hi, next, out);
}

void LatticeKdTree::within(std::span<const std::int64_t> query, Wide radius_squared,
                           std::vector<std::size_t>& out) const {
  collect(query, radius_squared, 0, order_.size(), 0, out);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count);
  for (std::size_t i = 0; i < block_of.size(); ++i) out[block_of[i]].push_back(i);
  return out;
}

namespace {

Partition to_partition(UnionFind& uf, std::size_t n) {
  Partition p;
  p.block_of.assign(n, 0);
  std::unordered_map<std::size_t, std::size_t> id_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = id_of_root.emplace(uf.find(i), id_of_root.size());
    p.block_of[i] = it->second;
  }
  p.block_count = id_of_root.size();
  return p;
}

// Smallest integer s with s*s >= t.
Integer ceil_sqrt(const Rational& t) {
  Integer c = t.get_num() / t.get_den();
  if (c * t.get_den() != t.get_num()) c += 1;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), c.get_mpz_t());
  if (s * s < c) s += 1;
  return s;
}

void unite_by_radius(const PointCloud& cloud, Wide threshold, UnionFind& uf) {
  LatticeKdTree tree(cloud);
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    hits.clear();
    tree.within(cloud.row(i), threshold, hits);
    for (std::size_t j : hits) uf.unite(i, j);
  }
}

}  // namespace

Partition epsilon_components(const PointCloud& cloud, const Rational& eps_squared) {
  if (sgn(eps_squared) <= 0) throw InvalidInput("epsilon must be positive");
  require_wide_range(cloud);
  const std::size_t n = cloud.size();
  const std::size_t dim = cloud.dim();
  UnionFind uf(n);
  const Rational scaled = eps_squared * Rational(cloud.denominator()) * Rational(cloud.denominator());
  const Wide threshold = floor_to_wide(scaled);
  const Integer cell_big = ceil_sqrt(scaled);

  // Grid with cell side >= epsilon: neighbours sit in adjacent cells.
  bool packable = cell_big.fits_slong_p() && cell_big > 0;
  std::int64_t cell = packable ? cell_big.get_si() : 1;
  std::vector<std::int64_t> low(dim, INT64_MAX), high(dim, INT64_MIN);
  std::vector<std::int64_t> cells(n * dim);
  if (packable) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        std::int64_t c = floor_div(cloud.row(i)[k], cell);
        cells[i * dim + k] = c;
        low[k] = std::min(low[k], c);
        high[k] = std::max(high[k], c);
      }
    long double total = 1;
    for (std::size_t k = 0; k < dim; ++k) total *= static_cast<long double>(high[k] - low[k] + 3);
    packable = total < std::ldexp(1.0L, 62);
  }
  if (!packable) {
    unite_by_radius(cloud, threshold, uf);
    return to_partition(uf, n);
  }

  std::vector<std::uint64_t> stride(dim);
  std::uint64_t s = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    stride[k] = s;
    s *= static_cast<std::uint64_t>(high[k] - low[k] + 3);
  }
  auto key_of = [&](std::size_t i) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < dim; ++k)
      key += static_cast<std::uint64_t>(cells[i * dim + k] - low[k] + 1) * stride[k];
    return key;
  };
  std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(n);
  for (std::size_t i = 0; i < n; ++i) keyed[i] = {key_of(i), static_cast<std::uint32_t>(i)};
  std::sort(keyed.begin(), keyed.end());
  std::unordered_map<std::uint64_t, std::pair<std::size_t, std::size_t>> range_of;
  range_of.reserve(n);
  for (std::size_t a = 0; a < n;) {
    std::size_t b = a;
    while (b < n && keyed[b].first == keyed[a].first) ++b;
    range_of.emplace(keyed[a].first, std::make_pair(a, b));
    a = b;
  }

  // Forward half of the 3^dim neighbourhood: first nonzero offset is +1.
  std::vector<std::int64_t> forward;
  {
    std::vector<int> off(dim, -1);
    while (true) {
      int first = 0;
      for (std::size_t k = dim; k-- > 0;)
        if (off[k] != 0) first = off[k];
      if (first > 0) {
        std::int64_t delta = 0;
        for (std::size_t k = 0; k < dim; ++k) delta += off[k] * static_cast<std::int64_t>(stride[k]);
        forward.push_back(delta);
      }
      std::size_t k = 0;
      while (k < dim && off[k] == 1) off[k++] = -1;
      if (k == dim) break;
      ++off[k];
    }
  }

  auto link = [&](std::size_t i, std::size_t j) {
    if (uf.find(i) == uf.find(j)) return;
    if (lattice_distance_squared(cloud.row(i), cloud.row(j)) <= threshold) uf.unite(i, j);
  };
  for (const auto& [key, range] : range_of) {
    const auto [a, b] = range;
    for (std::size_t p = a; p < b; ++p)
      for (std::size_t q = p + 1; q < b; ++q) link(keyed[p].second, keyed[q].second);
    for (std::int64_t delta : forward) {
      auto it = range_of.find(key + static_cast<std::uint64_t>(delta));
      if (it == range_of.end()) continue;
      const auto [c, d] = it->second;
      for (std::size_t p = a; p < b; ++p)
        for (std::size_t q = c; q < d; ++q) link(keyed[p].second, keyed[q].second);
    }
  }
  return to_partition(uf, n);
}

namespace {

std::pair<PointCloud, PointCloud> common_lattice(const PointCloud& a, const PointCloud& b) {
  if (a.dim() != b.dim()) throw InvalidInput("clouds have different dimensions");
  std::int64_t d = checked_lcm(a.denominator(), b.denominator());
  return {a.denominator() == d ? a : a.rescaled(d), b.denominator() == d ? b : b.rescaled(d)};
}

Wide directed_squared(const PointCloud& from, const LatticeKdTree& to) {
  Wide worst = 0;
  for (std::size_t i = 0; i < from.size(); ++i) worst = std::max(worst, to.nearest_squared(from.row(i)));
  return worst;
}

Rational from_lattice(Wide w, std::int64_t denominator) {
  Rational q(to_integer(w), Integer(static_cast<long>(denominator)) * static_cast<long>(denominator));
  q.canonicalize();
  return q;
}

}  // namespace

Rational hausdorff_distance_squared(const PointCloud& a, const PointCloud& b) {
  auto [x, y] = common_lattice(a, b);
  LatticeKdTree tx(x), ty(y);
  Wide h = std::max(directed_squared(x, ty), directed_squared(y, tx));
  return from_lattice(h, x.denominator());
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
  return std::sqrt(to_double(hausdorff_distance_squared(a, b)));
}

Rational min_distance_squared(const PointCloud& a, const PointCloud& b) {
  auto [x, y] = common_lattice(a, b);
  const PointCloud& small = x.size() <= y.size() ? x : y;
  const PointCloud& large = x.size() <= y.size() ? y : x;
  LatticeKdTree tree(large);
  Wide best = ~Wide{0};
  for (std::size_t i = 0; i < small.size(); ++i) best = tree.nearest_squared(small.row(i), best);
  return from_lattice(best, x.denominator());
}

}  // namespace lipscomb
