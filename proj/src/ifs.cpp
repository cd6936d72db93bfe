#include "lipscomb/ifs.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "lipscomb/error.hpp"
#include "lipscomb/spatial.hpp"

namespace lipscomb {

Rational AffineContraction::lipschitz() const {
  Rational best = 0;
  for (const auto& c : scale) best = std::max(best, Rational(abs(c)));
  return best;
}

ExactPoint apply(const AffineContraction& f, const ExactPoint& p) {
  if (p.size() != f.scale.size()) throw InvalidInput("point dimension does not match map");
  ExactPoint out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = f.scale[k] * p[k] + f.shift[k];
  return out;
}

ExactPoint fixed_point(const AffineContraction& f) {
  ExactPoint out(f.scale.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.shift[k] / (1 - f.scale[k]);
  return out;
}

IFS::IFS(EmbeddingConfig config, std::vector<Symbol> symbols, std::vector<AffineContraction> maps)
    : config_(std::move(config)), symbols_(std::move(symbols)), maps_(std::move(maps)) {
  if (maps_.empty() || maps_.size() != symbols_.size())
    throw InvalidInput("system needs one map per listed symbol");
  const std::size_t dim = config_.dimension();
  Integer multiplier = 1;
  lipschitz_ = 0;
  for (const auto& f : maps_) {
    if (f.scale.size() != dim || f.shift.size() != dim)
      throw InvalidInput("map dimension does not match configuration");
    for (std::size_t k = 0; k < dim; ++k) {
      if (sgn(f.scale[k]) <= 0 || f.scale[k] >= 1)
        throw InvalidInput("scale entries must lie in (0, 1)");
      mpz_lcm(multiplier.get_mpz_t(), multiplier.get_mpz_t(), f.scale[k].get_den_mpz_t());
      mpz_lcm(multiplier.get_mpz_t(), multiplier.get_mpz_t(), f.shift[k].get_den_mpz_t());
    }
    lipschitz_ = std::max(lipschitz_, f.lipschitz());
  }
  if (!multiplier.fits_slong_p()) throw ResourceLimit("map denominators too large for lattice");
  multiplier_ = multiplier.get_si();
  for (const auto& f : maps_) {
    std::vector<std::int64_t> factors(dim), offsets(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      Rational a = f.scale[k] * multiplier_;
      Rational b = f.shift[k] * multiplier_;
      if (!a.get_num().fits_slong_p() || !b.get_num().fits_slong_p())
        throw ResourceLimit("map coefficients too large for lattice");
      factors[k] = a.get_num().get_si();
      offsets[k] = b.get_num().get_si();
    }
    factors_.push_back(std::move(factors));
    offsets_.push_back(std::move(offsets));
  }
}

const AffineContraction& IFS::map_for(Symbol a) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), a);
  if (it == symbols_.end()) throw InvalidInput("symbol is not part of the system");
  return maps_[static_cast<std::size_t>(it - symbols_.begin())];
}

IFS IFS::restricted(const std::vector<Symbol>& keep) const {
  std::vector<AffineContraction> maps;
  for (Symbol a : keep) maps.push_back(map_for(a));
  return IFS(config_, keep, std::move(maps));
}

IFS build_system(const EmbeddingConfig& cfg) {
  const std::size_t n = cfg.symbol_count();
  std::vector<Symbol> symbols(n);
  std::iota(symbols.begin(), symbols.end(), Symbol{0});
  std::vector<AffineContraction> maps;
  maps.reserve(n);
  for (Symbol i = 0; i < n; ++i) {
    AffineContraction f;
    for (std::size_t k = 0; k < cfg.dimension(); ++k) {
      Symbol b = cfg.coordinate_symbol(k);
      f.scale.push_back(coefficient(cfg, i, b, b));
    }
    f.shift = basis_point(cfg, i);
    for (auto& c : f.shift) c /= 2;
    maps.push_back(std::move(f));
  }
  return IFS(cfg, std::move(symbols), std::move(maps));
}

namespace {

// Image of a sorted cloud under one lattice map. Scales are positive, so the
// image is sorted as well.
std::vector<std::int64_t> lattice_image(const IFS& s, std::size_t m, const PointCloud& cloud) {
  const auto& factors = s.lattice_factors(m);
  const auto& offsets = s.lattice_offsets(m);
  const std::size_t dim = cloud.dim();
  const std::int64_t d = cloud.denominator();
  const auto& in = cloud.numerators();
  std::vector<std::int64_t> out(in.size());
  for (std::size_t i = 0; i < in.size(); i += dim)
    for (std::size_t k = 0; k < dim; ++k) {
      std::int64_t scaled, shifted, value;
      if (__builtin_mul_overflow(factors[k], in[i + k], &scaled) ||
          __builtin_mul_overflow(offsets[k], d, &shifted) ||
          __builtin_add_overflow(scaled, shifted, &value))
        throw ResourceLimit("exact lattice overflow; depth too large");
      out[i + k] = value;
    }
  return out;
}

std::vector<std::int64_t> merge_runs(const std::vector<std::vector<std::int64_t>>& runs,
                                     std::size_t dim) {
  std::size_t total = 0;
  for (const auto& r : runs) total += r.size();
  std::vector<std::int64_t> out;
  out.reserve(total);
  std::vector<std::size_t> head(runs.size(), 0);
  auto row = [&](std::size_t r) {
    return std::span<const std::int64_t>(runs[r].data() + head[r], dim);
  };
  while (true) {
    std::size_t best = runs.size();
    for (std::size_t r = 0; r < runs.size(); ++r) {
      if (head[r] >= runs[r].size()) continue;
      if (best == runs.size() || compare_rows(row(r), row(best)) < 0) best = r;
    }
    if (best == runs.size()) break;
    auto chosen = row(best);
    out.insert(out.end(), chosen.begin(), chosen.end());
    // out never reallocates (reserved), so the appended row stays valid.
    std::span<const std::int64_t> value(out.data() + out.size() - dim, dim);
    for (std::size_t r = 0; r < runs.size(); ++r)
      if (head[r] < runs[r].size() && compare_rows(row(r), value) == 0) head[r] += dim;
  }
  return out;
}

}  // namespace

PointCloud hutchinson_step(const IFS& s, const PointCloud& cloud, const IterationOptions& options) {
  if (cloud.dim() != s.dimension()) throw InvalidInput("cloud does not match the system");
  const std::size_t maps = s.maps().size();
  if (cloud.size() > options.point_cap / maps)
    throw ResourceLimit("Hutchinson step would produce " + std::to_string(cloud.size() * maps) +
                        " images, above the point cap of " + std::to_string(options.point_cap));
  const std::int64_t denominator = checked_mul(cloud.denominator(), s.lattice_multiplier());

  std::vector<std::vector<std::int64_t>> runs(maps);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(maps)));
  if (workers == 1) {
    for (std::size_t m = 0; m < maps; ++m) runs[m] = lattice_image(s, m, cloud);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t m = w; m < maps; m += workers) runs[m] = lattice_image(s, m, cloud);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  PointCloud out = PointCloud::from_canonical_rows(cloud.dim(), denominator, merge_runs(runs, cloud.dim()));
  out.set_depth(cloud.depth() + 1);
  out.set_error_bound(cloud.error_bound() * s.lipschitz());
  return out;
}

PointCloud fixed_point_seed(const IFS& s) {
  std::vector<ExactPoint> points;
  for (const auto& f : s.maps()) points.push_back(fixed_point(f));
  return PointCloud::from_points(s.dimension(), points);
}

PointCloud attractor_cloud(const IFS& s, std::size_t depth, const PointCloud& seed,
                           const IterationOptions& options) {
  PointCloud start = seed;
  start.set_depth(0);
  start.set_error_bound(0);
  PointCloud next = hutchinson_step(s, start, options);
  const Rational gap = sqrt_upper(hausdorff_distance_squared(start, next));
  const Rational initial_bound = gap / (1 - s.lipschitz());
  if (depth == 0) {
    start.set_error_bound(initial_bound);
    return start;
  }
  next.set_error_bound(initial_bound * s.lipschitz());
  for (std::size_t n = 1; n < depth; ++n) next = hutchinson_step(s, next, options);
  return next;
}

PointCloud sub_attractor(const IFS& s, Symbol i, Symbol j, std::size_t depth,
                         const IterationOptions& options) {
  if (i == j) {
    PointCloud single = PointCloud::from_points(s.dimension(), {fixed_point(s.map_for(i))});
    single.set_depth(depth);
    return single;
  }
  return attractor_cloud(s.restricted({i, j}), depth, options);
}

ExactPoint apply_word(const IFS& s, const FiniteWord& w, const ExactPoint& p) {
  ExactPoint out = p;
  for (std::size_t k = w.symbols.size(); k-- > 0;) out = lipscomb::apply(s.map_for(w.symbols[k]), out);
  return out;
}

std::vector<std::vector<double>> chaos_game(const IFS& s, std::size_t samples, std::uint64_t seed,
                                            std::size_t burn_in) {
  const std::size_t dim = s.dimension();
  std::vector<std::vector<double>> scale, shift;
  for (const auto& f : s.maps()) {
    std::vector<double> a(dim), b(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      a[k] = to_double(f.scale[k]);
      b[k] = to_double(f.shift[k]);
    }
    scale.push_back(std::move(a));
    shift.push_back(std::move(b));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, s.maps().size() - 1);
  std::vector<double> x(dim, 0.0);
  std::vector<std::vector<double>> out;
  out.reserve(samples);
  for (std::size_t step = 0; step < burn_in + samples; ++step) {
    std::size_t m = pick(rng);
    for (std::size_t k = 0; k < dim; ++k) x[k] = scale[m][k] * x[k] + shift[m][k];
    if (step >= burn_in) out.push_back(x);
  }
  return out;
}

}  // namespace lipscomb
