#include "lipscomb/embedding.hpp"

#include <sstream>

#include "lipscomb/error.hpp"

namespace lipscomb {

EmbeddingConfig::EmbeddingConfig(Graph graph, Symbol z) : graph_(std::move(graph)), z_(z) {
  if (graph_.vertex_count() < 2) throw InvalidInput("embedding needs at least two symbols");
  if (z_ >= graph_.vertex_count()) throw InvalidInput("distinguished vertex is not in the graph");
}

std::optional<std::size_t> EmbeddingConfig::coordinate(Symbol b) const {
  if (b >= graph_.vertex_count()) throw InvalidInput("symbol outside alphabet");
  if (b == z_) return std::nullopt;
  return b < z_ ? b : b - 1;
}

ExactPoint origin(const EmbeddingConfig& cfg) { return ExactPoint(cfg.dimension(), 0); }

ExactPoint basis_point(const EmbeddingConfig& cfg, Symbol a) {
  ExactPoint p = origin(cfg);
  if (auto k = cfg.coordinate(a)) p[*k] = 1;
  return p;
}

namespace {

// c_{a b b}
Rational weight(const Graph& g, Symbol a, Symbol b) {
  return g.adjacent(a, b) ? Rational(1, 2) : Rational(1, 3);
}

}  // namespace

Rational coefficient(const EmbeddingConfig& cfg, Symbol a, Symbol a_prime, Symbol b) {
  const std::size_t n = cfg.symbol_count();
  if (a >= n || a_prime >= n || b >= n) throw InvalidInput("unknown symbol in coefficient");
  if (a_prime != b) return 0;
  return weight(cfg.graph(), a, a_prime);
}

ExactPoint embed(const EmbeddingConfig& cfg, const AddressWord& x) {
  const Graph& g = cfg.graph();
  require_same_alphabet(g.labels(), *x.alphabet());
  ExactPoint out = origin(cfg);
  for (std::size_t k = 0; k < cfg.dimension(); ++k) {
    const Symbol b = cfg.coordinate_symbol(k);
    Rational running = 1;
    Rational sum = 0;
    for (Symbol s : x.prefix()) {
      running *= weight(g, s, b);
      if (s == b) sum += running;
    }
    // One pass over the period, relative to the product reached so far.
    Rational multiplier = 1;
    Rational per_period = 0;
    for (Symbol s : x.period()) {
      multiplier *= weight(g, s, b);
      if (s == b) per_period += multiplier;
    }
    sum += running * per_period / (1 - multiplier);
    out[k] = sum;
  }
  return out;
}

Rational partial_product(const EmbeddingConfig& cfg, const AddressWord& x, std::size_t i) {
  const Graph& g = cfg.graph();
  require_same_alphabet(g.labels(), *x.alphabet());
  const Symbol b = x.at(i);
  if (b == cfg.z()) return 0;
  Rational product = 1;
  for (std::size_t j = 1; j <= i; ++j) product *= weight(g, x.at(j), b);
  return product;
}

Rational distance_squared(const ExactPoint& p, const ExactPoint& q) {
  if (p.size() != q.size()) throw InvalidInput("points have different dimensions");
  Rational sum = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Rational d = p[k] - q[k];
    sum += d * d;
  }
  return sum;
}

std::string format_point(const EmbeddingConfig& cfg, const ExactPoint& p) {
  std::ostringstream out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out << ' ';
    out << cfg.graph().label(cfg.coordinate_symbol(k)) << '=' << to_string(p[k]);
  }
  return out.str();
}

}  // namespace lipscomb
