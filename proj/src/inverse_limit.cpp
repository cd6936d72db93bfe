#include "lipscomb/inverse_limit.hpp"

#include <algorithm>
#include <numeric>

#include "lipscomb/error.hpp"

namespace lipscomb {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > cap / base) throw ResourceLimit("level size exceeds the cap");
    out *= base;
  }
  if (out > cap) throw ResourceLimit("level size exceeds the cap");
  return out;
}

// b b ... b (t copies) as a base-k code.
std::size_t repeated(std::size_t symbol, std::size_t t, std::size_t k) {
  std::size_t code = 0;
  for (std::size_t i = 0; i < t; ++i) code = code * k + symbol;
  return code;
}

std::vector<std::pair<Vertex, Vertex>> non_loop_edges(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : g.edges())
    if (e.first != e.second) out.push_back(e);
  return out;
}

}  // namespace

LevelGraph level_graph(const Graph& g, std::size_t n, std::size_t vertex_cap) {
  const std::size_t k = g.vertex_count();
  const std::size_t total = checked_power(k, n, vertex_cap);
  const bool compact = std::all_of(g.labels().begin(), g.labels().end(),
                                   [](const std::string& l) { return l.size() == 1; });

  std::vector<std::string> labels(total);
  std::vector<Symbol> digits(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = c % k;
      c /= k;
    }
    std::string& label = labels[code];
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && !compact) label += '.';
      label += g.label(digits[i]);
    }
  }
  if (n == 0) labels[0] = "-";

  // With one-character labels, code order is already label order.
  std::vector<Vertex> vertex_of_code(total);
  std::iota(vertex_of_code.begin(), vertex_of_code.end(), Vertex{0});
  if (!compact) {
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<std::string> sorted(total);
    for (std::size_t r = 0; r < total; ++r) {
      vertex_of_code[order[r]] = r;
      sorted[r] = std::move(labels[order[r]]);
    }
    labels = std::move(sorted);
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto cross = non_loop_edges(g);
  std::size_t prefixes = 1;  // k^L
  for (std::size_t prefix_len = 0; prefix_len < n; ++prefix_len) {
    const std::size_t tail = n - 1 - prefix_len;
    const std::size_t tail_span = checked_power(k, tail, SIZE_MAX);
    for (std::size_t s = 0; s < prefixes; ++s)
      for (const auto& [a, b] : cross) {
        std::size_t u = (s * k + a) * tail_span + repeated(b, tail, k);
        std::size_t v = (s * k + b) * tail_span + repeated(a, tail, k);
        edges.emplace_back(vertex_of_code[u], vertex_of_code[v]);
      }
    prefixes *= k;
  }

  LevelGraph out;
  out.level_ = n;
  out.base_ = std::make_shared<const Graph>(g);
  out.graph_ = std::make_shared<const Graph>(Graph::from_sorted(std::move(labels), edges));
  out.vertex_of_code_ = std::move(vertex_of_code);
  return out;
}

Vertex LevelGraph::vertex_of(const FiniteWord& w) const {
  if (w.length() != level_) throw InvalidInput("word length does not match level");
  std::size_t code = 0;
  for (Symbol s : w.symbols) {
    if (s >= base_->vertex_count()) throw InvalidInput("symbol outside alphabet");
    code = code * base_->vertex_count() + s;
  }
  return vertex_of_code_[code];
}

bool level_adjacent(const Graph& g, const FiniteWord& u, const FiniteWord& v) {
  if (u.length() != v.length()) throw InvalidInput("level words must have equal length");
  std::size_t m = 0;
  while (m < u.length() && u.symbols[m] == v.symbols[m]) ++m;
  if (m == u.length()) return true;
  const Symbol a = u.symbols[m];
  const Symbol b = v.symbols[m];
  if (!g.adjacent(a, b)) return false;
  for (std::size_t i = m + 1; i < u.length(); ++i)
    if (u.symbols[i] != b || v.symbols[i] != a) return false;
  return true;
}

std::size_t level_edge_count(const Graph& g, std::size_t n) {
  const std::size_t k = g.vertex_count();
  const std::size_t total = checked_power(k, n, SIZE_MAX);
  const std::size_t cross = non_loop_edges(g).size();
  // Number of prefixes over all split points: 1 + k + ... + k^(n-1).
  std::size_t splits = 0, power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    splits += power;
    power *= k;
  }
  return total + cross * splits;
}

GraphMap truncation_map(const LevelGraph& upper, const LevelGraph& lower) {
  if (upper.level() != lower.level() + 1 || !(upper.base() == lower.base()))
    throw InvalidInput("truncation needs consecutive levels of one base graph");
  const std::size_t k = upper.base().vertex_count();
  const std::size_t total = upper.graph().vertex_count();
  std::vector<Vertex> assignment(total);
  for (std::size_t code = 0; code < total; ++code)
    assignment[upper.vertex_of_code(code)] = lower.vertex_of_code(code / k);
  return GraphMap(upper.graph_ptr(), lower.graph_ptr(), std::move(assignment));
}

std::vector<LevelCheck> check_level_chain(const Graph& g, std::size_t n) {
  std::vector<LevelCheck> out;
  const bool base_connected = is_connected(g);
  LevelGraph lower = level_graph(g, 0);
  for (std::size_t m = 1; m <= n; ++m) {
    LevelGraph upper = level_graph(g, m);
    GraphMap bond = truncation_map(upper, lower);
    LevelCheck check;
    check.level = m;
    check.proper_epimorphism = is_homomorphism(bond) && is_proper_epimorphism(bond);
    check.fibers_isomorphic = true;
    for (const auto& fiber : preimages(bond))
      if (fiber.empty() || !are_isomorphic(upper.graph().induced(fiber), g)) {
        check.fibers_isomorphic = false;
        break;
      }
    check.level_connected = is_connected(upper.graph());
    check.connectivity_matches = check.level_connected == base_connected;
    out.push_back(check);
    lower = std::move(upper);
  }
  return out;
}

bool limit_relation(const Graph& g, const AddressWord& x, const AddressWord& y) {
  require_same_alphabet(g.labels(), *x.alphabet());
  const std::size_t m = first_difference(x, y);
  if (m == 0) return true;
  // Past the first difference, one full period after each prefix decides
  // whether the tails are constant.
  const std::size_t horizon = m + std::max(x.prefix().size() + x.period().size(),
                                           y.prefix().size() + y.period().size());
  for (std::size_t n = 1; n <= horizon; ++n)
    if (!level_adjacent(g, truncate(x, n), truncate(y, n))) return false;
  return true;
}

InverseSequence::InverseSequence(std::vector<std::shared_ptr<const Graph>> graphs,
                                 std::vector<GraphMap> bonds)
    : graphs_(std::move(graphs)), bonds_(std::move(bonds)) {
  if (graphs_.empty()) throw InvalidInput("inverse sequence needs at least one graph");
  if (bonds_.size() + 1 != graphs_.size())
    throw InvalidInput("inverse sequence needs one bond per consecutive pair of graphs");
  for (std::size_t k = 0; k < bonds_.size(); ++k) {
    const GraphMap& b = bonds_[k];
    if (!(b.source() == *graphs_[k + 1]) || !(b.target() == *graphs_[k]))
      throw InvalidInput("bond " + std::to_string(k + 1) + " does not connect consecutive graphs");
    if (!is_homomorphism(b) || !is_proper_epimorphism(b))
      throw InvalidInput("bond " + std::to_string(k + 1) + " is not a proper epimorphism");
  }
}

InverseSequence lipscomb_sequence(const Graph& g, std::size_t max_level) {
  std::vector<std::shared_ptr<const Graph>> graphs;
  std::vector<GraphMap> bonds;
  LevelGraph lower = level_graph(g, 0);
  graphs.push_back(lower.graph_ptr());
  for (std::size_t m = 1; m <= max_level; ++m) {
    LevelGraph upper = level_graph(g, m);
    bonds.push_back(truncation_map(upper, lower));
    graphs.push_back(upper.graph_ptr());
    lower = std::move(upper);
  }
  return InverseSequence(std::move(graphs), std::move(bonds));
}

bool all_fibers_connected(const GraphMap& bond) {
  for (const auto& fiber : preimages(bond))
    if (!fiber.empty() && !is_connected(bond.source().induced(fiber))) return false;
  return true;
}

QuotientConnectedness quotient_connected_verdict(const InverseSequence& seq) {
  QuotientConnectedness out;
  out.connected = true;
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (!is_connected(seq.graph(k))) out.connected = false;
  return out;
}

QuotientLocalConnectedness quotient_locally_connected_verdict(const InverseSequence& seq) {
  QuotientLocalConnectedness out;
  const auto& bonds = seq.bonds();
  std::optional<std::size_t> from;
  for (std::size_t m = bonds.size(); m-- > 0;) {
    if (!all_fibers_connected(bonds[m])) break;
    from = m;
  }
  out.from_level = from;
  return out;
}

}  // namespace lipscomb
