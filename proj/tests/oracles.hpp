#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lipscomb/graph.hpp"
#include "lipscomb/rational.hpp"
#include "lipscomb/word.hpp"

namespace oracle {

using lipscomb::Rational;
using Adj = std::vector<std::vector<bool>>;

struct TestGraph {
  std::string name;
  int n;
  std::vector<std::pair<int, int>> edges;  // non-loop edges

  Adj adjacency() const {
    Adj a(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) a[v][v] = true;
    for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
    return a;
  }
  lipscomb::Graph graph() const {
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : edges) es.emplace_back(std::to_string(u), std::to_string(v));
    return lipscomb::Graph(labels, es);
  }
};

inline std::vector<TestGraph> battery() {
  return {
      {"edge2", 2, {{0, 1}}},
      {"loops2", 2, {}},
      {"path3", 3, {{0, 1}, {1, 2}}},
      {"k3", 3, {{0, 1}, {0, 2}, {1, 2}}},
      {"loops3", 3, {}},
      {"edge_plus_point3", 3, {{0, 1}}},
      {"path4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {"cycle4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {"star4", 4, {{0, 1}, {0, 2}, {0, 3}}},
      {"k4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"two_edges4", 4, {{0, 1}, {2, 3}}},
      {"path5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {"cycle5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
      {"star5", 5, {{2, 0}, {2, 1}, {2, 3}, {2, 4}}},
      {"k5", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
      {"triangle_edge5", 5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}},
      {"loops5", 5, {}},
  };
}

inline int component_count(const Adj& a) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (a[u][v] && !seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
  }
  return count;
}

inline bool connected(const Adj& a) { return component_count(a) == 1; }

inline bool isomorphic(const Adj& a, const Adj& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < a.size() && ok; ++u)
      for (std::size_t v = 0; v < a.size() && ok; ++v)
        if (a[u][v] != b[p[u]][p[v]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Adj random_adjacency(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Adj a(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    a[u][u] = true;
    for (int v = u + 1; v < n; ++v) a[u][v] = a[v][u] = coin(rng);
  }
  return a;
}

inline lipscomb::Graph to_graph(const Adj& a) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t u = 0; u < a.size(); ++u) {
    labels.push_back(std::to_string(u));
    for (std::size_t v = u + 1; v < a.size(); ++v)
      if (a[u][v]) es.emplace_back(std::to_string(u), std::to_string(v));
  }
  return lipscomb::Graph(labels, es);
}

// --- words ---

struct RawWord {
  std::vector<int> prefix;
  std::vector<int> period;
};

inline std::vector<int> expand(const RawWord& w, std::size_t length) {
  std::vector<int> out;
  for (std::size_t i = 0; i < length; ++i)
    out.push_back(i < w.prefix.size() ? w.prefix[i] : w.period[(i - w.prefix.size()) % w.period.size()]);
  return out;
}

inline RawWord random_raw(std::mt19937_64& rng, int alphabet, int max_prefix = 4, int max_period = 3) {
  std::uniform_int_distribution<int> sym(0, alphabet - 1);
  std::uniform_int_distribution<int> pre_len(0, max_prefix), per_len(1, max_period);
  RawWord w;
  int p = pre_len(rng), q = per_len(rng);
  for (int i = 0; i < p; ++i) w.prefix.push_back(sym(rng));
  for (int i = 0; i < q; ++i) w.period.push_back(sym(rng));
  return w;
}

// The same infinite word written differently: some periods unrolled into
// the prefix and the period repeated.
inline RawWord rewrite(std::mt19937_64& rng, const RawWord& w) {
  std::uniform_int_distribution<int> unroll(0, 3), repeat(1, 3);
  RawWord out;
  int u = unroll(rng);
  std::size_t len = w.prefix.size() + u;
  out.prefix = expand(w, len);
  std::vector<int> shifted;
  for (std::size_t i = 0; i < w.period.size(); ++i)
    shifted.push_back(w.period[(len - w.prefix.size() + i) % w.period.size()]);
  int r = repeat(rng);
  for (int k = 0; k < r; ++k) out.period.insert(out.period.end(), shifted.begin(), shifted.end());
  return out;
}

inline lipscomb::AddressWord to_word(const lipscomb::Graph& g, const RawWord& w) {
  std::vector<lipscomb::Symbol> pre(w.prefix.begin(), w.prefix.end());
  std::vector<lipscomb::Symbol> per(w.period.begin(), w.period.end());
  return lipscomb::AddressWord(g.alphabet(), pre, per);
}

// Expansion long enough that everything after it repeats.
inline std::size_t horizon(const RawWord& x, const RawWord& y) {
  return 2 * (x.prefix.size() + y.prefix.size() + 1) + 2 * x.period.size() * y.period.size() * 6;
}

inline bool identified(const Adj& a, const RawWord& x, const RawWord& y) {
  std::size_t L = horizon(x, y);
  auto ex = expand(x, L), ey = expand(y, L);
  std::size_t m = 0;
  while (m < L && ex[m] == ey[m]) ++m;
  if (m == L) return true;
  int p = ex[m], q = ey[m];
  if (!a[p][q]) return false;
  for (std::size_t i = m + 1; i < L; ++i)
    if (ex[i] != q || ey[i] != p) return false;
  return true;
}

// {u, v} in E_n by matching u = s a b^k, v = s b a^k literally.
inline bool level_edge(const Adj& a, const std::vector<int>& u, const std::vector<int>& v) {
  if (u == v) return true;
  const std::size_t n = u.size();
  for (std::size_t split = 0; split < n; ++split) {
    bool same_prefix = std::equal(u.begin(), u.begin() + split, v.begin());
    if (!same_prefix) break;
    int p = u[split], q = v[split];
    if (p == q || !a[p][q]) continue;
    bool tails = true;
    for (std::size_t i = split + 1; i < n; ++i)
      if (u[i] != q || v[i] != p) tails = false;
    if (tails) return true;
  }
  return false;
}

// All edges of E_n generated from the rule, as pairs of words (u < v).
inline std::set<std::pair<std::vector<int>, std::vector<int>>> level_edges(const Adj& a, int n) {
  const int k = static_cast<int>(a.size());
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  std::vector<std::vector<int>> prefixes{{}};
  for (int len = 0; len < n; ++len) {
    for (const auto& s : prefixes)
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
          if (p == q || !a[p][q]) continue;
          std::vector<int> u = s, v = s;
          u.push_back(p);
          v.push_back(q);
          for (int t = len + 1; t < n; ++t) {
            u.push_back(q);
            v.push_back(p);
          }
          out.insert(std::minmax(u, v));
        }
    std::vector<std::vector<int>> next;
    for (const auto& s : prefixes)
      for (int c = 0; c < k; ++c) {
        next.push_back(s);
        next.back().push_back(c);
      }
    prefixes = std::move(next);
  }
  return out;
}

// --- geometry ---

using Point = std::vector<Rational>;

struct Map {
  std::vector<Rational> scale;
  Point shift;
  Point operator()(const Point& p) const {
    Point out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[k] = scale[k] * p[k] + shift[k];
    return out;
  }
};

inline int coordinate_symbol(int z, int k) { return k < z ? k : k + 1; }

// f_i from the coefficient table, coordinates over A \ {z}.
inline std::vector<Map> system(const Adj& a, int z) {
  const int n = static_cast<int>(a.size());
  std::vector<Map> maps;
  for (int i = 0; i < n; ++i) {
    Map f;
    for (int k = 0; k < n - 1; ++k) {
      int b = coordinate_symbol(z, k);
      f.scale.push_back(a[i][b] ? Rational(1, 2) : Rational(1, 3));
      f.shift.push_back(b == i ? Rational(1, 2) : Rational(0));
    }
    maps.push_back(f);
  }
  return maps;
}

inline Point unit(int n, int z, int a) {
  Point p(n - 1, Rational(0));
  if (a != z) p[a < z ? a : a - 1] = 1;
  return p;
}

inline std::set<Point> cloud(const std::vector<Map>& maps, std::set<Point> seed, int depth) {
  for (int d = 0; d < depth; ++d) {
    std::set<Point> next;
    for (const auto& p : seed)
      for (const auto& f : maps) next.insert(f(p));
    seed = std::move(next);
  }
  return seed;
}

inline Rational dist2(const Point& p, const Point& q) {
  Rational s = 0;
  for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
  return s;
}

inline Rational hausdorff2(const std::vector<Point>& a, const std::vector<Point>& b) {
  auto directed = [](const std::vector<Point>& x, const std::vector<Point>& y) {
    Rational worst = 0;
    for (const auto& p : x) {
      Rational best = dist2(p, y.front());
      for (const auto& q : y) best = std::min(best, dist2(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

inline Rational min_dist2(const std::vector<Point>& a, const std::vector<Point>& b) {
  Rational best = dist2(a.front(), b.front());
  for (const auto& p : a)
    for (const auto& q : b) best = std::min(best, dist2(p, q));
  return best;
}

inline int eps_components(const std::vector<Point>& pts, const Rational& eps2) {
  Adj a(pts.size(), std::vector<bool>(pts.size(), false));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) a[i][j] = dist2(pts[i], pts[j]) <= eps2;
  return component_count(a);
}

// Embedding of s·v^∞ as f_s(fixed point of f_v), with f_v = f_{v1} o ... o f_{vk}.
inline Point embed(const Adj& a, int z, const RawWord& w) {
  auto maps = system(a, z);
  const std::size_t dim = a.size() - 1;
  Map fv{std::vector<Rational>(dim, 1), Point(dim, 0)};
  for (std::size_t i = w.period.size(); i-- > 0;) {
    const Map& f = maps[w.period[i]];
    Map composed{std::vector<Rational>(dim), Point(dim)};
    for (std::size_t k = 0; k < dim; ++k) {
      composed.scale[k] = f.scale[k] * fv.scale[k];
      composed.shift[k] = f.scale[k] * fv.shift[k] + f.shift[k];
    }
    fv = composed;
  }
  Point p(dim);
  for (std::size_t k = 0; k < dim; ++k) p[k] = fv.shift[k] / (1 - fv.scale[k]);
  for (std::size_t i = w.prefix.size(); i-- > 0;) p = maps[w.prefix[i]](p);
  return p;
}

// Exact min distance between boxes f_w([0,1]^d) for all depth-n words
// starting in `left` and in `right`.
inline Rational brute_box_gap(const std::vector<Map>& maps, const std::vector<int>& left,
                              const std::vector<int>& right, int depth) {
  const std::size_t dim = maps.front().scale.size();
  struct Box {
    Point lo, hi;
  };
  auto boxes_from = [&](const std::vector<int>& first) {
    std::vector<Map> cur;
    for (int a : first) cur.push_back(maps[a]);
    for (int d = 1; d < depth; ++d) {
      std::vector<Map> next;
      for (const auto& g : cur)
        for (const auto& f : maps) {
          Map h{std::vector<Rational>(dim), Point(dim)};
          for (std::size_t k = 0; k < dim; ++k) {
            h.scale[k] = g.scale[k] * f.scale[k];
            h.shift[k] = g.scale[k] * f.shift[k] + g.shift[k];
          }
          next.push_back(h);
        }
      cur = std::move(next);
    }
    std::vector<Box> out;
    for (const auto& g : cur) out.push_back({g.shift, g(Point(dim, 1))});
    return out;
  };
  auto bl = boxes_from(left), br = boxes_from(right);
  Rational best = -1;
  for (const auto& x : bl)
    for (const auto& y : br) {
      Rational s = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        Rational gap = 0;
        if (y.lo[k] > x.hi[k]) gap = y.lo[k] - x.hi[k];
        if (x.lo[k] > y.hi[k]) gap = x.lo[k] - y.hi[k];
        s += gap * gap;
      }
      if (best < 0 || s < best) best = s;
    }
  return best;
}

}  // namespace oracle
