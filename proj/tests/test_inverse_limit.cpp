#include <doctest.h>

#include <random>

#include "lipscomb/error.hpp"
#include "lipscomb/inverse_limit.hpp"
#include "oracles.hpp"

using namespace lipscomb;

namespace {

Graph path3() { return Graph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}); }
std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

std::vector<int> digits(std::size_t code, int k, int n) {
  std::vector<int> out(n);
  for (int i = n; i-- > 0;) {
    out[i] = static_cast<int>(code % k);
    code /= k;
  }
  return out;
}

}  // namespace

TEST_SUITE("inverse_limit") {

TEST_CASE("level_graph examples") {
  Graph edge({"0", "1"}, {{"0", "1"}});
  LevelGraph l2 = level_graph(edge, 2);
  const Graph& g = l2.graph();
  CHECK(g.labels() == Labels{"00", "01", "10", "11"});
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}});

  LevelGraph l0 = level_graph(path3(), 0);
  CHECK(l0.graph().vertex_count() == 1);
  CHECK(l0.graph().edge_count() == 1);

  LevelGraph loops = level_graph(Graph({"0", "1", "2"}, {}), 2);
  CHECK(loops.graph().vertex_count() == 9);
  CHECK(loops.graph().edge_count() == 9);

  CHECK_THROWS_AS(level_graph(path3(), 20, 1000), ResourceLimit);
}

TEST_CASE("multi-character labels") {
  Graph g({"a1", "b2"}, {{"a1", "b2"}});
  LevelGraph l = level_graph(g, 2);
  CHECK(l.graph().labels() == Labels{"a1.a1", "a1.b2", "b2.a1", "b2.b2"});
  CHECK(l.graph().adjacent(l.vertex_of(FiniteWord{{0, 1}}), l.vertex_of(FiniteWord{{1, 0}})));
}

TEST_CASE("level edges agree with rule enumeration and string matching") {
  for (const auto& tg : oracle::battery()) {
    if (tg.n > 4) continue;
    Graph base = tg.graph();
    auto adj = tg.adjacency();
    for (int n = 0; n <= 4; ++n) {
      LevelGraph lg = level_graph(base, n);
      auto rule = oracle::level_edges(adj, n);
      std::size_t total = lg.graph().vertex_count();
      std::size_t brute_edges = total;  // loops
      for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = a + 1; b < total; ++b) {
          auto u = digits(a, tg.n, n), v = digits(b, tg.n, n);
          bool edge = oracle::level_edge(adj, u, v);
          CHECK(edge == (rule.count(std::minmax(u, v)) == 1));
          CHECK(lg.graph().adjacent(lg.vertex_of_code(a), lg.vertex_of_code(b)) == edge);
          CHECK(level_adjacent(base, FiniteWord{{u.begin(), u.end()}}, FiniteWord{{v.begin(), v.end()}}) == edge);
          if (edge) ++brute_edges;
        }
      CHECK(lg.graph().edge_count() == brute_edges);
      CHECK(level_edge_count(base, n) == brute_edges);
    }
  }
}

TEST_CASE("check_level_chain examples") {
  for (const auto& c : check_level_chain(path3(), 4)) CHECK(c.ok());
  auto split = check_level_chain(Graph({"0", "1", "2"}, {{"0", "1"}}), 3);
  for (const auto& c : split) {
    CHECK(c.proper_epimorphism);
    CHECK(c.fibers_isomorphic);
    CHECK_FALSE(c.level_connected);
    CHECK(c.ok());
  }
  for (const auto& c : check_level_chain(complete_graph({"0", "1"}), 5)) CHECK(c.ok());
}

TEST_CASE("truncation fibers and composition") {
  Graph g = path3();
  std::vector<LevelGraph> levels;
  for (std::size_t n = 0; n <= 5; ++n) levels.push_back(level_graph(g, n));
  // Fiber over "0" at level 1.
  GraphMap t21 = truncation_map(levels[2], levels[1]);
  CHECK(are_isomorphic(fiber_subgraph(t21, levels[1].vertex_of(FiniteWord{{0}})), g));
  for (std::size_t m = 1; m <= 5; ++m) {
    GraphMap down = truncation_map(levels[m], levels[m - 1]);
    for (std::size_t k = m - 1; k-- > 0;) {
      down = compose(truncation_map(levels[k + 1], levels[k]), down);
      CHECK(is_proper_epimorphism(down));
    }
  }
  CHECK_THROWS_AS(truncation_map(levels[3], levels[1]), InvalidInput);
}

TEST_CASE("limit_relation examples") {
  Graph g = path3();
  CHECK(limit_relation(g, parse_word(g, "0(12)"), parse_word(g, "0(12)")));
  CHECK(limit_relation(g, parse_word(g, "1(2)"), parse_word(g, "2(1)")));
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(level_adjacent(g, truncate(parse_word(g, "1(2)"), n), truncate(parse_word(g, "2(1)"), n)));
  CHECK_FALSE(limit_relation(g, parse_word(g, "0(2)"), parse_word(g, "2(0)")));
}

TEST_CASE("limit_relation agrees with identification") {
  std::mt19937_64 rng(67);
  for (const auto& tg : oracle::battery()) {
    Graph g = tg.graph();
    auto adj = tg.adjacency();
    for (int trial = 0; trial < 200; ++trial) {
      oracle::RawWord a = oracle::random_raw(rng, tg.n), b;
      if (trial % 2) {
        int p = rng() % tg.n, q = rng() % tg.n;
        b.prefix = a.prefix;
        a.prefix.push_back(p);
        a.period = {q};
        b.prefix.push_back(q);
        b.period = {p};
      } else {
        b = oracle::random_raw(rng, tg.n);
      }
      AddressWord x = oracle::to_word(g, a), y = oracle::to_word(g, b);
      bool related = limit_relation(g, x, y);
      CHECK(related == are_identified(g, x, y));
      if (related)
        for (std::size_t n = 1; n <= 10; ++n)
          CHECK(oracle::level_edge(adj, oracle::expand(a, n), oracle::expand(b, n)));
    }
  }
}

TEST_CASE("level connectivity follows the base graph") {
  for (const auto& tg : oracle::battery()) {
    if (tg.n > 4) continue;
    Graph g = tg.graph();
    for (std::size_t n = 1; n <= 4; ++n) CHECK(is_connected(level_graph(g, n).graph()) == is_connected(g));
  }
}

TEST_CASE("inverse sequence validation") {
  auto edge = share(Graph({"0", "1"}, {{"0", "1"}}));
  auto point = share(Graph({"p"}, {}));
  auto split = share(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
  CHECK_NOTHROW(InverseSequence({point, edge}, {GraphMap(edge, point, {0, 0})}));
  CHECK_THROWS_AS(InverseSequence({edge, split}, {GraphMap(split, edge, {0, 0, 1, 1})}), InvalidInput);
  CHECK_THROWS_AS(InverseSequence({point, edge}, {}), InvalidInput);
  CHECK_THROWS_AS(InverseSequence({edge, point}, {GraphMap(edge, point, {0, 0})}), InvalidInput);
  CHECK_THROWS_AS(InverseSequence({}, {}), InvalidInput);
}

TEST_CASE("quotient verdicts on level sequences") {
  InverseSequence conn = lipscomb_sequence(path3(), 4);
  CHECK(conn.size() == 5);
  CHECK(quotient_connected_verdict(conn).connected);
  CHECK(quotient_connected_verdict(conn).assumes_transitive);
  auto local = quotient_locally_connected_verdict(conn);
  REQUIRE(local.from_level);
  CHECK(*local.from_level == 0);

  InverseSequence loops = lipscomb_sequence(Graph({"0", "1", "2"}, {}), 3);
  CHECK_FALSE(quotient_connected_verdict(loops).connected);
  CHECK_FALSE(quotient_locally_connected_verdict(loops).from_level);
}

TEST_CASE("quotient verdicts on hand-built sequences") {
  auto point = share(Graph({"p"}, {}));
  auto two = share(Graph({"x", "y"}, {}));
  auto edge = share(Graph({"0", "1"}, {{"0", "1"}}));
  auto path4 = share(Graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  auto path8 = share(Graph({"1", "2", "3", "4", "5", "6", "7", "8"},
                           {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "7"}, {"7", "8"}}));

  // One disconnected level.
  InverseSequence gap({point, two}, {GraphMap(two, point, {0, 0})});
  CHECK_FALSE(quotient_connected_verdict(gap).connected);

  // Bond 0: edge -> point has the whole edge as its fiber (connected).
  // Bond 1: path4 -> edge sending a,c -> 0 and b,d -> 1 has disconnected fibers.
  // Bond 2: path8 -> path4 pairs consecutive vertices, connected fibers.
  InverseSequence seq({point, edge, path4, path8},
                      {GraphMap(edge, point, {0, 0}), GraphMap(path4, edge, {0, 1, 0, 1}),
                       GraphMap(path8, path4, {0, 0, 1, 1, 2, 2, 3, 3})});
  CHECK(quotient_connected_verdict(seq).connected);
  CHECK_FALSE(all_fibers_connected(seq.bonds()[1]));
  auto local = quotient_locally_connected_verdict(seq);
  REQUIRE(local.from_level);
  CHECK(*local.from_level == 2);

  // Every fiber connected.
  InverseSequence early({point, edge, path4}, {GraphMap(edge, point, {0, 0}), GraphMap(path4, edge, {0, 0, 1, 1})});
  auto first = quotient_locally_connected_verdict(early);
  CHECK(*first.from_level == 0);
  // Disconnected fibers only at the first bond (level 1 onto level 0).
  InverseSequence bad_first({edge, path4, path8},
                            {GraphMap(path4, edge, {0, 1, 0, 1}), GraphMap(path8, path4, {0, 0, 1, 1, 2, 2, 3, 3})});
  CHECK(*quotient_locally_connected_verdict(bad_first).from_level == 1);
}

}  // TEST_SUITE
