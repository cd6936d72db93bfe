#include <doctest.h>

#include <random>

#include "lipscomb/embedding.hpp"
#include "lipscomb/error.hpp"
#include "lipscomb/ifs.hpp"
#include "oracles.hpp"

using namespace lipscomb;

namespace {

Graph path3() { return Graph({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}); }

ExactPoint pt(std::initializer_list<Rational> xs) { return ExactPoint(xs); }

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("config") {
  EmbeddingConfig cfg(path3());
  CHECK(cfg.z() == 0);
  CHECK(cfg.dimension() == 2);
  CHECK_FALSE(cfg.coordinate(0).has_value());
  CHECK(*cfg.coordinate(2) == 1);
  EmbeddingConfig mid(path3(), 1);
  CHECK(mid.coordinate_symbol(0) == 0);
  CHECK(mid.coordinate_symbol(1) == 2);
  CHECK_THROWS_AS(EmbeddingConfig(Graph({"0"}, {})), InvalidInput);
  CHECK_THROWS_AS(EmbeddingConfig(path3(), 3), InvalidInput);
}

TEST_CASE("coefficient examples") {
  EmbeddingConfig cfg(path3());
  CHECK(coefficient(cfg, 1, 2, 0) == 0);
  CHECK(coefficient(cfg, 1, 1, 1) == Rational(1, 2));
  CHECK(coefficient(cfg, 0, 2, 2) == Rational(1, 3));
  CHECK(coefficient(cfg, 0, 1, 1) == Rational(1, 2));
  CHECK_THROWS_AS(coefficient(cfg, 0, 1, 5), InvalidInput);
}

TEST_CASE("embed examples") {
  EmbeddingConfig cfg(path3());
  const Graph& g = cfg.graph();
  CHECK(embed(cfg, parse_word(g, "(0)")) == pt({0, 0}));
  CHECK(embed(cfg, parse_word(g, "(1)")) == pt({1, 0}));
  CHECK(embed(cfg, parse_word(g, "1(2)")) == pt({Rational(1, 2), Rational(1, 2)}));
  CHECK(embed(cfg, parse_word(g, "0(2)")) == pt({0, Rational(1, 3)}));
  CHECK(format_point(cfg, embed(cfg, parse_word(g, "0(2)"))) == "1=0 2=1/3");
}

TEST_CASE("periodic words can leave 2^p 3^q denominators") {
  EmbeddingConfig cfg(Graph({"0", "1", "2"}, {}));
  ExactPoint p = embed(cfg, parse_word(cfg.graph(), "(12)"));
  CHECK(p[0] == Rational(3, 5));
}

TEST_CASE("embed agrees with fixed points of composed maps") {
  std::mt19937_64 rng(41);
  for (const auto& tg : oracle::battery()) {
    auto adj = tg.adjacency();
    for (int z = 0; z < tg.n; ++z) {
      EmbeddingConfig cfg(tg.graph(), z);
      for (int trial = 0; trial < 40; ++trial) {
        auto w = oracle::random_raw(rng, tg.n, 5, 4);
        CHECK(embed(cfg, oracle::to_word(cfg.graph(), w)) == oracle::embed(adj, z, w));
      }
    }
  }
}

TEST_CASE("simplex containment") {
  std::mt19937_64 rng(43);
  for (const auto& tg : oracle::battery()) {
    EmbeddingConfig cfg(tg.graph());
    for (int trial = 0; trial < 100; ++trial) {
      ExactPoint p = embed(cfg, oracle::to_word(cfg.graph(), oracle::random_raw(rng, tg.n, 6, 4)));
      Rational sum = 0;
      for (const auto& c : p) {
        CHECK(c >= 0);
        CHECK(c <= 1);
        sum += c;
      }
      CHECK(sum <= 1);
    }
  }
}

TEST_CASE("partial_product examples") {
  EmbeddingConfig k3(complete_graph({"0", "1", "2"}));
  CHECK(partial_product(k3, parse_word(k3.graph(), "(1)"), 3) == Rational(1, 8));
  CHECK(partial_product(k3, parse_word(k3.graph(), "(0)"), 4) == 0);
  EmbeddingConfig loops(Graph({"0", "1", "2"}, {}));
  CHECK(partial_product(loops, parse_word(loops.graph(), "2(1)"), 2) == Rational(1, 6));
  CHECK_THROWS_AS(partial_product(loops, parse_word(loops.graph(), "2(1)"), 0), InvalidInput);
}

TEST_CASE("partial_product matches the series terms") {
  // coordinate b of embed = sum of partial products at indices with x_i = b.
  EmbeddingConfig cfg(path3());
  AddressWord x = parse_word(cfg.graph(), "(2)");
  Rational sum = 0;
  for (std::size_t i = 1; i <= 60; ++i) sum += partial_product(cfg, x, i);
  Rational exact = embed(cfg, x)[1];
  CHECK(sum <= exact);
  CHECK(exact - sum < Rational(1, 1000000));
}

TEST_CASE("distance examples") {
  CHECK(embedding_distance_squared(pt({1, 2}), pt({1, 2})) == 0);
  CHECK(embedding_distance_squared(pt({1, 0}), pt({0, 0})) == 1);
  CHECK(embedding_distance_squared(pt({Rational(1, 2), Rational(1, 2)}), pt({0, Rational(1, 3)})) ==
        Rational(5, 18));
  CHECK_THROWS_AS(distance_squared(pt({1}), pt({1, 2})), InvalidInput);
}

TEST_CASE("fixed-point consistency") {
  for (const auto& tg : oracle::battery()) {
    EmbeddingConfig cfg(tg.graph(), tg.n - 1);
    IFS s = build_system(cfg);
    for (Symbol i = 0; i < static_cast<Symbol>(tg.n); ++i) {
      ExactPoint e = embed(cfg, AddressWord::constant(cfg.graph().alphabet(), i));
      CHECK(e == fixed_point(s.map_for(i)));
      CHECK(e == basis_point(cfg, i));
    }
    CHECK(basis_point(cfg, cfg.z()) == origin(cfg));
  }
}

}  // TEST_SUITE
