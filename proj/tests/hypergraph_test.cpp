#include "doctest.h"

#include <algorithm>
#include <set>

#include "hyperspec/generator.hpp"
#include "hyperspec/hypergraph.hpp"
#include "oracles.hpp"

using namespace hyperspec;

namespace {

Hypergraph triad() { return Hypergraph(6, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}}); }
Hypergraph triangle() { return Hypergraph(3, 2, {{1, 2}, {2, 3}, {1, 3}}); }

}  // namespace

TEST_CASE("parsing the .hg format") {
  const auto g = parse_hypergraph("p hg 4 4\ne 1 2 3 4\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.uniformity() == 4);
  CHECK(g.edges() == std::vector<Edge>{{1, 2, 3, 4}});

  const auto t = parse_hypergraph("p hg 6 4\ne 1 2 3 4\ne 3 4 5 6\ne 1 2 5 6\n");
  CHECK(t == triad());

  const auto c3 = parse_hypergraph("p hg 3 2\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(c3 == triangle());

  SUBCASE("comments, blank lines and CRLF are tolerated") {
    const auto g2 = parse_hypergraph("c a comment\r\np hg 4 4\r\n\r\ne 4 3 2 1\r\n");
    CHECK(g2 == g);
  }
  SUBCASE("serialization is canonical and round-trips") {
    CHECK(to_hg(t) == "p hg 6 4\ne 1 2 3 4\ne 1 2 5 6\ne 3 4 5 6\n");
    CHECK(parse_hypergraph(to_hg(t)) == t);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS((void)parse_hypergraph("p graph 3 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS((void)parse_hypergraph("e 1 2\n"), ParseError);            // edge before header
  CHECK_THROWS_AS((void)parse_hypergraph("p hg 4 4\ne 1 2 3\n"), ParseError);  // wrong arity
  CHECK_THROWS_AS((void)parse_hypergraph("p hg 4 4\ne 1 2 3 5\n"), ParseError);  // out of range
  CHECK_THROWS_AS((void)parse_hypergraph("p hg 4 4\ne 1 2 3 3\n"), ParseError);  // repeated vertex
  CHECK_THROWS_AS((void)parse_hypergraph("p hg 4 4\ne 1 2 3 4\ne 4 3 2 1\n"),
                  ParseError);  // duplicate edge as a set
  CHECK_THROWS_AS((void)parse_hypergraph("p hg 4 x\ne 1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS((void)parse_hypergraph(""), ParseError);
}

TEST_CASE("degrees") {
  const auto single = Hypergraph(4, 4, {{1, 2, 3, 4}});
  CHECK(degrees(single) == Eigen::VectorXi::Ones(4));
  CHECK(degrees(triad()) == Eigen::VectorXi::Constant(6, 2));
  CHECK(degrees(triangle()) == Eigen::VectorXi::Constant(3, 2));

  const auto d = degrees(triad());
  CHECK(d.sum() == triad().uniformity() * triad().edge_count());
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Hypergraph(4, 4, {{1, 2, 3, 4}})));
  SUBCASE("an isolated vertex disconnects") {
    const auto conn = connected_components(Hypergraph(5, 4, {{1, 2, 3, 4}}));
    CHECK_FALSE(conn.connected);
    CHECK(conn.component_count == 2);
    CHECK(conn.component[4] != conn.component[0]);
  }
  CHECK(is_connected(triad()));
  CHECK_FALSE(is_connected(Hypergraph(6, 2, {{1, 2}, {3, 4}, {5, 6}})));
}

TEST_CASE("odd_bipartition on the canonical instances") {
  SUBCASE("single edge: lowest-index singleton certificate") {
    const auto b = odd_bipartition(Hypergraph(4, 4, {{1, 2, 3, 4}}));
    REQUIRE(b.is_certificate());
    CHECK(b.v1 == std::vector<int>{1});
  }
  SUBCASE("triad: the three edges witness infeasibility") {
    const auto b = odd_bipartition(triad());
    REQUIRE_FALSE(b.is_certificate());
    CHECK(b.reason == "gf2-inconsistent");
    CHECK(b.witness == std::vector<int>{0, 1, 2});
    CHECK(is_valid_witness(triad(), b.witness));
  }
  SUBCASE("odd cycle is not bipartite") {
    const auto b = odd_bipartition(triangle());
    CHECK_FALSE(b.is_certificate());
    CHECK(is_valid_witness(triangle(), b.witness));
  }
  SUBCASE("odd uniformity is rejected outright") {
    const auto b = odd_bipartition(Hypergraph(4, 3, {{1, 2, 3}, {2, 3, 4}}));
    CHECK_FALSE(b.is_certificate());
    CHECK(b.reason == "k-odd");
    CHECK(b.witness.empty());
  }
  SUBCASE("even cycle is bipartite") {
    const auto b = odd_bipartition(Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    REQUIRE(b.is_certificate());
    CHECK(is_valid_certificate(Hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), b.v1));
  }
}

TEST_CASE("odd_bipartition agrees with the exhaustive oracle") {
  int certificates = 0, witnesses = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull);
    const int k = (seed % 2 == 0) ? 2 : 4;
    const int n = k + 2 + static_cast<int>(rng.below(8));  // n <= 16 keeps 2^n cheap
    const int m = 2 + static_cast<int>(rng.below(4));
    GenerateResult gen = generate(GenKind::UniformRandom, n, k, m, seed, 50);

    const auto mine = odd_bipartition(gen.graph);
    const auto oracle = oracles::brute_force_odd_bipartition(gen.graph);
    CHECK(mine.is_certificate() == oracle.has_value());
    if (mine.is_certificate()) {
      CHECK(is_valid_certificate(gen.graph, mine.v1));
      ++certificates;
    } else {
      CHECK(mine.reason == "gf2-inconsistent");
      CHECK(is_valid_witness(gen.graph, mine.witness));
      ++witnesses;
    }
  }
  // Both branches must actually be exercised.
  CHECK(certificates > 0);
  CHECK(witnesses > 0);
}

TEST_CASE("certificates from the GF(2) system are automatically proper") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto gen = generate(GenKind::OddBipartite, 8, 4, 4, seed, 100);
    const auto b = odd_bipartition(gen.graph);
    REQUIRE(b.is_certificate());
    CHECK(!b.v1.empty());
    CHECK(static_cast<int>(b.v1.size()) < gen.graph.vertex_count());
  }
}

TEST_CASE("cartesian product") {
  const auto single = Hypergraph(4, 4, {{1, 2, 3, 4}});
  SUBCASE("two single edges") {
    const auto p = cartesian_product(single, single);
    CHECK(p.vertex_count() == 16);
    CHECK(p.edge_count() == 8);
    CHECK(p.uniformity() == 4);
  }
  SUBCASE("a trivial one-vertex factor acts as identity") {
    const auto trivial = Hypergraph(1, 4, {});
    CHECK(cartesian_product(single, trivial) == single);
  }
  SUBCASE("triangle box K2 is the 3-prism") {
    const auto k2 = Hypergraph(2, 2, {{1, 2}});
    const auto prism = cartesian_product(triangle(), k2);
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(is_connected(prism));
    CHECK(degrees(prism) == Eigen::VectorXi::Constant(6, 3));
  }
  SUBCASE("uniformity mismatch") {
    CHECK_THROWS_AS((void)cartesian_product(single, triangle()), DimensionError);
  }
  SUBCASE("edge count formula on random pairs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto g = generate(GenKind::UniformRandom, 6, 4, 3, seed, 50).graph;
      const auto h = generate(GenKind::UniformRandom, 5, 4, 2, seed + 100, 50).graph;
      const auto p = cartesian_product(g, h);
      CHECK(p.edge_count() ==
            g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count());
    }
  }
}

TEST_CASE("product of odd-bipartite factors stays odd-bipartite") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = generate(GenKind::OddBipartite, 5, 4, 3, seed, 200).graph;
    const auto h = generate(GenKind::OddBipartite, 6, 4, 3, seed + 31, 200).graph;
    const auto p = cartesian_product(g, h);

    const auto bg = odd_bipartition(g), bh = odd_bipartition(h);
    REQUIRE(bg.is_certificate());
    REQUIRE(bh.is_certificate());

    std::vector<bool> in_g(g.vertex_count() + 1, false), in_h(h.vertex_count() + 1, false);
    for (const int v : bg.v1) in_g[v] = true;
    for (const int v : bh.v1) in_h[v] = true;
    std::vector<int> combined;
    for (int i = 1; i <= g.vertex_count(); ++i)
      for (int j = 1; j <= h.vertex_count(); ++j)
        if (in_g[i] == in_h[j]) combined.push_back((i - 1) * h.vertex_count() + j);

    CHECK(is_valid_certificate(p, combined));
    CHECK(odd_bipartition(p).is_certificate());
  }
}

TEST_CASE("generator") {
  SUBCASE("the only 4-subset of 4 vertices is forced") {
    const auto gen = generate(GenKind::UniformRandom, 4, 4, 1, 12345);
    CHECK(gen.graph == Hypergraph(4, 4, {{1, 2, 3, 4}}));
    CHECK(gen.connected);
  }
  SUBCASE("same seed, same edges") {
    const auto a = generate(GenKind::UniformRandom, 9, 4, 5, 77);
    const auto b = generate(GenKind::UniformRandom, 9, 4, 5, 77);
    CHECK(a.graph == b.graph);
    CHECK(a.attempts == b.attempts);
  }
  SUBCASE("odd-bipartite construction is certified by the solver") {
    const auto gen = generate(GenKind::OddBipartite, 6, 4, 3, 1);
    CHECK(odd_bipartition(gen.graph).is_certificate());
    CHECK(is_valid_certificate(gen.graph, gen.planted_v1));
  }
  SUBCASE("infeasible parameters are rejected") {
    CHECK_THROWS_AS((void)generate(GenKind::UniformRandom, 4, 4, 2, 1), Error);
    CHECK_THROWS_AS((void)generate(GenKind::UniformRandom, 3, 4, 1, 1), Error);
    CHECK_THROWS_AS((void)generate(GenKind::OddBipartite, 6, 3, 2, 1), Error);
  }
}
