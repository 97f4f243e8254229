#include "doctest.h"

#include <cmath>

#include "hyperspec/generator.hpp"
#include "hyperspec/hypergraph_tensors.hpp"
#include "hyperspec/spectral.hpp"
#include "oracles.hpp"

using namespace hyperspec;

namespace {

Hypergraph single_edge() { return Hypergraph(4, 4, {{1, 2, 3, 4}}); }
Hypergraph triangle() { return Hypergraph(3, 2, {{1, 2}, {2, 3}, {1, 3}}); }

EdgeListOperator<double> op(const Hypergraph& g, HypergraphTensorKind kind) {
  return EdgeListOperator<double>(g, kind);
}

}  // namespace

TEST_CASE("power iteration on forced instances") {
  SUBCASE("signless Laplacian of a single edge has rho = 2") {
    const auto r = power_rho(op(single_edge(), HypergraphTensorKind::SignlessLaplacian));
    CHECK(r.converged);
    CHECK(r.pair.lambda == doctest::Approx(2.0).epsilon(1e-9));
    CHECK((r.pair.x.array() == 1.0).all());
    CHECK(r.bracket_lo <= 2.0 + 1e-12);
    CHECK(r.bracket_hi >= 2.0 - 1e-12);
  }
  SUBCASE("adjacency of a single edge has rho = 1") {
    const auto r = power_rho(op(single_edge(), HypergraphTensorKind::Adjacency));
    CHECK(r.converged);
    CHECK(r.pair.lambda == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("triangle signless Laplacian matches the matrix oracle") {
    const auto r = power_rho(op(triangle(), HypergraphTensorKind::SignlessLaplacian));
    CHECK(r.converged);
    CHECK(r.pair.lambda == doctest::Approx(4.0).epsilon(1e-9));
    const double oracle =
        oracles::spectral_radius(to_matrix(signless_laplacian_tensor(triangle())));
    CHECK(std::abs(r.pair.lambda - oracle) <= 1e-8);
  }
  SUBCASE("dense tensors run through the same path") {
    const auto r = power_rho(signless_laplacian_tensor(single_edge()));
    CHECK(r.pair.lambda == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("power iteration refusals and budget") {
  CHECK_THROWS_AS(
      (void)power_rho(op(Hypergraph(5, 4, {{1, 2, 3, 4}}), HypergraphTensorKind::Adjacency)),
      UnsupportedError);
  CHECK_THROWS_AS((void)power_rho(op(triangle(), HypergraphTensorKind::Laplacian)), Error);
  CHECK_THROWS_AS((void)power_rho(laplacian_tensor(triangle())), Error);

  SUBCASE("invalid configs") {
    PowerIterationConfig bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(
        (void)power_rho(op(triangle(), HypergraphTensorKind::SignlessLaplacian), bad), Error);
  }
  SUBCASE("unreachable tolerance reports non-convergence with a bracket") {
    PowerIterationConfig cfg;
    cfg.tol = 1e-30;
    cfg.max_iter = 60;
    const auto g = generate(GenKind::UniformRandom, 6, 2, 7, 3).graph;
    const auto r = power_rho(op(g, HypergraphTensorKind::SignlessLaplacian), cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 60);
    CHECK(r.bracket_lo <= r.bracket_hi);
  }
}

TEST_CASE("bracket contains the true radius (k=2 oracle)") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto gen = generate(GenKind::UniformRandom, 7, 2, 9, seed);
    if (!gen.connected) continue;
    const auto r = power_rho(op(gen.graph, HypergraphTensorKind::SignlessLaplacian));
    const double oracle =
        oracles::spectral_radius(to_matrix(signless_laplacian_tensor(gen.graph)));
    CHECK(r.bracket_lo <= oracle + 1e-8);
    CHECK(r.bracket_hi >= oracle - 1e-8);
    CHECK(std::abs(r.pair.lambda - oracle) <= 1e-8);
    CHECK(r.pair.residual <= r.pair.lambda * 1e-9 + 1e-12);
  }
}

TEST_CASE("shift equivariance") {
  const auto g = generate(GenKind::UniformRandom, 7, 4, 4, 11).graph;
  const auto q = op(g, HypergraphTensorKind::SignlessLaplacian);
  PowerIterationConfig cfg;
  std::vector<double> lambdas;
  for (const double shift : {0.5, 1.0, 2.0}) {
    cfg.shift = shift;
    const auto r = power_rho(q, cfg);
    CHECK(r.converged);
    lambdas.push_back(r.pair.lambda);
  }
  for (const double l : lambdas) CHECK(std::abs(l - lambdas[0]) <= 2.0 * cfg.tol * 4.0);
}

TEST_CASE("edge deletion never increases the signless Laplacian radius") {
  int trials = 0;
  for (std::uint64_t seed = 1; seed <= 12 && trials < 8; ++seed) {
    const auto gen = generate(GenKind::UniformRandom, 7, 4, 5, seed);
    if (!gen.connected) continue;
    const auto full = power_rho(op(gen.graph, HypergraphTensorKind::SignlessLaplacian));
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < gen.graph.edge_count(); ++attempt) {
      const int drop = static_cast<int>(rng.below(gen.graph.edge_count()));
      std::vector<Edge> remaining;
      for (int ei = 0; ei < gen.graph.edge_count(); ++ei)
        if (ei != drop) remaining.push_back(gen.graph.edges()[ei]);
      const Hypergraph sub(gen.graph.vertex_count(), 4, remaining);
      if (!is_connected(sub)) continue;
      const auto reduced = power_rho(op(sub, HypergraphTensorKind::SignlessLaplacian));
      CHECK(reduced.pair.lambda <= full.pair.lambda + 2e-10);
      ++trials;
      break;
    }
  }
  CHECK(trials > 0);
}

TEST_CASE("residual") {
  const auto q = op(single_edge(), HypergraphTensorKind::SignlessLaplacian);
  CHECK(residual(q, 2.0, Eigen::VectorXd::Ones(4).eval()) == 0.0);
  const auto a = op(single_edge(), HypergraphTensorKind::Adjacency);
  CHECK(residual(a, 0.5, Eigen::VectorXd::Ones(4).eval()) == 0.5);
  CHECK_THROWS_AS((void)residual(q, 1.0, Eigen::VectorXd::Zero(4).eval()), Error);

  SUBCASE("stored residual is recomputable") {
    const auto r = power_rho(q);
    CHECK(std::abs(r.pair.residual - residual(q, r.pair.lambda, r.pair.x)) <= 1e-14);
  }
}

TEST_CASE("zero eigenvector of Q for odd-bipartite instances") {
  SUBCASE("single edge") {
    const auto g = single_edge();
    const auto pair = zero_q_eigenvector(g, odd_bipartition(g));
    CHECK(pair.lambda == 0.0);
    Eigen::VectorXd expected(4);
    expected << -1, 1, 1, 1;
    CHECK(pair.x == expected);
    CHECK(pair.residual == 0.0);
  }
  SUBCASE("generated instances have exactly zero residual") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto gen = generate(GenKind::OddBipartite, 8, 4, 4, seed);
      const auto pair = zero_q_eigenvector(gen.graph, odd_bipartition(gen.graph));
      CHECK(pair.residual == 0.0);
    }
  }
  SUBCASE("instances without certificates are rejected") {
    const auto triad = Hypergraph(6, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}});
    CHECK_THROWS_AS((void)zero_q_eigenvector(triad, odd_bipartition(triad)), Error);
    // k = 2 is even, so the triangle fails on the missing certificate.
    CHECK_THROWS_AS((void)zero_q_eigenvector(triangle(), odd_bipartition(triangle())), Error);
    CHECK_THROWS_AS(
        (void)zero_q_eigenvector(Hypergraph(4, 3, {{1, 2, 3}, {2, 3, 4}}),
                                 odd_bipartition(Hypergraph(4, 3, {{1, 2, 3}, {2, 3, 4}}))),
        UnsupportedError);
  }
}

TEST_CASE("Laplacian radius eigenpair by sign transfer") {
  SUBCASE("single edge: exact eigenpair at rho = 2") {
    const auto g = single_edge();
    const auto r = laplacian_rho_eigenpair(g, odd_bipartition(g));
    CHECK(r.pair.lambda == 2.0);
    Eigen::VectorXd expected(4);
    expected << -1, 1, 1, 1;
    CHECK(r.pair.x == expected);
    CHECK(r.pair.residual == 0.0);
  }
  SUBCASE("K2 path: classical Laplacian eigenvalue 2") {
    const auto k2 = Hypergraph(2, 2, {{1, 2}});
    const auto r = laplacian_rho_eigenpair(k2, odd_bipartition(k2));
    CHECK(r.pair.lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.pair.x[0] == -r.pair.x[1]);
  }
  SUBCASE("generated instance: residual within the spectral tolerance") {
    const auto gen = generate(GenKind::OddBipartite, 8, 4, 4, 7);
    REQUIRE(gen.connected);
    const auto r = laplacian_rho_eigenpair(gen.graph, odd_bipartition(gen.graph));
    CHECK(r.converged);
    CHECK(r.pair.residual <= 1e-8);
  }
  SUBCASE("transfer preserves the Q residual bit for bit") {
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
      const auto gen = generate(GenKind::OddBipartite, 7, 4, 4, seed);
      if (!gen.connected) continue;
      const auto lr = laplacian_rho_eigenpair(gen.graph, odd_bipartition(gen.graph));
      const auto qr = power_rho(op(gen.graph, HypergraphTensorKind::SignlessLaplacian));
      CHECK(lr.pair.residual == qr.pair.residual);
      CHECK(lr.pair.lambda == qr.pair.lambda);
    }
  }
  SUBCASE("refuses non-odd-bipartite input") {
    const auto triad = Hypergraph(6, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}});
    CHECK_THROWS_AS((void)laplacian_rho_eigenpair(triad, odd_bipartition(triad)), Error);
  }
}

TEST_CASE("eigenpair composition on product operators") {
  const auto g = single_edge();
  const auto prod = cartesian_product(g, g);
  const auto qp = op(prod, HypergraphTensorKind::SignlessLaplacian);

  SUBCASE("Perron pairs add") {
    const auto rg = power_rho(op(g, HypergraphTensorKind::SignlessLaplacian));
    const auto composed = product_eigenpair(rg.pair, rg.pair, qp);
    CHECK(composed.lambda == doctest::Approx(4.0).epsilon(1e-9));
    CHECK((composed.x.array() == 1.0).all());
    CHECK(composed.residual <= 1e-12);
  }
  SUBCASE("zero eigenpairs compose to a zero eigenpair") {
    const auto zg = zero_q_eigenvector(g, odd_bipartition(g));
    const auto composed = product_eigenpair(zg, zg, qp);
    CHECK(composed.lambda == 0.0);
    CHECK(composed.residual == 0.0);
  }
  SUBCASE("dimension mismatch is rejected") {
    const auto rg = power_rho(op(g, HypergraphTensorKind::SignlessLaplacian));
    CHECK_THROWS_AS(
        (void)product_eigenpair(rg.pair, rg.pair,
                                op(g, HypergraphTensorKind::SignlessLaplacian)),
        DimensionError);
  }
}

TEST_CASE("spectral radius additivity across the Cartesian product") {
  const auto g = generate(GenKind::OddBipartite, 5, 4, 3, 5).graph;
  const auto h = generate(GenKind::OddBipartite, 6, 4, 3, 9).graph;
  REQUIRE(is_connected(g));
  REQUIRE(is_connected(h));
  const auto prod = cartesian_product(g, h);
  PowerIterationConfig cfg;

  for (const auto kind :
       {HypergraphTensorKind::Adjacency, HypergraphTensorKind::SignlessLaplacian}) {
    const auto rg = power_rho(op(g, kind), cfg);
    const auto rh = power_rho(op(h, kind), cfg);
    const auto rp = power_rho(op(prod, kind), cfg);
    CHECK(rg.converged);
    CHECK(rh.converged);
    CHECK(rp.converged);
    CHECK(std::abs(rp.pair.lambda - rg.pair.lambda - rh.pair.lambda) <= 3.0 * cfg.tol);
  }

  const auto lg = laplacian_rho_eigenpair(g, odd_bipartition(g), cfg);
  const auto lh = laplacian_rho_eigenpair(h, odd_bipartition(h), cfg);
  const auto lp = laplacian_rho_eigenpair(prod, odd_bipartition(prod), cfg);
  CHECK(std::abs(lp.pair.lambda - lg.pair.lambda - lh.pair.lambda) <= 3.0 * cfg.tol);
}
