#pragma once

// Spectral radius of nonnegative weakly irreducible tensors by shifted
// power iteration with a certified bracket, eigenpair residuals, and the
// explicit eigenvector constructions for signless Laplacians of
// odd-bipartite hypergraphs and for direct-product sums.

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>

#include "hyperspec/errors.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/hypergraph_tensors.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

struct PowerIterationConfig {
  double tol = 1e-10;
  std::int64_t max_iter = 100000;
  double shift = 1.0;
};

/// A numeric H-eigenpair: T x = lambda x^[m-1] with ||x||_inf = 1 and the
/// max-norm residual of that equation.
struct EigenPair {
  double lambda = 0.0;
  Eigen::VectorXd x;
  double residual = 0.0;
};

struct PowerResult {
  EigenPair pair;
  double bracket_lo = 0.0;  // certified lower bound on rho
  double bracket_hi = 0.0;  // certified upper bound on rho
  std::int64_t iterations = 0;
  bool converged = false;
};

template <typename Op>
concept TensorOperator = requires(const Op& t, const Eigen::VectorXd& v) {
  { t.order() } -> std::convertible_to<int>;
  { t.dim() } -> std::convertible_to<int>;
  { apply(t, v) } -> std::convertible_to<Eigen::VectorXd>;
};

/// ||T x - lambda x^[m-1]||_inf after normalizing x to unit max-norm.
template <TensorOperator Op>
[[nodiscard]] double residual(const Op& t, double lambda, const Eigen::VectorXd& x) {
  const double norm = x.cwiseAbs().maxCoeff();
  if (!(norm > 0)) throw Error("residual: zero vector");
  const Eigen::VectorXd xn = x / norm;
  const Eigen::VectorXd lhs = apply(t, xn);
  const Eigen::VectorXd rhs = lambda * detail::hadamard_int_pow<double>(xn, t.order() - 1);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

/// Power iteration on the shifted operator T + shift*I (the shift moves every
/// H-eigenvalue by +shift and keeps iterates strictly positive). At each step
/// the Collatz-Wielandt ratios of the current positive iterate bracket
/// rho(T + shift*I); iteration stops once the bracket closes to
/// tol * max(1, upper). Refuses tensors with negative entries and operators
/// that are not weakly irreducible; an exhausted iteration budget returns the
/// best bracket with converged = false.
template <TensorOperator Op>
[[nodiscard]] PowerResult power_rho(const Op& t, const PowerIterationConfig& cfg = {}) {
  if (!(cfg.tol > 0)) throw Error("power_rho: tol must be positive");
  if (cfg.max_iter <= 0) throw Error("power_rho: max_iter must be positive");
  if (!(cfg.shift >= 0)) throw Error("power_rho: shift must be nonnegative");
  if (t.order() < 2) throw DimensionError("power_rho: order must be at least 2");
  if (!is_entrywise_nonnegative(t)) throw Error("power_rho: negative entries");
  if (!weakly_irreducible(t))
    throw UnsupportedError("power_rho: operator is not weakly irreducible; bracket may not close");

  const int n = t.dim();
  const int m = t.order();
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double lo = 0.0, hi = 0.0;
  std::int64_t it = 0;
  bool converged = false;

  while (it < cfg.max_iter) {
    ++it;
    const Eigen::VectorXd xm1 = detail::hadamard_int_pow<double>(x, m - 1);
    const Eigen::VectorXd y = apply(t, x) + cfg.shift * xm1;
    const Eigen::VectorXd ratios = y.cwiseQuotient(xm1);
    lo = ratios.minCoeff();
    hi = ratios.maxCoeff();
    if (hi - lo <= cfg.tol * std::max(1.0, hi)) {
      converged = true;
      break;
    }
    Eigen::VectorXd next =
        m == 2 ? y : Eigen::VectorXd(hadamard_power<double>(y, 1.0 / (m - 1)));
    x = next / next.cwiseAbs().maxCoeff();
  }

  PowerResult res;
  res.pair.lambda = 0.5 * (lo + hi) - cfg.shift;
  res.pair.x = x;
  res.pair.residual = residual(t, res.pair.lambda, x);
  res.bracket_lo = lo - cfg.shift;
  res.bracket_hi = hi - cfg.shift;
  res.iterations = it;
  res.converged = converged;
  return res;
}

/// The explicit zero H-eigenvector of Q for an odd-bipartite hypergraph:
/// x_i = -1 on V1 and +1 elsewhere. Every edge then satisfies
/// x_{i1}^k + ... + x_{ik}^k + k x_{i1}...x_{ik} = 0, and Q x vanishes
/// exactly in floating point.
[[nodiscard]] inline EigenPair zero_q_eigenvector(const Hypergraph& g, const Bipartition& cert) {
  if (g.uniformity() % 2 != 0)
    throw UnsupportedError("zero_q_eigenvector: requires even uniformity");
  if (!cert.is_certificate() || !is_valid_certificate(g, cert.v1))
    throw Error("zero_q_eigenvector: invalid certificate");

  const Eigen::VectorXd x = sign_vector(g.vertex_count(), cert.v1);
  const int k = g.uniformity();
  for (const auto& e : g.edges()) {
    double power_sum = 0.0, prod = 1.0;
    for (const int v : e) {
      double p = 1.0;
      for (int t = 0; t < k; ++t) p *= x[v - 1];
      power_sum += p;
      prod *= x[v - 1];
    }
    if (power_sum + k * prod != 0.0)
      throw Error("zero_q_eigenvector: per-edge identity violated");
  }

  EigenPair pair;
  pair.lambda = 0.0;
  pair.x = x;
  pair.residual =
      residual(EdgeListOperator<double>(g, HypergraphTensorKind::SignlessLaplacian), 0.0, x);
  return pair;
}

/// Laplacian spectral radius eigenpair of a connected odd-bipartite
/// hypergraph: runs power iteration on Q and transfers the Perron vector v
/// to y with y_i = -v_i on V1. The sign flips are exact, so the Laplacian
/// residual of (rho, y) equals the Q residual of (rho, v).
[[nodiscard]] inline PowerResult laplacian_rho_eigenpair(const Hypergraph& g,
                                                         const Bipartition& cert,
                                                         const PowerIterationConfig& cfg = {}) {
  if (g.uniformity() % 2 != 0)
    throw UnsupportedError("laplacian_rho_eigenpair: requires even uniformity");
  if (!cert.is_certificate() || !is_valid_certificate(g, cert.v1))
    throw Error("laplacian_rho_eigenpair: invalid certificate");
  if (!is_connected(g)) throw UnsupportedError("laplacian_rho_eigenpair: hypergraph disconnected");

  PowerResult res =
      power_rho(EdgeListOperator<double>(g, HypergraphTensorKind::SignlessLaplacian), cfg);
  Eigen::VectorXd y = res.pair.x;
  for (const int v : cert.v1) y[v - 1] = -y[v - 1];
  res.pair.x = y;
  res.pair.residual =
      residual(EdgeListOperator<double>(g, HypergraphTensorKind::Laplacian), res.pair.lambda, y);
  return res;
}

/// Composes eigenpairs of A and B into one of A (x) I_m + I_n (x) B:
/// eigenvalue lambda + mu, eigenvector u (x) v under the lexicographic
/// flattening. The residual is evaluated against the combined operator.
template <TensorOperator Op>
[[nodiscard]] EigenPair product_eigenpair(const EigenPair& p, const EigenPair& q,
                                          const Op& combined) {
  const Eigen::Index n = p.x.size(), m = q.x.size();
  if (combined.dim() != n * m)
    throw DimensionError("product_eigenpair: combined operator dimension differs from n*m");
  Eigen::VectorXd w(n * m);
  for (Eigen::Index i = 0; i < n; ++i) w.segment(i * m, m) = p.x[i] * q.x;

  EigenPair out;
  out.lambda = p.lambda + q.lambda;
  const double norm = w.cwiseAbs().maxCoeff();
  if (!(norm > 0)) throw Error("product_eigenpair: zero combined vector");
  out.x = w / norm;
  out.residual = residual(combined, out.lambda, out.x);
  return out;
}

}  // namespace hyperspec
