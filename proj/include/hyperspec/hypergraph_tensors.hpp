#pragma once

// Hypergraph tensors: adjacency A (1/(k-1)! on every permutation of every
// edge), degree diagonal D, Laplacian L = D - A and signless Laplacian
// Q = D + A, plus an edge-list operator that applies them in O(|E| k^2)
// without materializing n^k entries.

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

enum class HypergraphTensorKind { Adjacency, Degree, Laplacian, SignlessLaplacian };

namespace detail {

inline std::int64_t factorial_checked(int k) {
  // (k-1)! must stay exactly representable; k is capped accordingly.
  if (k > 12) throw UnsupportedError("uniformity above 12 is not supported (factorial overflow)");
  std::int64_t f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

}  // namespace detail

template <typename Scalar = double>
[[nodiscard]] DenseTensor<Scalar> adjacency_tensor(const Hypergraph& g) {
  const int k = g.uniformity();
  const int n = g.vertex_count();
  const Scalar value = Scalar{1} / static_cast<Scalar>(detail::factorial_checked(k - 1));
  DenseTensor<Scalar> t(k, n);
  for (const auto& e : g.edges()) {
    std::vector<int> perm(e);
    for (int& v : perm) v -= 1;
    std::sort(perm.begin(), perm.end());
    do {
      t.entries()[t.flat_index(perm)] = value;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t;
}

template <typename Scalar = double>
[[nodiscard]] DenseTensor<Scalar> degree_tensor(const Hypergraph& g) {
  const Eigen::VectorXi d = degrees(g);
  DenseTensor<Scalar> t(g.uniformity(), g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    std::int64_t f = 0;
    for (int m = 0; m < g.uniformity(); ++m) f = f * g.vertex_count() + i;
    t.entries()[f] = static_cast<Scalar>(d[i]);
  }
  return t;
}

template <typename Scalar = double>
[[nodiscard]] DenseTensor<Scalar> laplacian_tensor(const Hypergraph& g) {
  return degree_tensor<Scalar>(g) - adjacency_tensor<Scalar>(g);
}

template <typename Scalar = double>
[[nodiscard]] DenseTensor<Scalar> signless_laplacian_tensor(const Hypergraph& g) {
  return degree_tensor<Scalar>(g) + adjacency_tensor<Scalar>(g);
}

template <typename Scalar = double>
[[nodiscard]] DenseTensor<Scalar> hypergraph_tensor(const Hypergraph& g,
                                                    HypergraphTensorKind kind) {
  switch (kind) {
    case HypergraphTensorKind::Adjacency: return adjacency_tensor<Scalar>(g);
    case HypergraphTensorKind::Degree: return degree_tensor<Scalar>(g);
    case HypergraphTensorKind::Laplacian: return laplacian_tensor<Scalar>(g);
    case HypergraphTensorKind::SignlessLaplacian: return signless_laplacian_tensor<Scalar>(g);
  }
  throw Error("unknown tensor kind");
}

/// Applies A, L or Q of a hypergraph through its edge list. For x and any
/// vertex i: (A x)_i = sum over edges containing i of the product of x over
/// the other k-1 vertices; D contributes d_i x_i^{k-1}.
template <typename Scalar = double>
class EdgeListOperator {
 public:
  using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

  EdgeListOperator(Hypergraph g, HypergraphTensorKind kind)
      : graph_(std::move(g)), kind_(kind), deg_(degrees(graph_)) {
    detail::factorial_checked(graph_.uniformity() - 1);
  }

  [[nodiscard]] int order() const { return graph_.uniformity(); }
  [[nodiscard]] int dim() const { return graph_.vertex_count(); }
  [[nodiscard]] HypergraphTensorKind kind() const { return kind_; }
  [[nodiscard]] const Hypergraph& hypergraph() const { return graph_; }

  [[nodiscard]] Vector apply(const Vector& x) const {
    if (x.size() != dim()) throw DimensionError("apply: vector length differs from dimension");
    const int k = order();
    Vector out = Vector::Zero(dim());

    Scalar diag_sign{1}, adj_sign{1};
    switch (kind_) {
      case HypergraphTensorKind::Adjacency: diag_sign = Scalar{0}; break;
      case HypergraphTensorKind::Degree: adj_sign = Scalar{0}; break;
      case HypergraphTensorKind::Laplacian: adj_sign = Scalar{-1}; break;
      case HypergraphTensorKind::SignlessLaplacian: break;
    }

    if (diag_sign != Scalar{0}) {
      for (int i = 0; i < dim(); ++i) {
        Scalar p{1};
        for (int t = 0; t < k - 1; ++t) p *= x[i];
        out[i] = diag_sign * static_cast<Scalar>(deg_[i]) * p;
      }
    }
    if (adj_sign != Scalar{0}) {
      for (const auto& e : graph_.edges()) {
        for (const int v : e) {
          Scalar p{1};
          for (const int w : e)
            if (w != v) p *= x[w - 1];
          out[v - 1] += adj_sign * p;
        }
      }
    }
    return out;
  }

 private:
  Hypergraph graph_;
  HypergraphTensorKind kind_;
  Eigen::VectorXi deg_;
};

template <typename Scalar>
[[nodiscard]] Eigen::Vector<Scalar, Eigen::Dynamic> apply(
    const EdgeListOperator<Scalar>& op, const Eigen::Vector<Scalar, Eigen::Dynamic>& x) {
  return op.apply(x);
}

/// The representation digraph of A and Q mirrors the hypergraph: strongly
/// connected iff the hypergraph is connected.
template <typename Scalar>
[[nodiscard]] bool weakly_irreducible(const EdgeListOperator<Scalar>& op) {
  return is_connected(op.hypergraph());
}

template <typename Scalar>
[[nodiscard]] bool is_entrywise_nonnegative(const EdgeListOperator<Scalar>& op) {
  return op.kind() != HypergraphTensorKind::Laplacian || op.hypergraph().edge_count() == 0;
}

template <typename Scalar>
[[nodiscard]] bool is_entrywise_nonnegative(const DenseTensor<Scalar>& t) {
  return !(t.entries().array() < Scalar{0}).any();
}

}  // namespace hyperspec
