#pragma once

// k-uniform hypergraphs: representation, `.hg` I/O, degrees, connectivity,
// odd-bipartiteness certificates and Cartesian products.
//
// Vertices are labeled 1..n throughout. All types are immutable values.

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperspec/errors.hpp"

namespace hyperspec {

using Edge = std::vector<int>;  // k distinct labels, strictly increasing

/// A k-uniform hypergraph on vertices 1..n with a canonical
/// (lexicographically sorted, duplicate-free) edge list.
class Hypergraph {
 public:
  /// Validates and canonicalizes. Edges may arrive in any vertex order;
  /// duplicate edges (as sets) are rejected.
  Hypergraph(int n, int k, std::vector<Edge> edges);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] int uniformity() const { return k_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
};

/// d_i = number of edges containing vertex i.
[[nodiscard]] Eigen::VectorXi degrees(const Hypergraph& g);

struct Connectivity {
  bool connected = false;
  Eigen::VectorXi component;  // 0-based component index per vertex 1..n
  int component_count = 0;
};

/// BFS over the vertex-edge incidence structure. Isolated vertices form
/// their own components.
[[nodiscard]] Connectivity connected_components(const Hypergraph& g);

[[nodiscard]] inline bool is_connected(const Hypergraph& g) {
  return connected_components(g).connected;
}

enum class BipartitionKind { Certificate, InfeasibleWitness };

/// Result of the odd-bipartiteness decision: either a certifying vertex
/// subset V1, or a self-contained proof that none exists.
struct Bipartition {
  BipartitionKind kind = BipartitionKind::InfeasibleWitness;
  /// Certificate: vertex labels of V1, ascending. Every edge meets V1 in an
  /// odd number of vertices.
  std::vector<int> v1;
  /// Witness: 0-based edge indices (canonical order) of odd cardinality
  /// covering every vertex an even number of times. Empty when the reason
  /// is not the GF(2) system itself.
  std::vector<int> witness;
  /// "" | "gf2-inconsistent" | "k-odd" | "no-proper-subset"
  std::string reason;

  [[nodiscard]] bool is_certificate() const { return kind == BipartitionKind::Certificate; }
};

/// Decides odd-bipartiteness by solving the GF(2) system M s = 1 over the
/// edge-vertex incidence matrix. Deterministic: lowest-index pivoting, free
/// variables zero. Odd k is reported as infeasible regardless of the system.
[[nodiscard]] Bipartition odd_bipartition(const Hypergraph& g);

/// True iff v1 is nonempty, proper, and meets every edge of g oddly
/// (and g has even uniformity).
[[nodiscard]] bool is_valid_certificate(const Hypergraph& g, const std::vector<int>& v1);

/// True iff the edge-index set has odd cardinality and covers every vertex
/// an even number of times -- a solver-independent proof of infeasibility.
[[nodiscard]] bool is_valid_witness(const Hypergraph& g, const std::vector<int>& witness);

/// +-1 vector with -1 exactly on v1.
[[nodiscard]] Eigen::VectorXd sign_vector(int n, const std::vector<int>& v1);

/// Cartesian product: vertex (i,j) flattens to (i-1)*m + j, m = h.vertex_count().
/// Edge families: one coordinate fixed, the other running over an edge.
[[nodiscard]] Hypergraph cartesian_product(const Hypergraph& g, const Hypergraph& h);

/// Parse the `.hg` text format (header `p hg <n> <k>`, edge lines
/// `e v1 ... vk`, comment lines `c ...`). Rejects malformed headers, wrong
/// arity, out-of-range or repeated vertices, and duplicate edges.
[[nodiscard]] Hypergraph parse_hypergraph(std::istream& in);
[[nodiscard]] Hypergraph parse_hypergraph(const std::string& text);

/// Canonical `.hg` serialization (edges sorted, vertices ascending).
[[nodiscard]] std::string to_hg(const Hypergraph& g);

/// FNV-1a hash of the canonical serialization, as 16 hex digits.
[[nodiscard]] std::string content_hash(const Hypergraph& g);

}  // namespace hyperspec
