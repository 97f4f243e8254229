#include "hyperspec/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace hyperspec {

namespace {

// C(n,k) clamped to avoid overflow; anything above the clamp is "plenty".
double binomial_clamped(int n, int k) {
  double r = 1.0;
  for (int t = 1; t <= k; ++t) {
    r *= static_cast<double>(n - k + t) / static_cast<double>(t);
    if (r > 1e18) return 1e18;
  }
  return r;
}

Edge random_k_subset(SplitMix64& rng, int n, int k) {
  // Partial Fisher-Yates over 1..n.
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  for (int t = 0; t < k; ++t) {
    const int j = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - t)));
    std::swap(pool[t], pool[j]);
  }
  Edge e(pool.begin(), pool.begin() + k);
  std::sort(e.begin(), e.end());
  return e;
}

int odd_overlap(const Edge& e, const std::vector<bool>& in_v1) {
  int cnt = 0;
  for (const int v : e) cnt += in_v1[v] ? 1 : 0;
  return cnt % 2;
}

}  // namespace

GenerateResult generate(GenKind kind, int n, int k, int m, std::uint64_t seed, int max_attempts) {
  if (k < 2) throw Error("generate: k must be at least 2");
  if (n < k) throw Error("generate: need n >= k");
  if (m < 0) throw Error("generate: negative edge count");
  if (kind == GenKind::UniformRandom && static_cast<double>(m) > binomial_clamped(n, k))
    throw Error("generate: m exceeds the number of k-subsets");
  if (kind == GenKind::OddBipartite && k % 2 != 0)
    throw Error("generate: odd-bipartite construction requires even k");

  SplitMix64 rng(seed);
  const int edge_budget = 200 * std::max(m, 1);

  GenerateResult best{Hypergraph(n, k, {}), {}, false, 0};
  bool have_any = false;

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<int> v1;
    std::vector<bool> in_v1(n + 1, false);
    if (kind == GenKind::OddBipartite) {
      // A proper nonempty V1 admitting at least one odd-overlap k-subset:
      // some odd r <= min(k,|V1|) with k - r <= n - |V1|.
      bool feasible = false;
      for (int tries = 0; tries < 64 && !feasible; ++tries) {
        v1.clear();
        std::fill(in_v1.begin(), in_v1.end(), false);
        for (int v = 1; v <= n; ++v) {
          if (rng.below(2) == 1) {
            v1.push_back(v);
            in_v1[v] = true;
          }
        }
        const int s = static_cast<int>(v1.size());
        if (s == 0 || s == n) continue;
        for (int r = 1; r <= std::min(k, s); r += 2) {
          if (k - r <= n - s) {
            feasible = true;
            break;
          }
        }
      }
      if (!feasible) throw Error("generate: no feasible V1 found for odd-bipartite sampling");
    }

    std::set<Edge> edges;
    int draws = 0;
    while (static_cast<int>(edges.size()) < m && draws < edge_budget) {
      ++draws;
      Edge e = random_k_subset(rng, n, k);
      if (kind == GenKind::OddBipartite && odd_overlap(e, in_v1) == 0) continue;
      edges.insert(std::move(e));
    }
    if (static_cast<int>(edges.size()) < m) {
      if (attempt == max_attempts)
        throw Error("generate: attempt budget exhausted before collecting " + std::to_string(m) +
                    " edges");
      continue;
    }

    Hypergraph g(n, k, std::vector<Edge>(edges.begin(), edges.end()));
    const bool conn = is_connected(g);
    if (!have_any || (conn && !best.connected)) {
      best = GenerateResult{g, v1, conn, attempt};
      have_any = true;
    }
    if (conn) {
      best.attempts = attempt;
      return best;
    }
  }
  if (!have_any) throw Error("generate: attempt budget exhausted");
  best.attempts = max_attempts;
  return best;
}

}  // namespace hyperspec
