#pragma once

// Deterministic hypergraph generators on a splitmix64 stream.

#include <cstdint>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// splitmix64: tiny, portable, fully deterministic PRNG stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t zone = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= zone);
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

enum class GenKind { UniformRandom, OddBipartite };

struct GenerateResult {
  Hypergraph graph;
  /// V1 used by the odd-bipartite construction (empty for uniform-random).
  std::vector<int> planted_v1;
  bool connected = false;
  int attempts = 0;
};

/// Deterministic for a fixed seed. UniformRandom draws m distinct k-subsets;
/// OddBipartite plants a proper nonempty V1 and samples edges meeting it
/// oddly. Both retry up to max_attempts to land on a connected instance and
/// report connectivity either way. Throws on infeasible parameters or an
/// exhausted attempt budget.
[[nodiscard]] GenerateResult generate(GenKind kind, int n, int k, int m, std::uint64_t seed,
                                      int max_attempts = 1000);

}  // namespace hyperspec
