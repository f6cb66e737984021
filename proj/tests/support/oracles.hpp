// Shared helpers and independent oracles for the test suites.
#pragma once

#include <cstdint>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

namespace cayley::testing {

// Deterministic PRNG (splitmix64) so every suite is reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t state_;
};

// Permutation from cycles, e.g. cyc(5, {{0,1,2}}).
Perm cyc(uint32_t n, const std::vector<std::vector<uint32_t>>& cycles);

Perm random_perm(Rng& rng, uint32_t degree);

// Random group of order <= max_order on <= max_degree points (rejection
// sampled).
PermGroup random_small_group(Rng& rng, uint32_t max_degree, uint64_t max_order);

Graph cycle_graph(uint32_t n);
Graph complete_graph(uint32_t n);
Graph petersen_graph();
Graph random_graph(Rng& rng, uint32_t n, uint32_t percent);

std::vector<uint32_t> random_labeling(Rng& rng, uint32_t n);

}  // namespace cayley::testing
