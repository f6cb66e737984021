#include "support/oracles.hpp"

#include <numeric>

#include "cayley/brute.hpp"

namespace cayley::testing {

Perm cyc(uint32_t n, const std::vector<std::vector<uint32_t>>& cycles) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(img);
}

Perm random_perm(Rng& rng, uint32_t degree) {
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  for (uint32_t i = degree; i > 1; --i)
    std::swap(img[i - 1], img[rng.below(i)]);
  return Perm(img);
}

PermGroup random_small_group(Rng& rng, uint32_t max_degree, uint64_t max_order) {
  for (;;) {
    uint32_t degree = 3 + static_cast<uint32_t>(rng.below(max_degree - 2));
    size_t num_gens = 1 + rng.below(3);
    std::vector<Perm> gens;
    for (size_t i = 0; i < num_gens; ++i) gens.push_back(random_perm(rng, degree));
    try {
      naive_closure(gens, max_order);
    } catch (...) {
      continue;
    }
    return PermGroup::from_generators(gens);
  }
}

Graph cycle_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (uint32_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_graph(Rng& rng, uint32_t n, uint32_t percent) {
  Graph g(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      if (rng.below(100) < percent) g.add_edge(i, j);
  return g;
}

std::vector<uint32_t> random_labeling(Rng& rng, uint32_t n) {
  std::vector<uint32_t> lab(n);
  std::iota(lab.begin(), lab.end(), 0u);
  for (uint32_t i = n; i > 1; --i) std::swap(lab[i - 1], lab[rng.below(i)]);
  return lab;
}

}  // namespace cayley::testing
