// Graph canonical labeling, isomorphism testing and automorphism groups
// via individualization-refinement.
//
// The search individualizes vertices of the first smallest non-singleton
// cell (children in vertex-index order), alternates with equitable color
// refinement, and prunes branches that known automorphisms map to branches
// already explored.  The canonical form is the minimum relabeled edge list
// over the surviving leaves, so it is independent of discovery order.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

struct ColoredGraph {
  Graph graph;
  std::vector<uint32_t> colors;  // one color per vertex
};

// Coarsest equitable refinement of the input coloring: two vertices end up
// with equal colors only if they started equal and see equal multisets of
// neighbor colors at every round.  Colors are numbered 0.. by the cell
// order of the final partition.
std::vector<uint32_t> refine(const ColoredGraph& cg);

struct CanonicalForm {
  Perm relabeling;  // vertex -> canonical index
  std::vector<std::pair<uint32_t, uint32_t>> canonical_edge_list;
  uint64_t certificate_hash;  // FNV-1a 64 over the canonical edge list

  bool operator==(const CanonicalForm& o) const {
    return canonical_edge_list == o.canonical_edge_list;
  }
};

CanonicalForm canonical_form(const Graph& g);

// Full automorphism group on the vertices, with exact order; throws past
// the vertex cap.
PermGroup automorphism_group(const Graph& g, uint32_t vertex_cap = 20000);

// Canonical form and automorphism group from one search.
struct CanonicalResult {
  CanonicalForm form;
  PermGroup aut;
};
CanonicalResult canonicalize(const Graph& g, uint32_t vertex_cap = 20000);

// A concrete edge-preserving vertex bijection g1 -> g2, or a definite
// nullopt backed by canonical forms.
std::optional<std::vector<uint32_t>> are_isomorphic(const Graph& g1,
                                                    const Graph& g2);

struct InvariantSignature {
  uint32_t vertex_count = 0;
  uint64_t edge_count = 0;
  std::vector<uint32_t> degree_sequence;  // sorted
  uint32_t girth = 0;                     // 0 when acyclic
  std::vector<uint64_t> cycle_counts;     // simple cycles of length 3..8
  std::vector<uint32_t> color_histogram;  // refined cell sizes, sorted

  bool operator==(const InvariantSignature& o) const = default;
};

InvariantSignature invariant_signature(const Graph& g);

// Exhaustive reference: counts edge-preserving vertex permutations
// outright (test oracle, <= 10 vertices).
uint64_t brute_force_automorphism_count(const Graph& g);

}  // namespace cayley
