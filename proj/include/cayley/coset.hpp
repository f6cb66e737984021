// Coset spaces, the right-multiplication action on them, and the graph
// constructions built from group data: coset graphs and Cayley graphs.
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cayley/graph.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

// A group acting on an indexed point set: one image permutation (on the
// points) per generator of the abstract group.
struct GroupAction {
  PermGroup group;           // abstract group, on its own natural points
  uint32_t point_count = 0;
  std::vector<Perm> images;  // images[i] is generators()[i] on the points

  // The acting group as a permutation group on the points.
  PermGroup image_group() const;
};

// Right cosets [G:K] = {Kx}, indexed by BFS from K over the generators of
// G in order; vertex 0 is K itself.
class CosetSpace {
 public:
  CosetSpace() = default;
  static CosetSpace build(const PermGroup& g, const PermGroup& k);

  const PermGroup& group() const { return group_; }
  const PermGroup& subgroup() const { return subgroup_; }
  uint32_t index() const { return static_cast<uint32_t>(reps_.size()); }
  const std::vector<Perm>& representatives() const { return reps_; }
  const std::vector<Perm>& subgroup_elements() const { return k_elements_; }

  // Index of the coset Kx.
  uint32_t index_of(const Perm& x) const;

  // BFS tree: how coset i was discovered (parent coset, generator id);
  // coset 0 has parent UINT32_MAX.
  uint32_t parent(uint32_t i) const { return parent_[i]; }
  uint32_t parent_gen(uint32_t i) const { return via_[i]; }

  // True if the right-multiplication action is faithful (K core-free).
  bool faithful() const { return faithful_; }

  const GroupAction& action() const { return action_; }

  // The acting group on the cosets, built once.
  const PermGroup& image_group() const { return image_group_; }

 private:
  Perm min_coset_element(const Perm& x) const;

  PermGroup group_, subgroup_;
  std::vector<Perm> k_elements_;
  std::vector<Perm> reps_;
  std::vector<uint32_t> parent_, via_;
  std::unordered_map<Perm, uint32_t, PermHash> key_to_index_;
  GroupAction action_;
  PermGroup image_group_;
  bool faithful_ = false;
};

std::pair<CosetSpace, GroupAction> coset_action(const PermGroup& g,
                                                const PermGroup& k);

// Coset graph on [G:K] with Kx ~ Ky iff x y^-1 in KgK.  Preconditions:
// K <= G, g in G, g not in N_G(K), g^2 in K.  Valency is |K : K and K^g|;
// connectivity is reported by the caller via Graph::is_connected.
Graph coset_graph(const CosetSpace& space, const Perm& g);
Graph coset_graph(const PermGroup& big, const PermGroup& k, const Perm& g);

// Cayley graph of G with connection set S: vertices are the elements of G
// in chain-transversal order, x ~ y iff y x^-1 in S.  Preconditions:
// identity not in S, S closed under inverse, S a subset of G.
struct CayleyGraph {
  Graph graph;
  std::vector<Perm> vertex_elements;  // vertex i is this group element
};
CayleyGraph cayley_graph(const PermGroup& g, const std::vector<Perm>& s,
                         uint64_t vertex_cap = 20000);

// Brute-force oracle: builds the coset graph straight from the definition
// by enumerating G (|G| small).  Test use.
Graph coset_graph_by_definition(const PermGroup& g, const PermGroup& k,
                                const Perm& elem, uint64_t cap);

}  // namespace cayley
