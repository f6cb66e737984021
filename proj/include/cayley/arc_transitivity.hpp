// s-arc counting and orbit analysis under a group action, local actions on
// neighborhoods, and Burnside orbit counts.
//
// An s-arc is a vertex sequence (v_0, ..., v_s) with consecutive vertices
// adjacent and no immediate backtracking.  Arc orbits are computed by
// union-find over the arc table under the generator images; s is capped at
// 3 throughout.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cayley/coset.hpp"
#include "cayley/graph.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

struct ArcOrbitProfile {
  uint64_t arc_count[4] = {0, 0, 0, 0};
  uint64_t orbit_count[4] = {0, 0, 0, 0};
};

// (number of s-arcs, number of orbits of the action on them); validates on
// the generators that the action preserves adjacency.
std::pair<uint64_t, uint64_t> arc_orbit_count(const Graph& g,
                                              const GroupAction& act, int s);

ArcOrbitProfile arc_profile(const Graph& g, const GroupAction& act);

// Permutation group induced on adj(v) by the stabilizer of v; the
// stabilizer comes from a chain rebased to start at v.
PermGroup local_action(const Graph& g, const GroupAction& act, uint32_t v);

// Largest s in 0..3 with one arc orbit, or -1 if not even vertex-transitive.
int s_transitivity(const Graph& g, const GroupAction& act);

// (1/|K|) sum of fixed points over K; must be an integer (checked).
uint64_t burnside_orbit_count(const PermGroup& k, uint64_t cap = 100000);

// Brute-force arc-orbit oracle: enumerates every group element (small
// groups only) and every arc.  Test use.
std::pair<uint64_t, uint64_t> arc_orbit_count_brute(const Graph& g,
                                                    const GroupAction& act,
                                                    int s, uint64_t group_cap);

}  // namespace cayley
