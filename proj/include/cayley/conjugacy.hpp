// Conjugacy searches inside a permutation group: normalizers, centralizers,
// subgroup transporters, conjugacy classes and set stabilizers.
//
// The search engine treats a conjugation constraint x_i^g = y_i as a
// point-map CSP: choosing the image of one point propagates along the
// cycles of the x_i through the whole <x_1, ..., x_m>-orbit, candidates are
// filtered by per-point cycle-length invariants, and a consistent map on
// the support is completed to a group element by walking a stabilizer
// chain whose base starts with the support.  Results are verified before
// they are returned.  naive_* (brute.hpp) is the independent oracle for
// small groups.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

// Some g in G with xs[i]^g = ys[i] for all i, or nullopt.
std::optional<Perm> transport_tuple(const PermGroup& g, const std::vector<Perm>& xs,
                                    const std::vector<Perm>& ys);

std::optional<Perm> element_transporter(const PermGroup& g, const Perm& x,
                                        const Perm& y);

PermGroup centralizer(const PermGroup& g, const Perm& x);

// N_G(H); requires H <= G.
PermGroup normalizer(const PermGroup& g, const PermGroup& h);

// Some g in G with H1^g = H2, or a definite nullopt; requires H1, H2 <= G.
std::optional<Perm> transporter(const PermGroup& g, const PermGroup& h1,
                                const PermGroup& h2);

// Conjugacy class of x under G, in BFS discovery order.
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x,
                                  uint64_t cap);

struct SetStabilizerResult {
  std::vector<std::vector<uint32_t>> orbit;  // sorted point sets, BFS order
  PermGroup stabilizer;                      // setwise stabilizer of orbit[0]
};

// Orbit of a point set under G together with the setwise stabilizer,
// via Schreier generators on the set orbit.  Throws past the cap.
SetStabilizerResult set_stabilizer(const PermGroup& g,
                                   const std::vector<uint32_t>& pts,
                                   uint64_t orbit_cap);

}  // namespace cayley
