// Permutation groups backed by a base and strong generating set.
//
// The stabilizer chain is built with a deterministic Schreier-Sims: base
// points are chosen as the smallest point moved by the generator that
// forces a new level (prescribed base prefixes take precedence), orbits
// are BFS in generator order, and the finished chain is always re-verified
// by checking that every Schreier generator sifts to the identity.
// Identical generator lists therefore produce identical chains, orders and
// orbit labelings on every run.
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "cayley/perm.hpp"

namespace cayley {

class PermGroup {
 public:
  // Trivial group on zero points; use the factories for anything real.
  PermGroup() = default;

  // Builds a group from generators sharing one degree.  Throws on an empty
  // generator list or mixed degrees.
  static PermGroup from_generators(const std::vector<Perm>& gens);

  // Same, but the base starts with the given points (in order) before the
  // automatic rule takes over.  Points may have trivial orbits.
  static PermGroup with_base_prefix(const std::vector<Perm>& gens,
                                    const std::vector<uint32_t>& prefix);

  static PermGroup trivial(uint32_t degree);

  uint32_t degree() const { return degree_; }
  uint64_t order() const;

  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }
  std::vector<uint32_t> base() const;

  bool is_trivial() const { return order() == 1; }

  bool contains(const Perm& p) const;

  // Residue of sifting p through the chain; p is a member iff the residue
  // is the identity.
  Perm sift(const Perm& p) const;

  // G-orbits on {0, ..., degree-1}: each block sorted ascending, blocks
  // ordered by minimum element.
  std::vector<std::vector<uint32_t>> orbits() const;
  bool is_transitive() const;

  // Subgroup fixing pt; order is |G| / |orbit(pt)|.
  PermGroup point_stabilizer(uint32_t pt) const;

  // Subgroup fixing every listed point.
  PermGroup pointwise_stabilizer(const std::vector<uint32_t>& pts) const;

  // Chain access.
  size_t num_levels() const { return levels_.size(); }
  uint32_t base_point(size_t level) const { return levels_[level].base; }
  const std::vector<uint32_t>& level_orbit(size_t level) const {
    return levels_[level].orbit;
  }
  // Element of G mapping base_point(level) to pt (pt must lie in the level
  // orbit).
  Perm transversal_element(size_t level, uint32_t pt) const;

  // Orbit of pt under the whole group, in BFS discovery order.
  std::vector<uint32_t> orbit_of(uint32_t pt) const;

  // Visits every element in chain-transversal order (deterministic).
  // Returns false if the order exceeds cap (in which case fn was never
  // called).
  bool for_each_element(const std::function<void(const Perm&)>& fn,
                        uint64_t cap = UINT64_MAX) const;
  std::vector<Perm> elements(uint64_t cap = UINT64_MAX) const;

  // Deterministic chain verification; throws on any inconsistency.
  void verify() const;

 private:
  struct Level {
    uint32_t base = 0;
    std::vector<uint32_t> gen_ids;       // strong generators active here
    std::vector<uint32_t> orbit;         // BFS order, orbit[0] == base
    std::vector<uint32_t> pos;           // point -> index in orbit, or npos
    std::vector<uint32_t> parent;        // point -> previous orbit point
    std::vector<uint32_t> via;           // point -> strong gen id used
  };

  void build(const std::vector<Perm>& gens, const std::vector<uint32_t>& prefix,
             bool allow_empty);
  void rebuild_orbit(size_t level);
  void extend_orbit(size_t level);
  void tree_path(size_t level, uint32_t pt, std::vector<uint32_t>& path) const;
  void divide_by_transversal(size_t level, uint32_t pt, std::vector<uint32_t>& img,
                             std::vector<uint32_t>& path) const;
  std::pair<Perm, size_t> strip(Perm g, size_t from_level) const;
  void schreier_sims(size_t level);
  bool add_level(const Perm& witness);
  std::vector<uint32_t> prefix_;
  size_t prefix_used_ = 0;

  uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> strong_;
  std::vector<Perm> strong_inv_;
  // deque: levels must stay put while recursion appends new ones
  std::deque<Level> levels_;
};

}  // namespace cayley
