// Permutations on {0, ..., degree-1}, the atomic group element.
//
// Composition convention is left-to-right everywhere in this library:
// compose(p, q) maps i to q(p(i)), i.e. p acts first.  Conjugation is
// h^g = g^-1 * h * g, so that point images satisfy (i^g)^(h^g) = (i^h)^g.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cayley {

class Perm {
 public:
  Perm() = default;

  // Identity on n points.
  explicit Perm(uint32_t n);

  // From an image table; must be a bijection on {0, ..., n-1}.
  explicit Perm(std::vector<uint32_t> images);

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t operator[](uint32_t point) const { return img_[point]; }
  const std::vector<uint32_t>& images() const { return img_; }

  bool is_identity() const;

  // Order of the permutation (lcm of cycle lengths).
  uint64_t order() const;

  // True if the order is a power of two (identity counts).
  bool is_two_element() const;

  uint32_t num_fixed_points() const;

  // Sorted multiset of cycle lengths covering all points (fixed points
  // contribute 1-cycles).
  std::vector<uint32_t> cycle_type() const;

  // Bitmask of moved points; degree must be <= 64.
  uint64_t moved_mask() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  // Image-array lexicographic order; the deterministic element order used
  // for tie-breaking throughout.
  bool operator<(const Perm& o) const;

  // Cycle notation, e.g. "(0 1 2)(3 4)" ; identity prints as "()".
  std::string to_cycle_string() const;

 private:
  std::vector<uint32_t> img_;
};

// Applies p then q.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// g^-1 * h * g under the left-to-right convention.
Perm conjugate(const Perm& h, const Perm& g);
Perm power(const Perm& p, uint64_t e);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

uint64_t hash_bytes(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace cayley
