// Brute-force reference implementations for small groups.
//
// These enumerate elements outright and serve as the documented fallback
// for |G| <= 1e5 and as the independent oracle in the test suite.  They
// share no code with the chain-based or backtracking implementations they
// certify.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

// Closure of the generated set; throws kCapExceeded past cap elements.
// Result sorted in image-array lexicographic order.
std::vector<Perm> naive_closure(const std::vector<Perm>& gens, uint64_t cap);

uint64_t naive_order(const std::vector<Perm>& gens, uint64_t cap);

bool naive_contains(const std::vector<Perm>& gens, const Perm& p, uint64_t cap);

// N_G(H) by scanning every element of G.
PermGroup naive_normalizer(const PermGroup& g, const PermGroup& h, uint64_t cap);

PermGroup naive_centralizer(const PermGroup& g, const Perm& x, uint64_t cap);

// Some element of G conjugating H1 onto H2, scanning every element.
std::optional<Perm> naive_transporter(const PermGroup& g, const PermGroup& h1,
                                      const PermGroup& h2, uint64_t cap);

}  // namespace cayley
