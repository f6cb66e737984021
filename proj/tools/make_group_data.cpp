// Regenerates the generator files under data/ from first principles.
//
// The degree-24 groups come out of the extended binary Golay code: the code
// is built from a degree-11 factor of x^23 - 1 over GF(2), its weight-8
// words give the octads, and the automorphism group of the point/octad
// incidence graph is computed with the library's own search.  Stabilizing a
// dodecad (or a dodecad pair, via a marker vertex) cuts the chain down to
// the smaller groups.  Every emitted file is re-verified against its target
// order before it is written.
//
// Usage: make-group-data <output-dir>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cayley/canonical.hpp"
#include "cayley/error.hpp"
#include "cayley/graph.hpp"
#include "cayley/group_data.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

using namespace cayley;

namespace {

// Polynomials over GF(2) as bit masks, lowest degree first.
uint64_t poly_mod(uint64_t a, uint64_t m) {
  int dm = 63 - __builtin_clzll(m);
  while (a >= (uint64_t{1} << dm)) {
    int da = 63 - __builtin_clzll(a);
    a ^= m << (da - dm);
  }
  return a;
}

// Smallest irreducible degree-11 factor of (x^23 + 1) / (x + 1).
uint64_t golay_generator_polynomial() {
  uint64_t x23_1 = (uint64_t{1} << 23) | 1;
  for (uint64_t g = (uint64_t{1} << 11) | 1; g < (uint64_t{1} << 12); g += 2) {
    if (poly_mod(x23_1, g) != 0) continue;
    return g;
  }
  throw Error(ErrorKind::kVerification, "no degree-11 factor of x^23+1 found");
}

// Extended binary Golay code as 4096 bit masks over 24 points.
std::vector<uint32_t> golay_codewords() {
  uint64_t g = golay_generator_polynomial();
  std::vector<uint32_t> basis;
  for (int i = 0; i < 12; ++i) {
    uint32_t word = static_cast<uint32_t>(g << i) & 0x7fffff;
    if (__builtin_popcount(word) % 2) word |= 1u << 23;  // parity bit
    basis.push_back(word);
  }
  std::vector<uint32_t> code{0};
  for (uint32_t b : basis) {
    size_t sz = code.size();
    for (size_t i = 0; i < sz; ++i) code.push_back(code[i] ^ b);
  }
  std::map<int, int> weight_dist;
  for (uint32_t w : code) ++weight_dist[__builtin_popcount(w)];
  std::map<int, int> expect{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  if (weight_dist != expect)
    throw Error(ErrorKind::kVerification, "Golay weight distribution is wrong");
  return code;
}

std::vector<uint32_t> mask_to_points(uint32_t mask) {
  std::vector<uint32_t> pts;
  for (uint32_t p = 0; p < 24; ++p)
    if (mask & (1u << p)) pts.push_back(p);
  return pts;
}

// Incidence graph on 24 point vertices and 759 octad vertices, plus
// optional marker vertices tied to the two halves of a dodecad.
Graph octad_graph(const std::vector<uint32_t>& octads, uint32_t dodecad_mask,
                  int markers) {
  uint32_t n = 24 + static_cast<uint32_t>(octads.size()) + markers;
  Graph g(n);
  for (uint32_t oi = 0; oi < octads.size(); ++oi)
    for (uint32_t p : mask_to_points(octads[oi])) g.add_edge(p, 24 + oi);
  uint32_t m0 = 24 + static_cast<uint32_t>(octads.size());
  if (markers >= 1)
    for (uint32_t p : mask_to_points(dodecad_mask)) g.add_edge(m0, p);
  if (markers >= 2) {
    for (uint32_t p : mask_to_points(~dodecad_mask & 0xffffff)) g.add_edge(m0 + 1, p);
    g.add_edge(m0, m0 + 1);
  }
  return g;
}

// Automorphisms of the incidence graph restricted to the 24 points.
std::vector<Perm> point_action(const Graph& g) {
  PermGroup aut = automorphism_group(g, 1000);
  std::vector<Perm> out;
  for (const Perm& a : aut.generators()) {
    std::vector<uint32_t> img(24);
    for (uint32_t p = 0; p < 24; ++p) {
      if (a[p] >= 24)
        throw Error(ErrorKind::kVerification, "automorphism mixes points and octads");
      img[p] = a[p];
    }
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

std::vector<Perm> restrict_to(const std::vector<Perm>& gens,
                              const std::vector<uint32_t>& points) {
  std::vector<uint32_t> where(gens.at(0).degree(), UINT32_MAX);
  for (uint32_t i = 0; i < points.size(); ++i) where[points[i]] = i;
  std::vector<Perm> out;
  for (const Perm& g : gens) {
    std::vector<uint32_t> img(points.size());
    for (uint32_t i = 0; i < points.size(); ++i) {
      uint32_t q = g[points[i]];
      if (where[q] == UINT32_MAX)
        throw Error(ErrorKind::kVerification, "point set is not invariant");
      img[i] = where[q];
    }
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

// Tries to shrink the generating set to two short products.
std::vector<Perm> two_generators(const std::vector<Perm>& gens, uint64_t order) {
  std::vector<Perm> pool = gens;
  size_t base = gens.size();
  for (size_t i = 0; i < base; ++i)
    for (size_t j = 0; j < base; ++j)
      if (i != j && pool.size() < 40) pool.push_back(compose(gens[i], gens[j]));
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      std::vector<Perm> pair{pool[i], pool[j]};
      if (pool[i].is_identity() || pool[j].is_identity()) continue;
      if (PermGroup::from_generators(pair).order() == order) return pair;
    }
  return gens;
}

void emit(const std::string& dir, const std::string& name,
          const std::string& comment, uint64_t order, bool transitive,
          const std::vector<Perm>& gens_in) {
  std::vector<Perm> gens = two_generators(gens_in, order);
  PermGroup g = PermGroup::from_generators(gens);
  if (g.order() != order)
    throw Error(ErrorKind::kVerification, name + ": order check failed");
  if (g.is_transitive() != transitive)
    throw Error(ErrorKind::kVerification, name + ": transitivity check failed");
  write_generator_file(dir + "/" + name + ".grp", comment, order, gens);
  std::printf("%-12s degree %2u order %12llu %s\n", name.c_str(), gens[0].degree(),
              static_cast<unsigned long long>(order), transitive ? "transitive" : "");
}

Perm cycle_perm(uint32_t n, const std::vector<std::vector<uint32_t>>& cycles) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = i;
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(std::move(img));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: make-group-data <output-dir>\n");
    return 2;
  }
  std::string dir = argv[1];
  try {
    std::vector<uint32_t> code = golay_codewords();
    std::vector<uint32_t> octads, dodecads;
    for (uint32_t w : code) {
      int wt = __builtin_popcount(w);
      if (wt == 8) octads.push_back(w);
      if (wt == 12) dodecads.push_back(w);
    }
    std::printf("Golay code verified: %zu octads, %zu dodecads\n", octads.size(),
                dodecads.size());

    // Relabel so the reference dodecad becomes {0..11}.
    uint32_t dodecad = dodecads.front();
    std::vector<uint32_t> relab(24);
    {
      uint32_t next = 0;
      for (uint32_t p = 0; p < 24; ++p)
        if (dodecad & (1u << p)) relab[p] = next++;
      for (uint32_t p = 0; p < 24; ++p)
        if (!(dodecad & (1u << p))) relab[p] = next++;
    }
    Perm pi(relab);
    auto relabeled = [&](std::vector<Perm> gens) {
      for (Perm& g : gens) g = conjugate(g, pi);
      return gens;
    };

    std::vector<Perm> m24 = relabeled(point_action(octad_graph(octads, 0, 0)));
    std::vector<Perm> m12_24 = relabeled(point_action(octad_graph(octads, dodecad, 1)));
    std::vector<Perm> m12_2 = relabeled(point_action(octad_graph(octads, dodecad, 2)));

    emit(dir, "M24.deg24", "automorphisms of the octad incidence system", 244823040ull,
         true, m24);
    emit(dir, "M12.deg24", "octad-system automorphisms fixing the reference dodecad {1..12}",
         95040ull, false, m12_24);
    emit(dir, "M12.2.deg24",
         "octad-system automorphisms preserving the dodecad pair {1..12}/{13..24}",
         190080ull, true, m12_2);

    std::vector<uint32_t> first12(12), last12(12);
    for (uint32_t i = 0; i < 12; ++i) {
      first12[i] = i;
      last12[i] = 12 + i;
    }
    PermGroup m12_group = PermGroup::from_generators(m12_24);
    emit(dir, "M12.deg12", "dodecad stabilizer acting on the dodecad", 95040ull, true,
         restrict_to(m12_24, first12));

    PermGroup m11_24 = m12_group.point_stabilizer(0);
    emit(dir, "M11.deg24", "point stabilizer inside M12.deg24", 7920ull, false,
         m11_24.generators().empty() ? m11_24.strong_generators()
                                     : m11_24.generators());
    std::vector<uint32_t> rest11(11);
    for (uint32_t i = 0; i < 11; ++i) rest11[i] = 1 + i;
    emit(dir, "M11.deg11", "M11.deg24 on the 11 remaining dodecad points", 7920ull, true,
         restrict_to(m11_24.generators(), rest11));
    emit(dir, "M11.deg12", "M11.deg24 on the complementary dodecad", 7920ull, true,
         restrict_to(m11_24.generators(), last12));

    std::vector<uint32_t> a11_cycle(11), a12_cycle(11), s12_cycle(12);
    for (uint32_t i = 0; i < 11; ++i) a11_cycle[i] = i;
    for (uint32_t i = 0; i < 11; ++i) a12_cycle[i] = i + 1;
    for (uint32_t i = 0; i < 12; ++i) s12_cycle[i] = i;
    emit(dir, "A11.deg11", "alternating group", 19958400ull, true,
         {cycle_perm(11, {{0, 1, 2}}), cycle_perm(11, {a11_cycle})});
    emit(dir, "A12.deg12", "alternating group", 239500800ull, true,
         {cycle_perm(12, {{0, 1, 2}}), cycle_perm(12, {a12_cycle})});
    emit(dir, "S12.deg12", "symmetric group", 479001600ull, true,
         {cycle_perm(12, {{0, 1}}), cycle_perm(12, {s12_cycle})});

    if (dir == data_directory()) {
      for (const CatalogEntry& e : catalog()) load_group(e.name);
      std::printf("catalog reload check passed\n");
    }
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 0;
}
