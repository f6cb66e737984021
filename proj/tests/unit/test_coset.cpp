#include <doctest.h>

#include "cayley/canonical.hpp"
#include "cayley/coset.hpp"
#include "cayley/error.hpp"
#include "support/oracles.hpp"

using namespace cayley;
using cayley::testing::Rng;
using cayley::testing::cyc;

namespace {
PermGroup sym(uint32_t n) {
  std::vector<uint32_t> full(n);
  for (uint32_t i = 0; i < n; ++i) full[i] = i;
  return PermGroup::from_generators({cyc(n, {{0, 1}}), cyc(n, {full})});
}
}  // namespace

TEST_CASE("coset action basics") {
  auto s4 = sym(4);
  auto s3 = s4.point_stabilizer(3);
  auto [space, act] = coset_action(s4, s3);
  CHECK(space.index() == 4);
  CHECK(space.faithful());
  CHECK(space.representatives()[0].is_identity());
  // index_of(k * rep_i) == i
  Rng rng(3);
  auto kels = space.subgroup_elements();
  for (uint32_t i = 0; i < 4; ++i)
    CHECK(space.index_of(compose(kels[rng.below(kels.size())],
                                 space.representatives()[i])) == i);
  // the action is equivalent to the natural one: same orbit sizes, faithful
  CHECK(space.image_group().order() == 24);

  auto a4 = PermGroup::from_generators({cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  auto space2 = CosetSpace::build(s4, a4);
  CHECK(space2.index() == 2);
  CHECK_FALSE(space2.faithful());
}

TEST_CASE("coset graph matches the definition oracle") {
  auto s4 = sym(4);
  auto s3 = s4.point_stabilizer(3);
  Perm g = cyc(4, {{2, 3}});
  Graph gamma = coset_graph(s4, s3, g);
  CHECK(gamma.vertex_count() == 4);
  CHECK(gamma.edge_count() == 6);  // K4
  CHECK(gamma == coset_graph_by_definition(s4, s3, g, 100));

  // vertex 0 has stabilizer exactly K under the action
  auto space = CosetSpace::build(s4, s3);
  CHECK(space.image_group().point_stabilizer(0).order() == s3.order());
}

TEST_CASE("coset graph preconditions") {
  auto s4 = sym(4);
  auto s3 = s4.point_stabilizer(3);
  CHECK_THROWS_WITH_AS(coset_graph(s4, s3, cyc(4, {{0, 1}})),
                       doctest::Contains("normalizes"), Error);  // g in K
  auto c2 = PermGroup::from_generators({cyc(4, {{0, 1}})});
  CHECK_THROWS_WITH_AS(coset_graph(s4, c2, cyc(4, {{0, 1, 2, 3}})),
                       doctest::Contains("g^2"), Error);
  auto s5 = sym(5);
  CHECK_THROWS_AS(CosetSpace::build(s4, s5.point_stabilizer(0)), Error);
}

TEST_CASE("neighbor set depends only on the double coset") {
  Rng rng(23);
  auto s5 = sym(5);
  auto k = s5.point_stabilizer(4);  // S4
  Perm g = cyc(5, {{3, 4}});
  Graph base = coset_graph(s5, k, g);
  auto kels = k.elements(100);
  for (int t = 0; t < 5; ++t) {
    Perm g2 = compose(compose(kels[rng.below(kels.size())], g),
                      kels[rng.below(kels.size())]);
    if (k.contains(compose(g2, g2)) && !k.contains(conjugate(k.generators()[0], g2)))
      CHECK(coset_graph(s5, k, g2) == base);
  }
}

TEST_CASE("small coset graphs match the oracle") {
  Rng rng(31);
  int done = 0;
  while (done < 10) {
    PermGroup g = cayley::testing::random_small_group(rng, 7, 400);
    if (g.order() < 8) continue;
    auto els = g.elements(400);
    // random proper subgroup
    PermGroup k = PermGroup::from_generators({els[rng.below(els.size())]});
    if (k.order() == g.order() || k.is_trivial()) continue;
    // feasible-ish element
    Perm cand(g.degree());
    bool found = false;
    for (int t = 0; t < 200 && !found; ++t) {
      const Perm& e = els[rng.below(els.size())];
      if (e.is_identity() || !k.contains(compose(e, e))) continue;
      bool normalizes = true;
      for (const Perm& x : k.generators())
        if (!k.contains(conjugate(x, e))) normalizes = false;
      if (normalizes) continue;
      cand = e;
      found = true;
    }
    if (!found) continue;
    CHECK(coset_graph(g, k, cand) == coset_graph_by_definition(g, k, cand, 400));
    ++done;
  }
}

TEST_CASE("cayley graphs") {
  auto c5 = PermGroup::from_generators({cyc(5, {{0, 1, 2, 3, 4}})});
  Perm c = cyc(5, {{0, 1, 2, 3, 4}});
  auto cay = cayley_graph(c5, {c, inverse(c)});
  CHECK(cay.graph.vertex_count() == 5);
  CHECK(cay.graph.edge_count() == 5);
  CHECK(cay.graph.is_connected());

  // Cay(S3, all transpositions) is K_{3,3}
  auto s3 = sym(3);
  auto k33 = cayley_graph(s3, {cyc(3, {{0, 1}}), cyc(3, {{0, 2}}), cyc(3, {{1, 2}})});
  Graph reference(6);
  for (uint32_t a = 0; a < 3; ++a)
    for (uint32_t b = 3; b < 6; ++b) reference.add_edge(a, b);
  CHECK(are_isomorphic(k33.graph, reference).has_value());

  // vertex transitivity under right translation
  Rng rng(5);
  auto els = s3.elements(10);
  std::vector<uint32_t> index_of(6);
  for (uint32_t i = 0; i < 6; ++i)
    for (uint32_t j = 0; j < 6; ++j)
      if (k33.vertex_elements[j] == els[i]) break;
  for (int t = 0; t < 5; ++t) {
    const Perm& g = els[rng.below(els.size())];
    // translation x -> x*g permutes vertices and preserves edges
    auto pos = [&](const Perm& p) {
      for (uint32_t j = 0; j < k33.vertex_elements.size(); ++j)
        if (k33.vertex_elements[j] == p) return j;
      return UINT32_MAX;
    };
    for (auto [u, v] : k33.graph.edges())
      CHECK(k33.graph.adjacent(pos(compose(k33.vertex_elements[u], g)),
                               pos(compose(k33.vertex_elements[v], g))));
  }

  // preconditions
  CHECK_THROWS_AS(cayley_graph(s3, {Perm(3)}), Error);                 // identity
  CHECK_THROWS_AS(cayley_graph(s3, {cyc(3, {{0, 1, 2}})}), Error);     // not S = S^-1
  CHECK_THROWS_AS(cayley_graph(c5, {cyc(5, {{0, 1}})}), Error);        // outside G
}
