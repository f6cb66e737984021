#include <doctest.h>

#include "cayley/canonical.hpp"
#include "cayley/error.hpp"
#include "support/oracles.hpp"

using namespace cayley;
using cayley::testing::Rng;
using cayley::testing::cycle_graph;
using cayley::testing::complete_graph;
using cayley::testing::petersen_graph;
using cayley::testing::random_graph;
using cayley::testing::random_labeling;

TEST_CASE("refinement") {
  // a regular graph keeps a single color
  auto colors = refine({cycle_graph(5), std::vector<uint32_t>(5, 0)});
  for (uint32_t c : colors) CHECK(c == colors[0]);

  // path on 3 vertices: endpoints equal, middle differs
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  auto pc = refine({p3, {0, 0, 0}});
  CHECK(pc[0] == pc[2]);
  CHECK(pc[0] != pc[1]);

  // star K_{1,4}: two cells
  Graph star(5);
  for (uint32_t i = 1; i < 5; ++i) star.add_edge(0, i);
  auto sc = refine({star, std::vector<uint32_t>(5, 0)});
  CHECK(*std::max_element(sc.begin(), sc.end()) == 1);

  CHECK_THROWS_AS(refine({p3, {0, 0}}), Error);
}

TEST_CASE("canonical form is a relabeling invariant") {
  Graph pet = petersen_graph();
  CanonicalForm base = canonical_form(pet);
  // the stored relabeling really produces the canonical edge list
  Graph relabeled = relabel(pet, base.relabeling.images());
  CHECK(relabeled.edges() == base.canonical_edge_list);
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    Graph moved = relabel(pet, random_labeling(rng, 10));
    CHECK(canonical_form(moved) == base);
  }
}

TEST_CASE("non-isomorphic graphs get different forms") {
  Graph two_k3(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
    two_k3.add_edge(a, b);
  CHECK_FALSE(canonical_form(cycle_graph(6)) == canonical_form(two_k3));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), two_k3).has_value());
}

TEST_CASE("isomorphism finds an explicit bijection") {
  Graph pet = petersen_graph();
  Rng rng(33);
  Graph moved = relabel(pet, random_labeling(rng, 10));
  auto iso = are_isomorphic(pet, moved);
  REQUIRE(iso.has_value());
  for (auto [u, v] : pet.edges()) CHECK(moved.adjacent((*iso)[u], (*iso)[v]));
}

TEST_CASE("automorphism groups of known graphs") {
  CHECK(automorphism_group(cycle_graph(5)).order() == 10);
  CHECK(automorphism_group(complete_graph(4)).order() == 24);
  PermGroup pet_aut = automorphism_group(petersen_graph());
  CHECK(pet_aut.order() == 120);
  CHECK(pet_aut.order() == brute_force_automorphism_count(petersen_graph()));
  // soundness: generators preserve edges and non-edges
  Graph pet = petersen_graph();
  for (const Perm& a : pet_aut.generators())
    for (uint32_t u = 0; u < 10; ++u)
      for (uint32_t v = u + 1; v < 10; ++v)
        CHECK(pet.adjacent(u, v) == pet.adjacent(a[u], a[v]));
}

TEST_CASE("automorphism count matches brute force on random graphs") {
  Rng rng(55);
  for (int t = 0; t < 150; ++t) {
    uint32_t n = 2 + static_cast<uint32_t>(rng.below(8));
    Graph g = random_graph(rng, n, 20 + rng.below(60));
    CHECK(automorphism_group(g).order() == brute_force_automorphism_count(g));
  }
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(automorphism_group(cycle_graph(30), 20), Error);
}

TEST_CASE("invariant signature") {
  InvariantSignature k4 = invariant_signature(complete_graph(4));
  CHECK(k4.girth == 3);
  CHECK(k4.cycle_counts[0] == 4);  // triangles
  InvariantSignature hex = invariant_signature(cycle_graph(6));
  CHECK(hex.girth == 6);
  CHECK(hex.degree_sequence == std::vector<uint32_t>(6, 2));
  CHECK(hex.cycle_counts[3] == 1);  // one 6-cycle
  // acyclic graphs report girth 0
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(invariant_signature(path).girth == 0);
  // invariance under relabeling
  Rng rng(77);
  Graph pet = petersen_graph();
  InvariantSignature base = invariant_signature(pet);
  CHECK(base.girth == 5);
  CHECK(base.cycle_counts[2] == 12);  // pentagons
  for (int t = 0; t < 10; ++t)
    CHECK(invariant_signature(relabel(pet, random_labeling(rng, 10))) == base);
}
