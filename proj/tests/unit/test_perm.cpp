#include <doctest.h>

#include "cayley/error.hpp"
#include "cayley/perm.hpp"
#include "support/oracles.hpp"

using namespace cayley;
using cayley::testing::Rng;
using cayley::testing::cyc;
using cayley::testing::random_perm;

TEST_CASE("compose basics") {
  // An involution squares to the identity.
  Perm t = cyc(4, {{0, 1}});
  CHECK(compose(t, t).is_identity());

  // Left-to-right convention: compose(p, q) applies p first.  In classical
  // right-to-left notation (1 2 3) o (1 2) = (1 3), i.e. apply (1 2) first.
  Perm p123 = cyc(3, {{0, 1, 2}});
  Perm p12 = cyc(3, {{0, 1}});
  CHECK(compose(p12, p123) == cyc(3, {{0, 2}}));
  CHECK(compose(p123, p12) == cyc(3, {{1, 2}}));

  // Identity laws on random permutations.
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    Perm p = random_perm(rng, 12);
    CHECK(compose(p, Perm(12)) == p);
    CHECK(compose(Perm(12), p) == p);
  }

  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(Perm(5)).is_identity());
  CHECK(inverse(cyc(3, {{0, 1, 2}})) == cyc(3, {{0, 2, 1}}));
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    Perm p = random_perm(rng, 24);
    CHECK(inverse(inverse(p)) == p);
    CHECK(compose(p, inverse(p)).is_identity());
  }
}

TEST_CASE("conjugation convention") {
  // h^g = g^-1 h g: point images satisfy (i^g)^(h^g) = (i^h)^g.
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Perm h = random_perm(rng, 10);
    Perm g = random_perm(rng, 10);
    Perm hg = conjugate(h, g);
    CHECK(hg == compose(compose(inverse(g), h), g));
    for (uint32_t pt = 0; pt < 10; ++pt) CHECK(hg[g[pt]] == g[h[pt]]);
  }
}

TEST_CASE("cycle type and order") {
  Perm id12(12);
  CHECK(id12.cycle_type() == std::vector<uint32_t>(12, 1));
  CHECK(id12.num_fixed_points() == 12);

  Perm dbl = cyc(4, {{0, 1}, {2, 3}});
  CHECK(dbl.cycle_type() == std::vector<uint32_t>{2, 2});
  CHECK(dbl.num_fixed_points() == 0);
  CHECK(dbl.order() == 2);

  Perm mixed = cyc(9, {{0, 1, 2, 3}, {4, 5}});
  CHECK(mixed.order() == 4);
  CHECK(mixed.is_two_element());
  CHECK(cyc(6, {{0, 1, 2}, {3, 4}}).order() == 6);
  CHECK_FALSE(cyc(6, {{0, 1, 2}}).is_two_element());
}

TEST_CASE("power") {
  Perm c = cyc(5, {{0, 1, 2, 3, 4}});
  CHECK(power(c, 5).is_identity());
  CHECK(power(c, 4) == inverse(c));
  CHECK(power(c, 0).is_identity());
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Perm(std::vector<uint32_t>{0, 0, 1}), Error);
  CHECK_THROWS_AS(Perm(std::vector<uint32_t>{0, 3}), Error);
}

TEST_CASE("cycle string") {
  CHECK(Perm(3).to_cycle_string() == "()");
  CHECK(cyc(4, {{0, 1, 2}}).to_cycle_string() == "(0 1 2)");
}
