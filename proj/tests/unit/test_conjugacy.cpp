#include <doctest.h>

#include "cayley/brute.hpp"
#include "cayley/conjugacy.hpp"
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

TEST_CASE("normalizer known values") {
  auto s4 = sym(4);
  auto a4 = PermGroup::from_generators({cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  CHECK(normalizer(s4, a4).order() == 24);  // A4 normal in S4
  auto c4 = PermGroup::from_generators({cyc(4, {{0, 1, 2, 3}})});
  CHECK(normalizer(s4, c4).order() == 8);
  CHECK(normalizer(s4, c4).order() == naive_normalizer(s4, c4, 100).order());
  CHECK_THROWS_AS(normalizer(a4, s4), Error);  // not a subgroup
}

TEST_CASE("normalizer matches brute force on random groups") {
  Rng rng(13);
  int done = 0;
  while (done < 25) {
    PermGroup g = cayley::testing::random_small_group(rng, 8, 2000);
    if (g.order() < 4) continue;
    // random cyclic subgroup
    auto els = g.elements(2000);
    const Perm& x = els[rng.below(els.size())];
    if (x.is_identity()) continue;
    PermGroup h = PermGroup::from_generators({x});
    PermGroup fast = normalizer(g, h);
    PermGroup brute = naive_normalizer(g, h, 2000);
    CHECK(fast.order() == brute.order());
    for (const Perm& n : fast.generators()) CHECK(brute.contains(n));
    ++done;
  }
}

TEST_CASE("transporter") {
  auto s4 = sym(4);
  auto h1 = PermGroup::from_generators({cyc(4, {{0, 1}})});
  // identity transports a subgroup to itself
  auto self = transporter(s4, h1, h1);
  REQUIRE(self.has_value());
  auto h2 = PermGroup::from_generators({cyc(4, {{2, 3}})});
  auto t = transporter(s4, h1, h2);
  REQUIRE(t.has_value());
  for (const Perm& x : h1.generators()) CHECK(h2.contains(conjugate(x, *t)));
  // different cycle types: definite none
  auto h3 = PermGroup::from_generators({cyc(4, {{0, 1}, {2, 3}})});
  CHECK_FALSE(transporter(s4, h1, h3).has_value());
}

TEST_CASE("transporter none-verdicts match brute force") {
  Rng rng(17);
  int done = 0;
  while (done < 20) {
    PermGroup g = cayley::testing::random_small_group(rng, 7, 1500);
    auto els = g.elements(1500);
    if (els.size() < 6) continue;
    PermGroup h1 = PermGroup::from_generators({els[rng.below(els.size())]});
    PermGroup h2 = PermGroup::from_generators({els[rng.below(els.size())]});
    if (h1.is_trivial() || h2.is_trivial()) continue;
    auto fast = transporter(g, h1, h2);
    auto brute = naive_transporter(g, h1, h2, 1500);
    CHECK(fast.has_value() == brute.has_value());
    if (fast)
      for (const Perm& x : h1.generators()) CHECK(h2.contains(conjugate(x, *fast)));
    ++done;
  }
}

TEST_CASE("centralizer") {
  auto s4 = sym(4);
  Perm dbl = cyc(4, {{0, 1}, {2, 3}});
  CHECK(centralizer(s4, dbl).order() == 8);
  CHECK(centralizer(s4, dbl).order() == naive_centralizer(s4, dbl, 100).order());
  auto s6 = sym(6);
  CHECK(centralizer(s6, cyc(6, {{0, 1, 2}})).order() == 18);
}

TEST_CASE("element transporter distinguishes alternating classes") {
  auto a5 = PermGroup::from_generators({cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
  Perm five = cyc(5, {{0, 1, 2, 3, 4}});
  CHECK_FALSE(element_transporter(a5, five, compose(five, five)).has_value());
  CHECK(element_transporter(a5, five, inverse(five)).has_value());
}

TEST_CASE("conjugacy class") {
  auto s4 = sym(4);
  CHECK(conjugacy_class(s4, cyc(4, {{0, 1}}), 100).size() == 6);
  CHECK(conjugacy_class(s4, cyc(4, {{0, 1, 2, 3}}), 100).size() == 6);
  CHECK_THROWS_AS(conjugacy_class(s4, cyc(4, {{0, 1}}), 3), Error);
}

TEST_CASE("set stabilizer") {
  auto s4 = sym(4);
  auto res = set_stabilizer(s4, {0, 1}, 100);
  CHECK(res.orbit.size() == 6);
  CHECK(res.stabilizer.order() == 4);
  for (const Perm& g : res.stabilizer.generators()) {
    std::vector<uint32_t> img{g[0], g[1]};
    std::sort(img.begin(), img.end());
    CHECK(img == std::vector<uint32_t>{0, 1});
  }
}
