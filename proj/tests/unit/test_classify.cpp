#include <doctest.h>

#include "cayley/canonical.hpp"
#include "cayley/classify.hpp"
#include "cayley/coset.hpp"
#include "cayley/error.hpp"
#include "cayley/group_data.hpp"
#include "support/oracles.hpp"

using namespace cayley;
using cayley::testing::cyc;

namespace {
PermGroup sym(uint32_t n) {
  std::vector<uint32_t> full(n);
  for (uint32_t i = 0; i < n; ++i) full[i] = i;
  return PermGroup::from_generators({cyc(n, {{0, 1}}), cyc(n, {full})});
}
}  // namespace

TEST_CASE("subgroup classes in tiny groups") {
  auto s4 = sym(4);
  auto s4_classes = find_subgroup_classes(s4, StabilizerType::kS4);
  CHECK(s4_classes.size() == 1);
  CHECK(s4_classes[0].order() == 24);
  auto a4_classes = find_subgroup_classes(s4, StabilizerType::kA4);
  CHECK(a4_classes.size() == 1);
  auto s5 = sym(5);
  // S5 has a single class of S4 subgroups (the point stabilizers)
  CHECK(find_subgroup_classes(s5, StabilizerType::kS4).size() == 1);
}

TEST_CASE("complement classes") {
  auto s4 = sym(4);
  auto a4 = PermGroup::from_generators({cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})});
  // every S4 meets A4 nontrivially
  CHECK(complement_classes(s4, a4, StabilizerType::kS4).empty());
  // S5 = S4 . C5: the point stabilizer complements nothing of order 5...
  // but A4 <= S4 <= S5 with A4 n C5 = 1 style checks are covered elsewhere;
  // here: wrong containment errors
  auto s5 = sym(5);
  CHECK_THROWS_AS(complement_classes(s4, s5, StabilizerType::kS4), Error);
}

TEST_CASE("feasible elements: strategies agree on a small case") {
  // A = S5, K = stab(4) = S4: the coset graph candidates on 5 vertices.
  auto s5 = sym(5);
  PermGroup k_grp = s5.point_stabilizer(4);
  std::vector<Perm> els = k_grp.elements(100);
  std::sort(els.begin(), els.end());
  SmallSubgroup k;
  k.elements = els;
  for (const Perm& a : els)
    for (const Perm& b : els) {
      if (a.is_identity() || b.is_identity()) continue;
      if (PermGroup::from_generators({a, b}).order() == 24) {
        k.generators = {a, b};
        break;
      }
    }
  REQUIRE(k.generators.size() == 2);
  auto direct = feasible_elements(s5, k, FeasibleStrategy::kDirectScan);
  auto anchored = feasible_elements(s5, k, FeasibleStrategy::kAnchored);
  CHECK(direct == anchored);
  CHECK_FALSE(direct.empty());
  // every returned element satisfies the defining conditions
  for (const Perm& g : direct) {
    CHECK(g.is_two_element());
    CHECK(k.contains(compose(g, g)));
    std::vector<Perm> gens = k.generators;
    gens.push_back(g);
    CHECK(PermGroup::from_generators(gens).order() == 120);
  }
}

TEST_CASE("delta orbit partition") {
  auto s4els = sym(4).elements(30);
  std::sort(s4els.begin(), s4els.end());
  SmallSubgroup v4;
  v4.elements = {Perm(4), cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}}),
                 cyc(4, {{0, 3}, {1, 2}})};
  std::sort(v4.elements.begin(), v4.elements.end());
  v4.generators = {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})};
  // a singleton normalized by K stays a singleton orbit
  auto orbits = delta_orbits(v4, {cyc(4, {{0, 1}, {2, 3}})});
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size() == 1);
  // orbits sorted by decreasing size
  auto orbits2 = delta_orbits(
      v4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}}), cyc(4, {{0, 1}, {2, 3}})});
  REQUIRE(orbits2.size() == 2);
  CHECK(orbits2[0].size() == 2);
  CHECK(orbits2[1].size() == 1);
}

TEST_CASE("extract connection set from the 5-cycle") {
  Graph pent = cayley::testing::cycle_graph(5);
  Perm rot = cyc(5, {{0, 1, 2, 3, 4}});
  PermGroup c5 = PermGroup::from_generators({rot});
  auto s = extract_connection_set(pent, c5);
  REQUIRE(s.size() == 2);
  CHECK(std::find(s.begin(), s.end(), rot) != s.end());
  CHECK(std::find(s.begin(), s.end(), inverse(rot)) != s.end());
  // a non-regular group is rejected
  PermGroup d5 = automorphism_group(pent);
  CHECK_THROWS_AS(extract_connection_set(pent, d5), Error);
}

TEST_CASE("normality check") {
  Graph pent = cayley::testing::cycle_graph(5);
  PermGroup aut = automorphism_group(pent);
  // the whole group is normal in itself
  CHECK(normality_check(aut, aut).normal);
  // the rotation subgroup is normal in the dihedral group
  PermGroup c5 = PermGroup::from_generators({cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(normality_check(aut, c5).normal);
  // a reflection subgroup is not; a witness comes back
  PermGroup refl = PermGroup::from_generators({cyc(5, {{1, 4}, {2, 3}})});
  NormalityResult res = normality_check(aut, refl);
  CHECK_FALSE(res.normal);
  REQUIRE(res.witness_automorphism.has_value());
  REQUIRE(res.witness_element.has_value());
  CHECK_FALSE(refl.contains(conjugate(*res.witness_element, *res.witness_automorphism)));
  // R must sit inside Aut
  auto s6 = sym(6);
  CHECK_THROWS_AS(normality_check(aut, PermGroup::trivial(6)), Error);
}

TEST_CASE("regularity obstruction for A4 inside the degree-12 M11") {
  GroupSpec m11 = load_group("M11.deg12");
  auto obstruction = regular_complement_obstruction(m11.group);
  CHECK_FALSE(obstruction.empty());
  for (const auto& cls : obstruction) {
    CHECK(cls.direct_orbit_count == 4);
    CHECK(cls.burnside_count == 4);
    CHECK(cls.involution_fixed_points == 4);
    CHECK(cls.order3_fixed_points == 3);
  }
}

TEST_CASE("quotient case for the degree-11 M11 runs clean") {
  SearchReport rep = run_case("m11-s4-quotient");
  CHECK(rep.verdict == "empty");
  CHECK(rep.ok());
  CHECK(rep.k_classes.size() == 1);
  verify_report_witnesses(rep);
}

TEST_CASE("case list and report serialization") {
  CHECK(case_list().size() == 9);
  CHECK_THROWS_AS(run_case("no-such-case"), Error);
  SearchReport rep = run_case("m11-a4-regularity");
  std::string json = report_to_json(rep);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("m11-a4-regularity") != std::string::npos);
  verify_report_witnesses(rep);
}
