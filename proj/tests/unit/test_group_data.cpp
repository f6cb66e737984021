#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cayley/conjugacy.hpp"
#include "cayley/error.hpp"
#include "cayley/group_data.hpp"
#include "support/oracles.hpp"

using namespace cayley;
using cayley::testing::cyc;

TEST_CASE("catalog is sorted and loads") {
  const auto& cat = catalog();
  for (size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].name < cat[i].name);
  bool has_m24 = false, has_m11_12 = false;
  for (const auto& e : cat) {
    if (e.name == "M24.deg24") {
      has_m24 = true;
      CHECK(e.order == 244823040ull);
    }
    if (e.name == "M11.deg12") {
      has_m11_12 = true;
      CHECK(e.order == 7920);
      CHECK(e.transitive);
    }
  }
  CHECK(has_m24);
  CHECK(has_m11_12);
  for (const auto& e : cat) {
    GroupSpec spec = load_group(e.name);
    CHECK(spec.group.order() == e.order);
    CHECK(spec.transitive == e.transitive);
    CHECK(spec.degree == e.degree);
  }
}

TEST_CASE("loader error kinds") {
  CHECK_THROWS_WITH_AS(load_group("M13.deg13"), doctest::Contains("unknown group"),
                       Error);
  // parse error
  {
    std::ofstream f("/tmp/bad1.grp");
    f << "degree 3\norder 2\n1 2\n";  // short image row
  }
  CHECK_THROWS_AS(load_group_file("/tmp/bad1.grp"), Error);
  {
    std::ofstream f("/tmp/bad2.grp");
    f << "degree 3\norder 6\n2 1 3\n";  // actual group has order 2
  }
  try {
    load_group_file("/tmp/bad2.grp");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kOrderMismatch);
  }
  {
    std::ofstream f("/tmp/bad3.grp");
    f << "degree 3\norder 2\n2 1 1\n";  // not a bijection
  }
  CHECK_THROWS_AS(load_group_file("/tmp/bad3.grp"), Error);
}

TEST_CASE("file format round trip with comments and CRLF") {
  {
    std::ofstream f("/tmp/ok1.grp");
    f << "degree 4\r\norder 4\r\n# a comment line\r\n2 1 4 3\r\n  3 4 1 2 \r\n";
  }
  GroupSpec spec = load_group_file("/tmp/ok1.grp");
  CHECK(spec.group.order() == 4);
  CHECK(spec.generators.size() == 2);
  write_generator_file("/tmp/ok2.grp", "round trip", 4, spec.generators);
  GroupSpec again = load_group_file("/tmp/ok2.grp");
  CHECK(again.generators == spec.generators);
}

TEST_CASE("degree cap enforced for catalog-style loads") {
  {
    std::ofstream f("/tmp/big.grp");
    f << "degree 100\norder 2\n";
    for (int i = 0; i < 100; ++i) f << (i == 0 ? 2 : (i == 1 ? 1 : i + 1)) << ' ';
    f << "\n";
  }
  CHECK_THROWS_AS(load_group_file("/tmp/big.grp", 64), Error);
  CHECK(load_group_file("/tmp/big.grp", 128).group.order() == 2);
}

TEST_CASE("M11 in degree 11 agrees with the M12 point stabilizer up to S12 conjugacy") {
  GroupSpec m11 = load_group("M11.deg11");
  GroupSpec m12 = load_group("M12.deg12");
  // Embed the degree-11 copy into 12 points with a fixed last point.
  std::vector<Perm> embedded;
  for (const Perm& g : m11.generators) {
    std::vector<uint32_t> img(12);
    for (uint32_t i = 0; i < 11; ++i) img[i] = g[i];
    img[11] = 11;
    embedded.push_back(Perm(img));
  }
  PermGroup h1 = PermGroup::from_generators(embedded);
  PermGroup h2 = m12.group.point_stabilizer(0);
  CHECK(h1.order() == 7920);
  CHECK(h2.order() == 7920);
  std::vector<uint32_t> twelve(12);
  for (uint32_t i = 0; i < 12; ++i) twelve[i] = i;
  PermGroup s12 = PermGroup::from_generators({cyc(12, {{0, 1}}), cyc(12, {twelve})});
  auto t = transporter(s12, h1, h2);
  REQUIRE(t.has_value());
  for (const Perm& x : h1.generators()) CHECK(h2.contains(conjugate(x, *t)));
}

TEST_CASE("degree-24 subgroup chain M11 < M12 < M12:2") {
  GroupSpec m11 = load_group("M11.deg24");
  GroupSpec m12 = load_group("M12.deg24");
  GroupSpec big = load_group("M12.2.deg24");
  CHECK(m11.group.order() * 12 == m12.group.order());
  CHECK(m12.group.order() * 2 == big.group.order());
  for (const Perm& g : m11.generators) CHECK(m12.group.contains(g));
  for (const Perm& g : m12.generators) CHECK(big.group.contains(g));
}

TEST_CASE("A12 inside S12") {
  GroupSpec a12 = load_group("A12.deg12");
  GroupSpec s12 = load_group("S12.deg12");
  CHECK(s12.group.order() == 479001600ull);
  for (const Perm& g : a12.generators) CHECK(s12.group.contains(g));
}
