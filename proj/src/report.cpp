#include <json.hpp>

#include "cayley/classify.hpp"

namespace cayley {

namespace {

using Json = nlohmann::ordered_json;

Json perm_to_json(const Perm& p) {
  Json arr = Json::array();
  for (uint32_t i = 0; i < p.degree(); ++i) arr.push_back(p[i] + 1);  // 1-based
  return arr;
}

Json perms_to_json(const std::vector<Perm>& ps) {
  Json arr = Json::array();
  for (const Perm& p : ps) arr.push_back(perm_to_json(p));
  return arr;
}

Json claims_to_json(const std::vector<Claim>& claims) {
  Json arr = Json::array();
  for (const Claim& c : claims) {
    Json j;
    j["name"] = c.name;
    j["expected"] = c.expected;
    j["observed"] = c.observed;
    j["ok"] = c.ok;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json case_to_json(const SearchReport& r) {
  Json j;
  j["id"] = r.spec.id;
  j["ambient"] = r.spec.ambient;
  j["point_group"] = r.spec.point_group;
  j["stabilizer_type"] = r.spec.stab_type == StabilizerType::kS4 ? "S4" : "A4";
  j["mode"] = r.spec.mode == CaseMode::kComplementSearch ? "complement-search"
                                                         : "quotient-search";
  j["require_trivial_intersection"] = r.spec.require_trivial_intersection;
  j["verdict"] = r.verdict;

  Json classes = Json::array();
  for (const SubgroupClassInfo& cls : r.k_classes) {
    Json c;
    c["order"] = cls.rep.order();
    c["class_size"] = cls.class_size;
    c["point_group_intersection"] = cls.point_group_intersection;
    c["generators"] = perms_to_json(cls.rep.generators);
    classes.push_back(std::move(c));
  }
  j["k_classes"] = std::move(classes);
  if (r.normalizer_order) j["k_normalizer_order"] = r.normalizer_order;

  Json feas = Json::array();
  for (size_t i = 0; i < r.feasible.size(); ++i) {
    Json f;
    f["class_index"] = i;
    f["count"] = r.feasible[i].size();
    f["elements"] = perms_to_json(r.feasible[i]);
    feas.push_back(std::move(f));
  }
  j["feasible"] = std::move(feas);

  Json orbs = Json::array();
  for (size_t i = 0; i < r.delta_orbit_partition.size(); ++i) {
    Json o;
    o["class_index"] = i;
    Json sizes = Json::array();
    Json members = Json::array();
    for (const auto& orbit : r.delta_orbit_partition[i]) {
      sizes.push_back(orbit.size());
      members.push_back(perms_to_json(orbit));
    }
    o["orbit_sizes"] = std::move(sizes);
    o["orbits"] = std::move(members);
    orbs.push_back(std::move(o));
  }
  j["delta_orbits"] = std::move(orbs);

  if (!r.graphs_built.empty()) {
    Json graphs = Json::array();
    for (const GraphCertificate& c : r.graphs_built) {
      Json g;
      g["label"] = c.label;
      g["coset_element"] = perm_to_json(c.coset_element);
      g["vertices"] = c.vertex_count;
      g["valency"] = c.valency;
      g["connected"] = c.connected;
      g["s_transitivity"] = c.s_transitivity;
      g["vertex_stabilizer_order"] = c.vertex_stabilizer_order;
      g["local_action_order"] = c.local_action_order;
      g["local_action_symmetric"] = c.local_action_symmetric;
      g["local_action_two_transitive"] = c.local_two_transitive;
      g["aut_order"] = c.aut_order;
      g["aut_contains_coset_action"] = c.aut_contains_action;
      g["regular_point_group_found"] = c.regular_point_group_found;
      g["connection_set_size"] = c.connection_set_size;
      g["connection_set_inverse_closed"] = c.connection_set_inverse_closed;
      g["connection_set_generates"] = c.connection_set_generates;
      g["cayley_isomorphic"] = c.cayley_isomorphic;
      g["non_normal"] = c.non_normal;
      g["certificate_hash"] = c.certificate_hash;
      graphs.push_back(std::move(g));
    }
    j["graphs_built"] = std::move(graphs);
  }

  if (!r.obstruction.empty()) {
    Json obs = Json::array();
    for (const RegularObstructionClass& cls : r.obstruction) {
      Json o;
      o["generators"] = perms_to_json(cls.rep.generators);
      o["direct_orbit_count"] = cls.direct_orbit_count;
      o["burnside_count"] = cls.burnside_count;
      o["involution_fixed_points"] = cls.involution_fixed_points;
      o["order3_fixed_points"] = cls.order3_fixed_points;
      obs.push_back(std::move(o));
    }
    j["regularity_obstruction"] = std::move(obs);
  }

  if (r.sigma.vertices) {
    Json s;
    s["ok"] = r.sigma.ok;
    s["vertices"] = r.sigma.vertices;
    s["edges_checked"] = r.sigma.edges_checked;
    if (!r.sigma.failure.empty()) s["failure"] = r.sigma.failure;
    j["sigma_isomorphism"] = std::move(s);
  }

  j["claims"] = claims_to_json(r.claims);
  j["ok"] = r.ok();
  return j;
}

}  // namespace

std::string report_to_json(const SearchReport& report, bool pretty) {
  Json j;
  j["schema"] = 1;
  j["case"] = case_to_json(report);
  return pretty ? j.dump(2) : j.dump();
}

std::string classification_to_json(const ClassificationReport& report,
                                   bool pretty) {
  Json j;
  j["schema"] = 1;
  Json cases = Json::array();
  for (const SearchReport& r : report.cases) cases.push_back(case_to_json(r));
  j["cases"] = std::move(cases);
  j["total_non_normal_graphs"] = report.total_graphs;
  j["claims"] = claims_to_json(report.global_claims);
  j["ok"] = report.ok();
  return pretty ? j.dump(2) : j.dump();
}

std::string classification_summary(const ClassificationReport& report) {
  std::string s;
  for (const SearchReport& r : report.cases) {
    s += r.spec.id;
    s += ": verdict=";
    s += r.verdict;
    s += r.ok() ? " [ok]" : " [FAILED]";
    s += "\n";
    for (const Claim& c : r.claims)
      if (!c.ok)
        s += "  claim " + c.name + ": expected " + std::to_string(c.expected) +
             ", observed " + std::to_string(c.observed) + "\n";
  }
  s += "distinct non-normal Cayley graphs produced: " +
       std::to_string(report.total_graphs) + "\n";
  if (report.ok()) {
    s += "verdict: exactly two non-isomorphic connected tetravalent 2-transitive "
         "non-normal Cayley graphs of a finite simple group, both on M11, each "
         "with 7920 vertices, automorphism group of order 190080 and vertex "
         "stabilizer S4; every other candidate case is empty\n";
  } else {
    s += "verdict: the searches completed, but the observed values diverge "
         "from the expected classification on the claims listed above "
         "(every divergence is certified by stored witnesses)\n";
  }
  return s;
}

}  // namespace cayley
