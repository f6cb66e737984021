// The classification pipeline: runs every search needed to certify that,
// among connected tetravalent 2-transitive Cayley graphs of finite simple
// groups, the non-normal ones are exactly two graphs on M11 (7920 vertices,
// automorphism group of order 190080), and that every other candidate case
// is empty.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/coset.hpp"
#include "cayley/graph.hpp"
#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

enum class StabilizerType { kA4, kS4 };
enum class CaseMode { kComplementSearch, kQuotientSearch };

struct CaseSpec {
  std::string id;
  std::string ambient;      // catalog name
  std::string point_group;  // catalog name / derived-subgroup tag / empty
  StabilizerType stab_type = StabilizerType::kS4;
  bool require_trivial_intersection = false;
  CaseMode mode = CaseMode::kComplementSearch;
};

// The fixed case list reproducing the published classification.
const std::vector<CaseSpec>& case_list();

// A subgroup small enough to carry its full element list.
struct SmallSubgroup {
  std::vector<Perm> elements;    // sorted, element 0 need not be identity
  std::vector<Perm> generators;  // a small generating set

  uint64_t order() const { return elements.size(); }
  bool contains(const Perm& p) const;
  PermGroup to_group() const { return PermGroup::from_generators(generators); }
};

struct SubgroupClassInfo {
  SmallSubgroup rep;
  uint64_t class_size = 0;                 // |G : N_G(K)|
  uint64_t point_group_intersection = 0;   // |K n G|, complement mode only
};

// One representative per conjugacy class of A4/S4 subgroups.  Exhaustive
// generator-pair scan for element-enumerable groups; anchored scan over
// certified element-class representatives for natural alternating groups.
std::vector<SmallSubgroup> find_subgroup_classes(const PermGroup& g,
                                                 StabilizerType type);

// Classes with trivial intersection against a point group (a complement
// candidate list).  amb/point must satisfy point <= amb.
std::vector<SubgroupClassInfo> complement_classes(const PermGroup& amb,
                                                  const PermGroup& point,
                                                  StabilizerType type);

enum class FeasibleStrategy { kAuto, kDirectScan, kAnchored };

// The 2-elements g with g^2 in K, g outside N_A(K), |K : K n K^g| = 4 with
// the coset action 2-transitive, and <K, g> = A; sorted.
std::vector<Perm> feasible_elements(const PermGroup& a, const SmallSubgroup& k,
                                    FeasibleStrategy strategy = FeasibleStrategy::kAuto);

// Partition of delta under K-conjugation; orbits sorted by decreasing size
// then by minimal element, elements sorted within each orbit.
std::vector<std::vector<Perm>> delta_orbits(const SmallSubgroup& k,
                                            const std::vector<Perm>& delta);

struct RegularObstructionClass {
  SmallSubgroup rep;
  uint64_t direct_orbit_count = 0;
  uint64_t burnside_count = 0;
  uint32_t involution_fixed_points = 0;
  uint32_t order3_fixed_points = 0;
};

// Shows no A4 subgroup of M11 in degree 12 can be regular: every class has
// 4 orbits (Burnside agreeing with the direct count), with involutions
// fixing 4 points and order-3 elements fixing 3.
std::vector<RegularObstructionClass> regular_complement_obstruction(
    const PermGroup& m11_deg12);

// S = {r in R : 0^r adjacent to 0} for R regular on the vertices; the
// orbit bijection r -> 0^r then carries Cay(R, S) onto the graph.
std::vector<Perm> extract_connection_set(const Graph& g, const PermGroup& r);

struct NormalityResult {
  bool normal = false;
  std::optional<Perm> witness_automorphism;  // a with R^a != R
  std::optional<Perm> witness_element;       // r in R with r^a outside R
};

NormalityResult normality_check(const PermGroup& aut, const PermGroup& r);

struct SigmaReport {
  bool ok = false;
  uint32_t vertices = 0;
  uint64_t edges_checked = 0;
  std::string failure;
};

struct Claim {
  std::string name;
  int64_t expected = 0;
  int64_t observed = 0;
  bool ok = false;
};

struct GraphCertificate {
  std::string label;
  Perm coset_element;  // the g of the coset graph
  uint32_t vertex_count = 0;
  uint32_t valency = 0;
  bool connected = false;
  int s_transitivity = -1;
  uint64_t vertex_stabilizer_order = 0;
  uint64_t local_action_order = 0;
  bool local_action_symmetric = false;  // stabilizer induces Sym(4) on the neighbors
  bool local_two_transitive = false;
  uint64_t aut_order = 0;
  bool aut_contains_action = false;
  bool regular_point_group_found = false;
  uint32_t connection_set_size = 0;
  bool connection_set_inverse_closed = false;
  bool connection_set_generates = false;
  bool cayley_isomorphic = false;
  bool non_normal = false;
  uint64_t certificate_hash = 0;
};

struct SearchReport {
  CaseSpec spec;
  std::vector<SubgroupClassInfo> k_classes;
  uint64_t normalizer_order = 0;                       // N_A(K) for the main class
  std::vector<std::vector<Perm>> feasible;             // per class
  std::vector<std::vector<std::vector<Perm>>> delta_orbit_partition;  // per class
  std::vector<GraphCertificate> graphs_built;
  std::vector<RegularObstructionClass> obstruction;    // regularity case only
  SigmaReport sigma;                                   // M12/A4 case only
  std::string verdict;                                 // "empty" or "graphs"
  std::vector<Claim> claims;

  bool ok() const;
};

struct ClassificationReport {
  std::vector<SearchReport> cases;
  std::vector<Claim> global_claims;
  uint32_t total_graphs = 0;
  bool ok() const;
};

SearchReport run_case(const CaseSpec& spec);
SearchReport run_case(const std::string& id);
// threads > 1 runs independent cases concurrently; reports are merged in
// case-list order, so the result does not depend on the schedule.
ClassificationReport run_all(unsigned threads = 1);

// Re-derives every checkable statement of a report from its stored
// witnesses using chain primitives only (no search); throws on failure.
void verify_report_witnesses(const SearchReport& report);

// JSON serialization (stable key order, schema 1).
std::string report_to_json(const SearchReport& report, bool pretty = true);
std::string classification_to_json(const ClassificationReport& report,
                                   bool pretty = true);
std::string classification_summary(const ClassificationReport& report);

}  // namespace cayley
