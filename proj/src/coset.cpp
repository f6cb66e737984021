#include "cayley/coset.hpp"

#include <algorithm>

#include "cayley/error.hpp"

namespace cayley {

PermGroup GroupAction::image_group() const {
  std::vector<Perm> gens = images;
  bool all_trivial = true;
  for (const Perm& p : gens)
    if (!p.is_identity()) all_trivial = false;
  if (gens.empty() || all_trivial) return PermGroup::trivial(point_count);
  return PermGroup::from_generators(gens);
}

Perm CosetSpace::min_coset_element(const Perm& x) const {
  Perm best_val = x;
  for (const Perm& k : k_elements_) {
    Perm cur = compose(k, x);
    if (cur < best_val) best_val = std::move(cur);
  }
  return best_val;
}

CosetSpace CosetSpace::build(const PermGroup& g, const PermGroup& k) {
  for (const Perm& x : k.generators())
    if (!g.contains(x))
      throw Error(ErrorKind::kNotASubgroup, "coset space: K is not a subgroup of G");
  CosetSpace sp;
  sp.group_ = g;
  sp.subgroup_ = k;
  sp.k_elements_ = k.elements(1 << 20);
  std::sort(sp.k_elements_.begin(), sp.k_elements_.end());

  uint64_t index = g.order() / k.order();
  sp.reps_.reserve(index);
  sp.reps_.push_back(Perm(g.degree()));
  sp.parent_.push_back(UINT32_MAX);
  sp.via_.push_back(UINT32_MAX);
  sp.key_to_index_.reserve(index * 2);
  sp.key_to_index_.emplace(sp.min_coset_element(sp.reps_[0]), 0u);

  const std::vector<Perm>& gens = g.generators();
  std::vector<std::vector<uint32_t>> images(gens.size());
  for (auto& img : images) img.reserve(index);

  for (uint32_t qi = 0; qi < sp.reps_.size(); ++qi) {
    for (uint32_t gi = 0; gi < gens.size(); ++gi) {
      Perm moved = compose(sp.reps_[qi], gens[gi]);
      Perm key = sp.min_coset_element(moved);
      auto [it, inserted] =
          sp.key_to_index_.emplace(std::move(key),
                                   static_cast<uint32_t>(sp.reps_.size()));
      if (inserted) {
        sp.reps_.push_back(std::move(moved));
        sp.parent_.push_back(qi);
        sp.via_.push_back(gi);
      }
      images[gi].push_back(it->second);  // slot qi
    }
  }
  if (sp.reps_.size() != index)
    throw Error(ErrorKind::kVerification, "coset space: BFS missed cosets");

  sp.action_.group = g;
  sp.action_.point_count = static_cast<uint32_t>(sp.reps_.size());
  for (auto& img : images) {
    img.resize(sp.reps_.size());
    sp.action_.images.push_back(Perm(img));
  }
  // Faithful iff the image group has full order (K core-free).
  sp.image_group_ = sp.action_.image_group();
  sp.faithful_ = sp.image_group_.order() == g.order();
  return sp;
}

uint32_t CosetSpace::index_of(const Perm& x) const {
  auto it = key_to_index_.find(min_coset_element(x));
  if (it == key_to_index_.end())
    throw Error(ErrorKind::kOutOfRange, "index_of: element outside the group");
  return it->second;
}

std::pair<CosetSpace, GroupAction> coset_action(const PermGroup& g,
                                                const PermGroup& k) {
  CosetSpace sp = CosetSpace::build(g, k);
  GroupAction act = sp.action();
  return {std::move(sp), std::move(act)};
}

Graph coset_graph(const CosetSpace& space, const Perm& g) {
  const PermGroup& big = space.group();
  const PermGroup& k = space.subgroup();
  if (!big.contains(g))
    throw Error(ErrorKind::kPrecondition, "coset graph: g is not in G");
  // g must not normalize K (in particular g not in K, so no loops).
  bool normalizes = true;
  for (const Perm& x : k.generators())
    if (!k.contains(conjugate(x, g))) {
      normalizes = false;
      break;
    }
  if (normalizes)
    throw Error(ErrorKind::kPrecondition, "coset graph: g normalizes K");
  if (!k.contains(compose(g, g)))
    throw Error(ErrorKind::kPrecondition, "coset graph: g^2 is not in K");

  // Base neighborhood {K g k : k in K}, then translate along the BFS tree.
  std::vector<uint32_t> base;
  for (const Perm& kk : space.subgroup_elements())
    base.push_back(space.index_of(compose(g, kk)));
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  uint32_t n = space.index();
  std::vector<std::vector<uint32_t>> adj(n);
  adj[0] = base;
  for (uint32_t v = 1; v < n; ++v) {
    const Perm& img = space.action().images[space.parent_gen(v)];
    const std::vector<uint32_t>& prev = adj[space.parent(v)];
    std::vector<uint32_t> cur(prev.size());
    for (size_t i = 0; i < prev.size(); ++i) cur[i] = img[prev[i]];
    std::sort(cur.begin(), cur.end());
    adj[v] = std::move(cur);
  }
  Graph out(n);
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t w : adj[v])
      if (v < w) out.add_edge(v, w);
  out.validate();
  // Valency must be |K : K n K^g|.
  uint64_t meet = 0;
  for (const Perm& kk : space.subgroup_elements())
    if (k.contains(conjugate(kk, inverse(g)))) ++meet;
  if (base.size() != k.order() / meet)
    throw Error(ErrorKind::kVerification, "coset graph: valency mismatch");
  return out;
}

Graph coset_graph(const PermGroup& big, const PermGroup& k, const Perm& g) {
  return coset_graph(CosetSpace::build(big, k), g);
}

CayleyGraph cayley_graph(const PermGroup& g, const std::vector<Perm>& s,
                         uint64_t vertex_cap) {
  if (g.order() > vertex_cap)
    throw Error(ErrorKind::kCapExceeded, "cayley graph: group too large");
  std::unordered_map<Perm, uint32_t, PermHash> index;
  CayleyGraph out;
  g.for_each_element([&](const Perm& x) {
    index.emplace(x, static_cast<uint32_t>(out.vertex_elements.size()));
    out.vertex_elements.push_back(x);
  });
  for (const Perm& x : s) {
    if (x.is_identity())
      throw Error(ErrorKind::kPrecondition, "cayley graph: identity in connection set");
    if (!index.count(x))
      throw Error(ErrorKind::kPrecondition, "cayley graph: element outside the group");
    if (!std::count(s.begin(), s.end(), inverse(x)))
      throw Error(ErrorKind::kPrecondition, "cayley graph: S is not inverse-closed");
  }
  Graph graph(static_cast<uint32_t>(out.vertex_elements.size()));
  for (uint32_t v = 0; v < out.vertex_elements.size(); ++v)
    for (const Perm& x : s) {
      uint32_t w = index.at(compose(x, out.vertex_elements[v]));
      if (v < w) graph.add_edge(v, w);
      else if (w < v) graph.add_edge(w, v);
    }
  out.graph = std::move(graph);
  return out;
}

Graph coset_graph_by_definition(const PermGroup& g, const PermGroup& k,
                                const Perm& elem, uint64_t cap) {
  std::vector<Perm> els = g.elements(cap);
  std::vector<Perm> kels = k.elements(cap);
  // Double coset K g K as a set.
  std::unordered_map<Perm, char, PermHash> dcoset;
  for (const Perm& a : kels)
    for (const Perm& b : kels) dcoset.emplace(compose(compose(a, elem), b), 1);
  // Cosets in the same BFS indexing as CosetSpace.
  CosetSpace space = CosetSpace::build(g, k);
  Graph out(space.index());
  for (const Perm& x : els)
    for (const Perm& y : els) {
      Perm prod = compose(x, inverse(y));
      if (dcoset.count(prod)) {
        uint32_t u = space.index_of(x), v = space.index_of(y);
        if (u != v) out.add_edge(u, v);
      }
    }
  return out;
}

}  // namespace cayley
