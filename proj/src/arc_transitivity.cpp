#include "cayley/arc_transitivity.hpp"

#include <algorithm>
#include <functional>

#include "cayley/error.hpp"

namespace cayley {

namespace {

void check_action(const Graph& g, const GroupAction& act) {
  if (act.point_count != g.vertex_count())
    throw Error(ErrorKind::kDegreeMismatch, "action degree differs from vertex count");
  for (size_t i = 0; i < act.images.size(); ++i) {
    const Perm& img = act.images[i];
    for (uint32_t u = 0; u < g.vertex_count(); ++u)
      for (uint32_t v : g.neighbors(u))
        if (!g.adjacent(img[u], img[v]))
          throw Error(ErrorKind::kPrecondition,
                      "generator " + std::to_string(i) + " does not preserve adjacency");
  }
}

// Arcs packed 16 bits per vertex, v_0 in the high bits.
uint64_t pack_arc(const std::vector<uint32_t>& arc) {
  uint64_t key = 0;
  for (uint32_t v : arc) key = (key << 16) | v;
  return key;
}

void enumerate_arcs(const Graph& g, int s, std::vector<uint64_t>& out) {
  std::vector<uint32_t> arc;
  std::function<void()> rec = [&]() {
    if (arc.size() == static_cast<size_t>(s) + 1) {
      out.push_back(pack_arc(arc));
      return;
    }
    uint32_t last = arc.back();
    for (uint32_t w : g.neighbors(last)) {
      if (arc.size() >= 2 && w == arc[arc.size() - 2]) continue;  // backtrack
      arc.push_back(w);
      rec();
      arc.pop_back();
    }
  };
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    arc.assign(1, v);
    rec();
  }
}

uint32_t uf_find(std::vector<uint32_t>& uf, uint32_t v) {
  while (uf[v] != v) {
    uf[v] = uf[uf[v]];
    v = uf[v];
  }
  return v;
}

}  // namespace

std::pair<uint64_t, uint64_t> arc_orbit_count(const Graph& g,
                                              const GroupAction& act, int s) {
  if (s < 0 || s > 3)
    throw Error(ErrorKind::kPrecondition, "arc_orbit_count: s must be in 0..3");
  if (g.vertex_count() >= (1u << 16))
    throw Error(ErrorKind::kCapExceeded, "arc_orbit_count: too many vertices");
  check_action(g, act);

  if (s == 0) {
    std::vector<uint32_t> uf(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) uf[v] = v;
    for (const Perm& img : act.images)
      for (uint32_t v = 0; v < g.vertex_count(); ++v) {
        uint32_t a = uf_find(uf, v), b = uf_find(uf, img[v]);
        if (a != b) uf[a] = b;
      }
    uint64_t orbits = 0;
    for (uint32_t v = 0; v < g.vertex_count(); ++v)
      if (uf_find(uf, v) == v) ++orbits;
    return {g.vertex_count(), orbits};
  }

  std::vector<uint64_t> arcs;
  enumerate_arcs(g, s, arcs);
  std::sort(arcs.begin(), arcs.end());
  std::vector<uint32_t> uf(arcs.size());
  for (uint32_t i = 0; i < arcs.size(); ++i) uf[i] = i;
  std::vector<uint32_t> pts(s + 1);
  for (const Perm& img : act.images) {
    for (uint32_t i = 0; i < arcs.size(); ++i) {
      uint64_t key = arcs[i];
      for (int j = s; j >= 0; --j) {
        pts[j] = img[key & 0xffff];
        key >>= 16;
      }
      uint64_t moved = 0;
      for (uint32_t v : pts) moved = (moved << 16) | v;
      auto it = std::lower_bound(arcs.begin(), arcs.end(), moved);
      if (it == arcs.end() || *it != moved)
        throw Error(ErrorKind::kVerification, "arc image is not an arc");
      uint32_t a = uf_find(uf, i), b = uf_find(uf, static_cast<uint32_t>(it - arcs.begin()));
      if (a != b) uf[a] = b;
    }
  }
  uint64_t orbits = 0;
  for (uint32_t i = 0; i < arcs.size(); ++i)
    if (uf_find(uf, i) == i) ++orbits;
  return {arcs.size(), orbits};
}

ArcOrbitProfile arc_profile(const Graph& g, const GroupAction& act) {
  ArcOrbitProfile p;
  for (int s = 0; s <= 3; ++s) {
    auto [count, orbits] = arc_orbit_count(g, act, s);
    p.arc_count[s] = count;
    p.orbit_count[s] = orbits;
  }
  return p;
}

PermGroup local_action(const Graph& g, const GroupAction& act, uint32_t v) {
  if (v >= g.vertex_count())
    throw Error(ErrorKind::kOutOfRange, "local_action: vertex out of range");
  check_action(g, act);
  std::vector<Perm> vertex_gens = act.images;
  PermGroup on_vertices = PermGroup::with_base_prefix(vertex_gens, {v});
  std::vector<Perm> stab_gens;
  for (const Perm& s : on_vertices.strong_generators())
    if (s[v] == v) stab_gens.push_back(s);
  const std::vector<uint32_t>& nbrs = g.neighbors(v);
  std::vector<uint32_t> where(g.vertex_count(), UINT32_MAX);
  for (uint32_t i = 0; i < nbrs.size(); ++i) where[nbrs[i]] = i;
  std::vector<Perm> induced;
  for (const Perm& s : stab_gens) {
    std::vector<uint32_t> img(nbrs.size());
    for (uint32_t i = 0; i < nbrs.size(); ++i) {
      uint32_t w = s[nbrs[i]];
      if (where[w] == UINT32_MAX)
        throw Error(ErrorKind::kVerification, "stabilizer does not preserve the neighborhood");
      img[i] = where[w];
    }
    induced.push_back(Perm(std::move(img)));
  }
  if (induced.empty()) return PermGroup::trivial(static_cast<uint32_t>(nbrs.size()));
  return PermGroup::from_generators(induced);
}

int s_transitivity(const Graph& g, const GroupAction& act) {
  int best = -1;
  for (int s = 0; s <= 3; ++s) {
    auto [count, orbits] = arc_orbit_count(g, act, s);
    if (count == 0) break;
    if (orbits != 1) break;
    best = s;
  }
  return best;
}

uint64_t burnside_orbit_count(const PermGroup& k, uint64_t cap) {
  uint64_t total = 0;
  bool ok = k.for_each_element(
      [&](const Perm& p) { total += p.num_fixed_points(); }, cap);
  if (!ok) throw Error(ErrorKind::kCapExceeded, "burnside: group too large");
  uint64_t order = k.order();
  if (total % order != 0)
    throw Error(ErrorKind::kVerification, "burnside: sum of fixed points is not divisible");
  return total / order;
}

std::pair<uint64_t, uint64_t> arc_orbit_count_brute(const Graph& g,
                                                    const GroupAction& act,
                                                    int s, uint64_t group_cap) {
  std::vector<uint64_t> arcs;
  if (s == 0) {
    for (uint32_t v = 0; v < g.vertex_count(); ++v) arcs.push_back(v);
  } else {
    enumerate_arcs(g, s, arcs);
  }
  std::sort(arcs.begin(), arcs.end());
  PermGroup image = act.image_group();
  std::vector<Perm> all = image.elements(group_cap);
  std::vector<uint32_t> uf(arcs.size());
  for (uint32_t i = 0; i < arcs.size(); ++i) uf[i] = i;
  std::vector<uint32_t> pts(s + 1);
  for (const Perm& img : all) {
    for (uint32_t i = 0; i < arcs.size(); ++i) {
      uint64_t key = arcs[i];
      for (int j = s; j >= 0; --j) {
        pts[j] = img[key & 0xffff];
        key >>= 16;
      }
      uint64_t moved = 0;
      for (uint32_t v : pts) moved = (moved << 16) | v;
      auto it = std::lower_bound(arcs.begin(), arcs.end(), moved);
      uint32_t a = uf_find(uf, i), b = uf_find(uf, static_cast<uint32_t>(it - arcs.begin()));
      if (a != b) uf[a] = b;
    }
  }
  uint64_t orbits = 0;
  for (uint32_t i = 0; i < arcs.size(); ++i)
    if (uf_find(uf, i) == i) ++orbits;
  return {arcs.size(), orbits};
}

}  // namespace cayley
