#include "cayley/classify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <cstring>
#include <unordered_map>
#include <unordered_set>

#include "cayley/arc_transitivity.hpp"
#include "cayley/canonical.hpp"
#include "cayley/conjugacy.hpp"
#include "cayley/error.hpp"
#include "cayley/group_data.hpp"

namespace cayley {

namespace {

constexpr uint64_t kEnumerableCap = 250000;

// ---------------------------------------------------------------------------
// Small-subgroup utilities

bool small_closure(const std::vector<Perm>& gens, size_t cap,
                   std::vector<Perm>& out) {
  out.clear();
  out.push_back(Perm(gens.at(0).degree()));
  std::unordered_set<Perm, PermHash> seen(out.begin(), out.end());
  for (size_t qi = 0; qi < out.size(); ++qi)
    for (const Perm& g : gens) {
      Perm p = compose(out[qi], g);
      if (seen.insert(p).second) {
        if (out.size() + 1 > cap) return false;
        out.push_back(std::move(p));
      }
    }
  return true;
}

// Closure scratch for tiny subgroups at degree <= 64: flat byte rows,
// linear dedup, no allocation in the steady state.
class SmallCloser {
 public:
  explicit SmallCloser(uint32_t degree) : n_(degree) {}

  // Closure of <a, b>; false when it would exceed cap elements.
  bool close(const Perm& a, const Perm& b, size_t cap) {
    rows_.resize((cap + 1) * n_);
    count_ = 1;
    for (uint32_t i = 0; i < n_; ++i) rows_[i] = static_cast<uint8_t>(i);
    const Perm* gens[2] = {&a, &b};
    for (size_t qi = 0; qi < count_; ++qi)
      for (const Perm* g : gens) {
        uint8_t* prod = rows_.data() + count_ * n_;
        const uint8_t* row = rows_.data() + qi * n_;
        for (uint32_t i = 0; i < n_; ++i)
          prod[i] = static_cast<uint8_t>((*g)[row[i]]);
        bool fresh = true;
        for (size_t r = 0; r < count_; ++r)
          if (std::memcmp(rows_.data() + r * n_, prod, n_) == 0) {
            fresh = false;
            break;
          }
        if (!fresh) continue;
        if (count_ == cap) return false;
        ++count_;
      }
    return true;
  }

  size_t size() const { return count_; }

  std::vector<Perm> elements() const {
    std::vector<Perm> out;
    out.reserve(count_);
    for (size_t r = 0; r < count_; ++r) {
      std::vector<uint32_t> img(n_);
      for (uint32_t i = 0; i < n_; ++i) img[i] = rows_[r * n_ + i];
      out.push_back(Perm(std::move(img)));
    }
    return out;
  }

 private:
  uint32_t n_;
  size_t count_ = 0;
  std::vector<uint8_t> rows_;
};

std::pair<uint64_t, uint64_t> subgroup_key(const std::vector<Perm>& sorted_els) {
  uint64_t h1 = 0xcbf29ce484222325ull, h2 = 0x9e3779b97f4a7c15ull;
  for (const Perm& p : sorted_els) {
    h1 = hash_bytes(p.images().data(), p.images().size() * 4, h1);
    h2 = hash_bytes(p.images().data(), p.images().size() * 4, h2 ^ 0x5bd1e995u);
  }
  return {h1, h2};
}

struct KeyHash {
  size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
    return k.first ^ (k.second * 0x9e3779b97f4a7c15ull);
  }
};

// True iff (x then y) has order exactly m in {2, 3}; allocation-free.
bool product_has_order(const Perm& x, const Perm& y, uint32_t m) {
  uint32_t n = x.degree();
  bool nonid = false;
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t a = y[x[i]];
    if (a == i) continue;
    nonid = true;
    uint32_t cur = a;
    uint32_t steps = 1;
    while (cur != i) {
      cur = y[x[cur]];
      if (++steps > m) return false;
    }
    if (steps != m) return false;
  }
  return nonid;
}

SmallSubgroup make_subgroup(std::vector<Perm> sorted_els,
                            std::vector<Perm> gens) {
  SmallSubgroup k;
  k.elements = std::move(sorted_els);
  k.generators = std::move(gens);
  return k;
}

// Invariant used to bucket subgroups before transporter tests.
std::string subgroup_invariant(const SmallSubgroup& k) {
  std::vector<std::vector<uint32_t>> types;
  for (const Perm& p : k.elements) types.push_back(p.cycle_type());
  std::sort(types.begin(), types.end());
  std::string s;
  for (const auto& t : types) {
    for (uint32_t v : t) s += static_cast<char>('0' + v % 64);
    s += '|';
  }
  PermGroup grp = PermGroup::from_generators(k.generators);
  std::vector<size_t> orbit_sizes;
  for (const auto& orb : grp.orbits()) orbit_sizes.push_back(orb.size());
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  for (size_t sz : orbit_sizes) s += static_cast<char>('A' + sz % 26);
  return s;
}

std::vector<Perm> generating_pair(const std::vector<Perm>& elements,
                                  size_t order) {
  std::vector<Perm> tmp;
  for (const Perm& a : elements) {
    if (a.is_identity()) continue;
    for (const Perm& b : elements) {
      if (b.is_identity() || a == b) continue;
      if (small_closure({a, b}, order, tmp) && tmp.size() == order)
        return {a, b};
    }
  }
  throw Error(ErrorKind::kVerification, "subgroup is not 2-generated");
}

// ---------------------------------------------------------------------------
// Subgroup class searches

struct PairProfile {
  uint32_t x_order, y_order, xy_order;
  size_t group_order;
};

PairProfile profile_for(StabilizerType t) {
  // S4 = <x, y | x^4 = y^2 = (xy)^3 = 1>, A4 = <x, y | x^2 = y^3 = (xy)^3 = 1>;
  // both presentations pin the isomorphism type once the order matches.
  if (t == StabilizerType::kS4) return {4, 2, 3, 24};
  return {2, 3, 3, 12};
}

// All subgroups of the given type in an element-enumerable group, as sorted
// element lists in first-discovery order.
std::vector<SmallSubgroup> scan_all_subgroups(const std::vector<Perm>& elements,
                                              StabilizerType type) {
  PairProfile prof = profile_for(type);
  std::vector<const Perm*> xs, ys;
  for (const Perm& e : elements) {
    uint64_t o = e.order();
    if (o == prof.x_order) xs.push_back(&e);
    if (o == prof.y_order) ys.push_back(&e);
  }
  std::vector<SmallSubgroup> found;
  std::unordered_set<std::pair<uint64_t, uint64_t>, KeyHash> seen;
  SmallCloser closer(elements.at(0).degree());
  for (const Perm* x : xs)
    for (const Perm* y : ys) {
      if (!product_has_order(*x, *y, prof.xy_order)) continue;
      if (!closer.close(*x, *y, prof.group_order)) continue;
      if (closer.size() != prof.group_order) continue;
      std::vector<Perm> sorted = closer.elements();
      std::sort(sorted.begin(), sorted.end());
      if (seen.insert(subgroup_key(sorted)).second)
        found.push_back(make_subgroup(std::move(sorted), {*x, *y}));
    }
  return found;
}

// Conjugation-orbit partition of a complete subgroup list; returns one
// lexicographically minimal representative per class plus the class size.
std::vector<std::pair<SmallSubgroup, uint64_t>> conjugation_classes(
    const PermGroup& g, const std::vector<SmallSubgroup>& all) {
  std::unordered_map<std::pair<uint64_t, uint64_t>, uint32_t, KeyHash> index;
  for (uint32_t i = 0; i < all.size(); ++i)
    index.emplace(subgroup_key(all[i].elements), i);
  std::vector<char> assigned(all.size(), 0);
  std::vector<std::pair<SmallSubgroup, uint64_t>> classes;
  for (uint32_t i = 0; i < all.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<uint32_t> queue{i};
    assigned[i] = 1;
    uint32_t min_idx = i;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const std::vector<Perm>& cur = all[queue[qi]].elements;
      for (const Perm& gen : g.generators()) {
        std::vector<Perm> img;
        img.reserve(cur.size());
        for (const Perm& p : cur) img.push_back(conjugate(p, gen));
        std::sort(img.begin(), img.end());
        auto it = index.find(subgroup_key(img));
        if (it == index.end())
          throw Error(ErrorKind::kVerification,
                      "conjugate of a found subgroup is missing from the scan");
        if (!assigned[it->second]) {
          assigned[it->second] = 1;
          queue.push_back(it->second);
          if (all[it->second].elements < all[min_idx].elements)
            min_idx = it->second;
        }
      }
    }
    classes.emplace_back(all[min_idx], queue.size());
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) {
              return a.first.elements < b.first.elements;
            });
  return classes;
}

// --- anchored search over a natural alternating group -----------------------

bool is_natural_alternating(const PermGroup& g) {
  unsigned __int128 half_fact = 1;
  for (uint32_t i = 2; i <= g.degree(); ++i) half_fact *= i;
  half_fact /= 2;
  return half_fact <= UINT64_MAX && g.order() == static_cast<uint64_t>(half_fact);
}

// One x per even cycle type of the wanted element order; classes of A_n
// split only when all cycle lengths are odd and distinct, which the caller
// relies on being false here (checked).
std::vector<Perm> even_type_representatives(uint32_t n, uint32_t elem_order) {
  std::vector<Perm> reps;
  // Partitions of <= n into parts from {1, 2, 4} (padded with fixed points),
  // containing a part of size elem_order, with an even number of even parts.
  std::vector<uint32_t> parts;
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t left, uint32_t maxpart) {
    if (std::find(parts.begin(), parts.end(), elem_order) != parts.end()) {
      uint32_t evens = 0;
      uint64_t lcm = 1;
      for (uint32_t p : parts) {
        if (p % 2 == 0) ++evens;
        lcm = std::lcm<uint64_t>(lcm, p);
      }
      if (evens % 2 == 0 && lcm == elem_order) {
        bool all_odd_distinct = true;
        for (size_t i = 0; i < parts.size(); ++i)
          if (parts[i] % 2 == 0 ||
              std::count(parts.begin(), parts.end(), parts[i]) > 1)
            all_odd_distinct = false;
        if (all_odd_distinct)
          throw Error(ErrorKind::kVerification,
                      "anchor class splits in the alternating group");
        std::vector<uint32_t> img(n);
        std::iota(img.begin(), img.end(), 0u);
        uint32_t at = 0;
        for (uint32_t p : parts) {
          for (uint32_t j = 0; j < p; ++j) img[at + j] = at + (j + 1) % p;
          at += p;
        }
        reps.push_back(Perm(std::move(img)));
      }
    }
    for (uint32_t p = 2; p <= std::min<uint32_t>(maxpart, left); p *= 2) {
      if (p > elem_order) break;
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, elem_order);
  std::sort(reps.begin(), reps.end());
  return reps;
}

// Every involution of Alt(n): matchings with an even, positive number of
// pairs.
std::vector<Perm> alternating_involutions(uint32_t n) {
  std::vector<Perm> out;
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t from, uint32_t pairs) {
    if (pairs > 0 && pairs % 2 == 0) out.push_back(Perm(img));
    for (uint32_t a = from; a < n; ++a) {
      if (img[a] != a) continue;
      // Either pair a with some larger free point, or leave it fixed and
      // move on; pairs are created in increasing order of their smaller
      // member, so each matching arises exactly once.
      for (uint32_t b = a + 1; b < n; ++b) {
        if (img[b] != b) continue;
        img[a] = b;
        img[b] = a;
        rec(a + 1, pairs + 1);
        img[a] = a;
        img[b] = b;
      }
    }
  };
  rec(0, 0);
  return out;
}

// All fixed-point-free {3,3,3,3}-type elements of Alt(12)-like degrees.
std::vector<Perm> fpf_order3_elements(uint32_t n) {
  std::vector<Perm> out;
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&]() {
    uint32_t a = UINT32_MAX;
    for (uint32_t i = 0; i < n; ++i)
      if (!used[i]) {
        a = i;
        break;
      }
    if (a == UINT32_MAX) {
      out.push_back(Perm(img));
      return;
    }
    for (uint32_t b = 0; b < n; ++b) {
      if (used[b] || b == a) continue;
      for (uint32_t c = b + 1; c < n; ++c) {
        if (used[c] || c == a) continue;
        used[a] = used[b] = used[c] = 1;
        img[a] = b; img[b] = c; img[c] = a;
        rec();
        img[a] = c; img[c] = b; img[b] = a;
        rec();
        img[a] = a; img[b] = b; img[c] = c;
        used[a] = used[b] = used[c] = 0;
      }
    }
  };
  rec();
  return out;
}

// Anchored subgroup-class search: anchors cover every class of elements of
// order x_order (up to conjugacy), partners range over a complete list of
// y_order candidates, so every subgroup class is hit at least once.
std::vector<SmallSubgroup> anchored_classes(
    const PermGroup& g, const std::vector<Perm>& anchors,
    const std::vector<Perm>& partners, PairProfile prof,
    const std::function<bool(const std::vector<Perm>&)>& keep) {
  std::vector<SmallSubgroup> reps;
  std::vector<std::string> rep_invariants;
  std::unordered_set<std::pair<uint64_t, uint64_t>, KeyHash> seen;
  SmallCloser closer(g.degree());
  for (const Perm& x : anchors) {
    if (x.order() != prof.x_order)
      throw Error(ErrorKind::kVerification, "anchor has the wrong order");
    for (const Perm& y : partners) {
      if (!product_has_order(x, y, prof.xy_order)) continue;
      if (!closer.close(x, y, prof.group_order)) continue;
      if (closer.size() != prof.group_order) continue;
      std::vector<Perm> sorted = closer.elements();
      std::sort(sorted.begin(), sorted.end());
      if (!keep(sorted)) continue;
      if (!seen.insert(subgroup_key(sorted)).second) continue;
      SmallSubgroup cand = make_subgroup(std::move(sorted), {x, y});
      std::string inv = subgroup_invariant(cand);
      bool fresh = true;
      for (size_t i = 0; i < reps.size(); ++i) {
        if (rep_invariants[i] != inv) continue;
        if (transporter(g, cand.to_group(), reps[i].to_group())) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        reps.push_back(std::move(cand));
        rep_invariants.push_back(std::move(inv));
      }
    }
  }
  std::sort(reps.begin(), reps.end(),
            [](const SmallSubgroup& a, const SmallSubgroup& b) {
              return a.elements < b.elements;
            });
  return reps;
}

// Certified-complete searches for the non-enumerable ambient groups;
// defined further below.
std::vector<SmallSubgroup> regular_s4_classes_m24(const PermGroup& m24);
std::vector<SmallSubgroup> s4_complement_classes_s12(const PermGroup& s12,
                                                     const PermGroup& a11);

}  // namespace

bool SmallSubgroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

std::vector<SmallSubgroup> find_subgroup_classes(const PermGroup& g,
                                                 StabilizerType type) {
  PairProfile prof = profile_for(type);
  if (g.order() <= kEnumerableCap) {
    std::vector<Perm> elements = g.elements(kEnumerableCap);
    std::vector<SmallSubgroup> all = scan_all_subgroups(elements, type);
    auto classes = conjugation_classes(g, all);
    std::vector<SmallSubgroup> reps;
    for (auto& [rep, size] : classes) reps.push_back(rep);
    return reps;
  }
  if (is_natural_alternating(g)) {
    std::vector<Perm> anchors = even_type_representatives(g.degree(), prof.x_order);
    std::vector<Perm> partners;
    if (prof.y_order == 2) {
      partners = alternating_involutions(g.degree());
    } else {
      throw Error(ErrorKind::kCapExceeded,
                  "anchored search only implemented for involution partners");
    }
    return anchored_classes(g, anchors, partners, prof,
                            [](const std::vector<Perm>&) { return true; });
  }
  throw Error(ErrorKind::kCapExceeded,
              "subgroup class search needs an enumerable or alternating group");
}

std::vector<SubgroupClassInfo> complement_classes(const PermGroup& amb,
                                                  const PermGroup& point,
                                                  StabilizerType type) {
  for (const Perm& x : point.generators())
    if (!amb.contains(x))
      throw Error(ErrorKind::kNotASubgroup, "complement_classes: point group not inside");
  PairProfile prof = profile_for(type);
  std::vector<SubgroupClassInfo> out;

  auto intersection_size = [&](const SmallSubgroup& k) {
    uint64_t meet = 0;
    for (const Perm& p : k.elements)
      if (point.contains(p)) ++meet;
    return meet;
  };

  if (amb.order() <= kEnumerableCap) {
    std::vector<Perm> elements = amb.elements(kEnumerableCap);
    auto classes = conjugation_classes(amb, scan_all_subgroups(elements, type));
    for (auto& [rep, size] : classes) {
      uint64_t meet = intersection_size(rep);
      if (meet != 1) continue;
      out.push_back({rep, size, meet});
    }
    return out;
  }

  // Large ambient groups: the complement is (or contains) a group acting
  // regularly, which anchors the search.
  uint64_t index = amb.order() / point.order();
  std::vector<SmallSubgroup> reps;
  if (type == StabilizerType::kA4 && is_natural_alternating(amb) && index == 12) {
    // Regular A4 complements: fixed-point-free involution anchor plus
    // fixed-point-free order-3 partners.
    std::vector<uint32_t> img(amb.degree());
    for (uint32_t i = 0; i < amb.degree(); i += 2) {
      img[i] = i + 1;
      img[i + 1] = i;
    }
    std::vector<Perm> anchors{Perm(img)};
    std::vector<Perm> partners = fpf_order3_elements(amb.degree());
    auto regular = [&](const std::vector<Perm>& els) {
      for (const Perm& p : els)
        if (!p.is_identity() && p.num_fixed_points() != 0) return false;
      return true;
    };
    reps = anchored_classes(amb, anchors, partners, prof, regular);
  } else if (type == StabilizerType::kS4 && amb.degree() == 24 && index == 24) {
    reps = regular_s4_classes_m24(amb);
  } else if (type == StabilizerType::kS4 && amb.degree() == 12 && index == 24) {
    reps = s4_complement_classes_s12(amb, point);
  } else {
    throw Error(ErrorKind::kCapExceeded, "complement search not available here");
  }
  for (const SmallSubgroup& rep : reps) {
    uint64_t meet = intersection_size(rep);
    if (meet != 1) continue;
    uint64_t norm = normalizer(amb, rep.to_group()).order();
    out.push_back({rep, amb.order() / norm, meet});
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// M24: regular S4 complements to a point stabilizer

// A block of the octad system: the pointwise stabilizer of 5 points has a
// single orbit of size 3 on the rest, and those 8 points form the block.
std::vector<uint32_t> derive_octad(const PermGroup& m24) {
  std::vector<uint32_t> five{0, 1, 2, 3, 4};
  PermGroup w = m24.pointwise_stabilizer(five);
  std::vector<uint32_t> octad = five;
  for (const auto& orbit : w.orbits()) {
    if (orbit.size() == 1 && orbit[0] <= 4) continue;
    if (orbit.size() == 3)
      for (uint32_t p : orbit) octad.push_back(p);
  }
  if (octad.size() != 8)
    throw Error(ErrorKind::kVerification, "octad derivation failed");
  std::sort(octad.begin(), octad.end());
  return octad;
}

// Sylow 2-subgroup of M24, grown inside the octad stabilizer (which has the
// full 2-part 2^10 of |M24|), by repeated normalizer scans.
std::vector<Perm> sylow2_of_m24(const PermGroup& m24) {
  std::vector<uint32_t> octad = derive_octad(m24);
  SetStabilizerResult blocks = set_stabilizer(m24, octad, 2000);
  if (blocks.orbit.size() != 759)
    throw Error(ErrorKind::kVerification, "octad orbit is not 759 blocks");
  const PermGroup& oct_stab = blocks.stabilizer;
  if (oct_stab.order() != 322560)
    throw Error(ErrorKind::kVerification, "octad stabilizer has the wrong order");
  std::vector<Perm> table = oct_stab.elements(400000);

  std::vector<Perm> p_gens;
  std::vector<Perm> p_els{Perm(m24.degree())};
  std::unordered_set<Perm, PermHash> p_set(p_els.begin(), p_els.end());
  while (p_els.size() < 1024) {
    bool grew = false;
    for (const Perm& y : table) {
      // y must normalize P.
      bool in_norm = true;
      for (const Perm& g : p_gens)
        if (!p_set.count(conjugate(g, y))) {
          in_norm = false;
          break;
        }
      if (!in_norm) continue;
      uint64_t o = y.order();
      uint64_t odd = o;
      while (odd % 2 == 0) odd /= 2;
      if (o == odd) continue;  // no 2-part
      Perm z = power(y, odd);
      if (p_set.count(z)) continue;
      std::vector<Perm> bigger = p_gens;
      bigger.push_back(z);
      std::vector<Perm> closure;
      if (!small_closure(bigger, 1024, closure)) continue;
      if ((closure.size() & (closure.size() - 1)) != 0) continue;
      p_gens = std::move(bigger);
      p_els = std::move(closure);
      p_set = std::unordered_set<Perm, PermHash>(p_els.begin(), p_els.end());
      grew = true;
      break;
    }
    if (!grew)
      throw Error(ErrorKind::kVerification, "Sylow 2-subgroup growth got stuck");
  }
  std::sort(p_els.begin(), p_els.end());
  return p_els;
}

std::vector<SmallSubgroup> regular_s4_classes_m24(const PermGroup& m24) {
  std::vector<Perm> sylow = sylow2_of_m24(m24);
  // Anchors: every 4^6-type element of the Sylow subgroup (each conjugacy
  // class of such elements meets it, so every regular-S4 class is reached).
  std::vector<uint32_t> type46(6, 4);
  std::vector<Perm> anchors;
  for (const Perm& p : sylow)
    if (p.order() == 4 && p.cycle_type() == type46) anchors.push_back(p);
  // Partners: all fixed-point-free involutions, as the union of the
  // conjugacy classes of the Sylow representatives.
  std::vector<Perm> partners;
  std::unordered_set<Perm, PermHash> partner_set;
  std::vector<uint32_t> type212(12, 2);
  for (const Perm& p : sylow) {
    if (p.order() != 2 || p.cycle_type() != type212) continue;
    if (partner_set.count(p)) continue;
    for (Perm& q : conjugacy_class(m24, p, 200000))
      if (partner_set.insert(q).second) partners.push_back(std::move(q));
  }
  auto regular = [](const std::vector<Perm>& els) {
    for (const Perm& p : els)
      if (!p.is_identity() && p.num_fixed_points() != 0) return false;
    return true;
  };
  return anchored_classes(m24, anchors, partners, profile_for(StabilizerType::kS4),
                          regular);
}

// ---------------------------------------------------------------------------
// S12: S4 subgroups meeting A11 trivially

// Any such K holds a regular A4 as K n A12, so the regular A4 classes of
// A12 anchor the search and K lives inside N_S12(A4).
std::vector<SmallSubgroup> s4_complement_classes_s12(const PermGroup& s12,
                                                     const PermGroup& a11) {
  std::vector<Perm> alt_gens;  // A12 as a subgroup of S12
  uint32_t n = s12.degree();
  {
    std::vector<uint32_t> c3(n), cyc(n);
    std::iota(c3.begin(), c3.end(), 0u);
    std::iota(cyc.begin(), cyc.end(), 0u);
    c3[0] = 1; c3[1] = 2; c3[2] = 0;
    for (uint32_t i = 1; i + 1 < n; ++i) cyc[i] = i + 1;
    cyc[n - 1] = 1;
    alt_gens = {Perm(c3), Perm(cyc)};
  }
  PermGroup a12 = PermGroup::from_generators(alt_gens);
  PermGroup a11_in = a12.point_stabilizer(n - 1);
  std::vector<SubgroupClassInfo> reg_a4 =
      complement_classes(a12, a11_in, StabilizerType::kA4);

  std::vector<SmallSubgroup> reps;
  std::vector<std::string> rep_invariants;
  std::unordered_set<std::pair<uint64_t, uint64_t>, KeyHash> seen;
  for (const SubgroupClassInfo& cls : reg_a4) {
    PermGroup a4 = cls.rep.to_group();
    PermGroup norm = normalizer(s12, a4);
    std::vector<Perm> norm_els = norm.elements(100000);
    std::sort(norm_els.begin(), norm_els.end());
    for (const Perm& t : norm_els) {
      if (cls.rep.contains(t)) continue;
      std::vector<Perm> gens = cls.rep.generators;
      gens.push_back(t);
      std::vector<Perm> closure;
      if (!small_closure(gens, 24, closure)) continue;
      if (closure.size() != 24) continue;
      bool has_order4 = false;
      for (const Perm& p : closure)
        if (p.order() == 4) {
          has_order4 = true;
          break;
        }
      if (!has_order4) continue;  // A4 x C2, not S4
      uint64_t meet = 0;
      for (const Perm& p : closure)
        if (a11.contains(p)) ++meet;
      if (meet != 1) continue;
      std::vector<Perm> sorted = closure;
      std::sort(sorted.begin(), sorted.end());
      if (!seen.insert(subgroup_key(sorted)).second) continue;
      SmallSubgroup cand = make_subgroup(std::move(sorted),
                                         generating_pair(closure, 24));
      std::string inv = subgroup_invariant(cand);
      bool fresh = true;
      for (size_t i = 0; i < reps.size(); ++i) {
        if (rep_invariants[i] != inv) continue;
        if (transporter(s12, cand.to_group(), reps[i].to_group())) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        reps.push_back(std::move(cand));
        rep_invariants.push_back(std::move(inv));
      }
    }
  }
  std::sort(reps.begin(), reps.end(),
            [](const SmallSubgroup& a, const SmallSubgroup& b) {
              return a.elements < b.elements;
            });
  return reps;
}

// ---------------------------------------------------------------------------
// Feasibility search

// Index-4 subgroups of K; for K = S4 these are the four S3, for K = A4 the
// four C3, and in both cases K acts 2-transitively on the cosets.
std::vector<SmallSubgroup> index4_subgroups(const SmallSubgroup& k) {
  size_t target = k.order() / 4;
  std::vector<SmallSubgroup> out;
  std::unordered_set<std::pair<uint64_t, uint64_t>, KeyHash> seen;
  std::vector<Perm> closure;
  for (const Perm& a : k.elements) {
    if (a.is_identity()) continue;
    for (const Perm& b : k.elements) {
      if (!small_closure({a, b}, target, closure)) continue;
      if (closure.size() != target) continue;
      std::vector<Perm> sorted = closure;
      std::sort(sorted.begin(), sorted.end());
      if (seen.insert(subgroup_key(sorted)).second)
        out.push_back(make_subgroup(std::move(sorted), {a, b}));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SmallSubgroup& x, const SmallSubgroup& y) {
              return x.elements < y.elements;
            });
  return out;
}

// K acting on the 4 cosets of L: transitive with a coset stabilizer still
// transitive on the remaining three.
bool coset_action_two_transitive(const SmallSubgroup& k, const SmallSubgroup& l) {
  std::vector<std::vector<Perm>> cosets;  // as sorted element lists
  std::vector<char> taken(k.elements.size(), 0);
  for (size_t i = 0; i < k.elements.size(); ++i) {
    if (taken[i]) continue;
    std::vector<Perm> coset;
    for (const Perm& e : l.elements) coset.push_back(compose(e, k.elements[i]));
    std::sort(coset.begin(), coset.end());
    for (const Perm& c : coset) {
      auto it = std::lower_bound(k.elements.begin(), k.elements.end(), c);
      taken[it - k.elements.begin()] = 1;
    }
    cosets.push_back(std::move(coset));
  }
  if (cosets.size() != 4) return false;
  auto coset_index = [&](const Perm& x) {
    for (size_t ci = 0; ci < cosets.size(); ++ci)
      if (std::binary_search(cosets[ci].begin(), cosets[ci].end(), x)) return ci;
    return cosets.size();
  };
  // Orbit of (0, 1) under right multiplication must cover all 12 ordered
  // pairs of distinct cosets.
  std::set<std::pair<size_t, size_t>> orbit;
  std::vector<std::pair<size_t, size_t>> queue{{0, 1}};
  orbit.insert({0, 1});
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& g : k.generators) {
      size_t a = coset_index(compose(cosets[queue[qi].first][0], g));
      size_t b = coset_index(compose(cosets[queue[qi].second][0], g));
      if (orbit.insert({a, b}).second) queue.push_back({a, b});
    }
  return orbit.size() == 12;
}

struct FeasibilityContext {
  const PermGroup& a;
  const SmallSubgroup& k;
  PermGroup n_of_k;
  std::unordered_set<Perm, PermHash> k_set;

  FeasibilityContext(const PermGroup& amb, const SmallSubgroup& kk)
      : a(amb), k(kk), n_of_k(normalizer(amb, kk.to_group())),
        k_set(kk.elements.begin(), kk.elements.end()) {}

  bool feasible(const Perm& g, std::vector<Perm>* meet_out = nullptr) {
    if (g.is_identity() || !g.is_two_element()) return false;
    if (!k_set.count(compose(g, g))) return false;
    if (n_of_k.contains(g)) return false;
    Perm ginv = inverse(g);
    std::vector<Perm> meet;
    for (const Perm& p : k.elements)
      if (k_set.count(conjugate(p, ginv))) meet.push_back(p);
    if (meet.size() * 4 != k.order()) return false;
    std::vector<Perm> gens = k.generators;
    gens.push_back(g);
    if (PermGroup::from_generators(gens).order() != a.order()) return false;
    if (meet_out) *meet_out = std::move(meet);
    return true;
  }
};

}  // namespace

std::vector<Perm> feasible_elements(const PermGroup& a, const SmallSubgroup& k,
                                    FeasibleStrategy strategy) {
  if (k.order() != 12 && k.order() != 24)
    throw Error(ErrorKind::kPrecondition, "feasible_elements: |K| must be 12 or 24");
  for (const Perm& p : k.generators)
    if (!a.contains(p))
      throw Error(ErrorKind::kNotASubgroup, "feasible_elements: K is not inside A");
  if (strategy == FeasibleStrategy::kAuto)
    strategy = a.order() <= kEnumerableCap ? FeasibleStrategy::kDirectScan
                                           : FeasibleStrategy::kAnchored;

  FeasibilityContext ctx(a, k);
  std::vector<SmallSubgroup> ls = index4_subgroups(k);
  for (const SmallSubgroup& l : ls)
    if (!coset_action_two_transitive(k, l))
      throw Error(ErrorKind::kVerification,
                  "index-4 coset action unexpectedly not 2-transitive");

  std::vector<Perm> delta;
  if (strategy == FeasibleStrategy::kDirectScan) {
    a.for_each_element(
        [&](const Perm& g) {
          if (ctx.feasible(g)) delta.push_back(g);
        },
        kEnumerableCap);
  } else {
    // Any feasible g normalizes L = K n K^g (g^2 lies in K), so scanning
    // the normalizers of the four index-4 subgroups is exhaustive.
    std::unordered_set<Perm, PermHash> seen;
    for (const SmallSubgroup& l : ls) {
      PermGroup n_of_l = normalizer(a, l.to_group());
      std::vector<Perm> candidates = n_of_l.elements(2000000);
      std::sort(candidates.begin(), candidates.end());
      for (const Perm& g : candidates) {
        if (seen.count(g)) continue;
        std::vector<Perm> meet;
        if (!ctx.feasible(g, &meet)) continue;
        if (meet != l.elements) continue;  // counted under its own anchor
        seen.insert(g);
        delta.push_back(g);
      }
    }
  }
  std::sort(delta.begin(), delta.end());
  return delta;
}

std::vector<std::vector<Perm>> delta_orbits(const SmallSubgroup& k,
                                            const std::vector<Perm>& delta) {
  std::unordered_set<Perm, PermHash> remaining(delta.begin(), delta.end());
  std::vector<std::vector<Perm>> orbits;
  std::vector<Perm> sorted_delta = delta;
  std::sort(sorted_delta.begin(), sorted_delta.end());
  for (const Perm& d : sorted_delta) {
    if (!remaining.count(d)) continue;
    std::vector<Perm> orbit{d};
    std::unordered_set<Perm, PermHash> in_orbit{d};
    for (size_t qi = 0; qi < orbit.size(); ++qi)
      for (const Perm& g : k.generators) {
        Perm e = conjugate(orbit[qi], g);
        if (!remaining.count(e))
          throw Error(ErrorKind::kVerification,
                      "delta is not closed under K-conjugation");
        if (in_orbit.insert(e).second) orbit.push_back(std::move(e));
      }
    for (const Perm& e : orbit) remaining.erase(e);
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const std::vector<Perm>& a, const std::vector<Perm>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.front() < b.front();
            });
  return orbits;
}

std::vector<RegularObstructionClass> regular_complement_obstruction(
    const PermGroup& m11_deg12) {
  std::vector<RegularObstructionClass> out;
  for (const SmallSubgroup& rep : find_subgroup_classes(m11_deg12, StabilizerType::kA4)) {
    RegularObstructionClass cls;
    cls.rep = rep;
    PermGroup grp = rep.to_group();
    cls.direct_orbit_count = grp.orbits().size();
    cls.burnside_count = burnside_orbit_count(grp);
    for (const Perm& p : rep.elements) {
      if (p.order() == 2) cls.involution_fixed_points = p.num_fixed_points();
      if (p.order() == 3) cls.order3_fixed_points = p.num_fixed_points();
    }
    for (const Perm& p : rep.elements) {
      if (p.order() == 2 && p.num_fixed_points() != cls.involution_fixed_points)
        throw Error(ErrorKind::kVerification, "involution fixed-point profile not constant");
      if (p.order() == 3 && p.num_fixed_points() != cls.order3_fixed_points)
        throw Error(ErrorKind::kVerification, "order-3 fixed-point profile not constant");
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Perm> extract_connection_set(const Graph& g, const PermGroup& r) {
  if (r.degree() != g.vertex_count())
    throw Error(ErrorKind::kDegreeMismatch, "extract_connection_set: degree mismatch");
  if (r.order() != g.vertex_count() || !r.is_transitive())
    throw Error(ErrorKind::kNotRegular, "extract_connection_set: R is not regular");
  PermGroup chain = PermGroup::with_base_prefix(r.generators(), {0});
  std::vector<Perm> s;
  for (uint32_t u : g.neighbors(0)) s.push_back(chain.transversal_element(0, u));
  std::sort(s.begin(), s.end());
  for (const Perm& x : s) {
    if (x.is_identity())
      throw Error(ErrorKind::kVerification, "connection set contains the identity");
    if (!std::binary_search(s.begin(), s.end(), inverse(x)))
      throw Error(ErrorKind::kVerification, "connection set is not inverse-closed");
  }
  return s;
}

NormalityResult normality_check(const PermGroup& aut, const PermGroup& r) {
  if (r.degree() != aut.degree())
    throw Error(ErrorKind::kDegreeMismatch, "normality_check: degree mismatch");
  for (const Perm& x : r.generators())
    if (!aut.contains(x))
      throw Error(ErrorKind::kNotASubgroup, "normality_check: R is not inside Aut");
  NormalityResult res;
  for (const Perm& a : aut.generators())
    for (const Perm& x : r.generators()) {
      if (!r.contains(conjugate(x, a))) {
        res.normal = false;
        res.witness_automorphism = a;
        res.witness_element = x;
        return res;
      }
    }
  res.normal = true;
  return res;
}

// ---------------------------------------------------------------------------
// Case runners

namespace {

void add_claim(std::vector<Claim>& claims, const std::string& name,
               int64_t expected, int64_t observed) {
  claims.push_back({name, expected, observed, expected == observed});
}

uint64_t factorial_u64(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Context {
  std::map<std::string, GroupSpec> groups;

  const PermGroup& group(const std::string& name) {
    auto it = groups.find(name);
    if (it == groups.end()) it = groups.emplace(name, load_group(name)).first;
    return it->second.group;
  }

  PermGroup resolve_point_group(const std::string& tag) {
    size_t colon = tag.find(':');
    if (colon == std::string::npos) return group(tag);
    std::string base = tag.substr(0, colon);
    std::string rest = tag.substr(colon + 1);
    if (rest.rfind("stab:", 0) == 0) {
      uint32_t pt = static_cast<uint32_t>(std::stoul(rest.substr(5)));
      return group(base).point_stabilizer(pt);
    }
    if (rest.rfind("embed:", 0) == 0) {
      uint32_t deg = static_cast<uint32_t>(std::stoul(rest.substr(6)));
      const PermGroup& small = group(base);
      std::vector<Perm> gens;
      for (const Perm& g : small.generators()) {
        std::vector<uint32_t> img(deg);
        std::iota(img.begin(), img.end(), 0u);
        for (uint32_t i = 0; i < small.degree(); ++i) img[i] = g[i];
        gens.push_back(Perm(std::move(img)));
      }
      return PermGroup::from_generators(gens);
    }
    throw Error(ErrorKind::kUnknownGroup, "bad point-group tag: " + tag);
  }

  // Shared core of the leading M12:2 case.
  struct S4Core {
    std::vector<SubgroupClassInfo> classes;
    SmallSubgroup k;
    uint64_t normalizer_order = 0;
    std::vector<Perm> delta;
    std::vector<std::vector<Perm>> orbits;
    CosetSpace space;
  };
  std::optional<S4Core> s4core;

  const S4Core& s4_core() {
    if (s4core) return *s4core;
    S4Core core;
    const PermGroup& amb = group("M12.2.deg24");
    const PermGroup& m11 = group("M11.deg24");
    core.classes = complement_classes(amb, m11, StabilizerType::kS4);
    if (core.classes.size() != 1)
      throw Error(ErrorKind::kVerification, "expected a unique S4 complement class");
    core.k = core.classes[0].rep;
    core.normalizer_order = normalizer(amb, core.k.to_group()).order();
    core.delta = feasible_elements(amb, core.k);
    core.orbits = delta_orbits(core.k, core.delta);
    core.space = CosetSpace::build(amb, core.k.to_group());
    s4core = std::move(core);
    return *s4core;
  }
};

// The image of an arbitrary group element on the coset space.
Perm action_image(const CosetSpace& space, const Perm& m) {
  std::vector<uint32_t> img(space.index());
  for (uint32_t v = 0; v < space.index(); ++v)
    img[v] = space.index_of(compose(space.representatives()[v], m));
  return Perm(std::move(img));
}

bool two_transitive_on_points(const PermGroup& g) {
  if (g.degree() < 2) return false;
  std::vector<Perm> els = g.elements(10000);
  std::set<std::pair<uint32_t, uint32_t>> orbit;
  std::vector<std::pair<uint32_t, uint32_t>> queue{{0, 1}};
  orbit.insert({0, 1});
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& e : g.generators()) {
      std::pair<uint32_t, uint32_t> img{e[queue[qi].first], e[queue[qi].second]};
      if (orbit.insert(img).second) queue.push_back(img);
    }
  return orbit.size() == static_cast<size_t>(g.degree()) * (g.degree() - 1);
}

struct CertifyOutput {
  GraphCertificate cert;
  Graph graph;
  CanonicalForm form;
};

CertifyOutput certify_graph(const CosetSpace& space, const Perm& g,
                            const std::string& label, const PermGroup& m11_24) {
  CertifyOutput out;
  GraphCertificate& cert = out.cert;
  cert.label = label;
  cert.coset_element = g;
  out.graph = coset_graph(space, g);
  cert.vertex_count = out.graph.vertex_count();
  uint32_t valency = 0;
  if (!out.graph.is_regular(&valency))
    throw Error(ErrorKind::kVerification, "coset graph is not regular");
  cert.valency = valency;
  cert.connected = out.graph.is_connected();

  const GroupAction& act = space.action();
  cert.s_transitivity = s_transitivity(out.graph, act);

  const PermGroup& image = space.image_group();
  cert.vertex_stabilizer_order = image.order() / out.graph.vertex_count();
  PermGroup local = local_action(out.graph, act, 0);
  cert.local_action_order = local.order();
  cert.local_action_symmetric = local.order() == factorial_u64(valency);
  cert.local_two_transitive = two_transitive_on_points(local);

  CanonicalResult canon = canonicalize(out.graph);
  out.form = canon.form;
  cert.aut_order = canon.aut.order();
  cert.certificate_hash = canon.form.certificate_hash;
  cert.aut_contains_action = true;
  for (const Perm& a : act.images)
    if (!canon.aut.contains(a)) cert.aut_contains_action = false;

  // Regular point group (M11 inside the ambient group) on the vertices.
  std::vector<Perm> r_gens;
  for (const Perm& m : m11_24.generators()) r_gens.push_back(action_image(space, m));
  PermGroup r = PermGroup::from_generators(r_gens);
  cert.regular_point_group_found =
      r.order() == out.graph.vertex_count() && r.is_transitive();
  if (cert.regular_point_group_found) {
    std::vector<Perm> s = extract_connection_set(out.graph, r);
    cert.connection_set_size = static_cast<uint32_t>(s.size());
    cert.connection_set_inverse_closed = true;  // extract checks it
    cert.connection_set_generates =
        PermGroup::from_generators(s).order() == r.order();
    // Pull the connection set back to the abstract point group: the unique
    // element of M11 in each coset K r_u.
    std::vector<Perm> s_abs;
    for (uint32_t u : out.graph.neighbors(0)) {
      std::optional<Perm> found;
      for (const Perm& k : space.subgroup_elements()) {
        Perm candidate = compose(k, space.representatives()[u]);
        if (m11_24.contains(candidate)) {
          if (found)
            throw Error(ErrorKind::kVerification, "coset meets M11 more than once");
          found = std::move(candidate);
        }
      }
      if (!found)
        throw Error(ErrorKind::kVerification, "coset misses the regular subgroup");
      s_abs.push_back(std::move(*found));
    }
    CayleyGraph cay = cayley_graph(m11_24, s_abs);
    cert.cayley_isomorphic = are_isomorphic(cay.graph, out.graph).has_value();
    NormalityResult nr = normality_check(canon.aut, r);
    cert.non_normal = !nr.normal && nr.witness_automorphism.has_value();
  }
  return out;
}

SigmaReport run_sigma(Context& ctx, const SmallSubgroup& a4, const Perm& g1,
                      const Graph& gamma_delta1, const CosetSpace& s4_space) {
  SigmaReport rep;
  const PermGroup& m12 = ctx.group("M12.deg24");
  CosetSpace star_space = CosetSpace::build(m12, a4.to_group());
  Graph star = coset_graph(star_space, g1);
  rep.vertices = star.vertex_count();
  if (star.vertex_count() != gamma_delta1.vertex_count()) {
    rep.failure = "vertex counts differ";
    return rep;
  }
  // sigma: A4 x -> S4 x.
  std::vector<uint32_t> sigma(star.vertex_count());
  std::vector<char> hit(star.vertex_count(), 0);
  for (uint32_t v = 0; v < star.vertex_count(); ++v) {
    sigma[v] = s4_space.index_of(star_space.representatives()[v]);
    if (hit[sigma[v]]) {
      rep.failure = "sigma is not injective";
      return rep;
    }
    hit[sigma[v]] = 1;
  }
  if (sigma[0] != 0) {
    rep.failure = "sigma does not fix the base coset";
    return rep;
  }
  for (auto [u, v] : star.edges()) {
    if (!gamma_delta1.adjacent(sigma[u], sigma[v])) {
      rep.failure = "sigma drops an edge";
      return rep;
    }
    ++rep.edges_checked;
  }
  if (rep.edges_checked != gamma_delta1.edge_count()) {
    rep.failure = "edge counts differ";
    return rep;
  }
  rep.ok = true;
  return rep;
}

std::vector<SubgroupClassInfo> subgroup_classes_with_sizes(const PermGroup& g,
                                                           StabilizerType type) {
  std::vector<SubgroupClassInfo> out;
  if (g.order() <= kEnumerableCap) {
    std::vector<Perm> elements = g.elements(kEnumerableCap);
    for (auto& [rep, size] : conjugation_classes(g, scan_all_subgroups(elements, type)))
      out.push_back({rep, size, 0});
    return out;
  }
  for (const SmallSubgroup& rep : find_subgroup_classes(g, type)) {
    uint64_t norm = normalizer(g, rep.to_group()).order();
    out.push_back({rep, g.order() / norm, 0});
  }
  return out;
}

SearchReport run_m12_2_s4(Context& ctx, const CaseSpec& spec) {
  SearchReport rep;
  rep.spec = spec;
  const auto& core = ctx.s4_core();
  rep.k_classes = core.classes;
  rep.normalizer_order = core.normalizer_order;
  rep.feasible.push_back(core.delta);
  rep.delta_orbit_partition.push_back(core.orbits);

  add_claim(rep.claims, "s4_complement_class_count", 1,
            static_cast<int64_t>(core.classes.size()));
  add_claim(rep.claims, "k_order", 24, static_cast<int64_t>(core.k.order()));
  add_claim(rep.claims, "k_normalizer_order", 24,
            static_cast<int64_t>(core.normalizer_order));
  add_claim(rep.claims, "feasible_two_element_count", 16,
            static_cast<int64_t>(core.delta.size()));
  add_claim(rep.claims, "delta_orbit_count", 2,
            static_cast<int64_t>(core.orbits.size()));
  if (core.orbits.size() == 2) {
    add_claim(rep.claims, "delta_orbit_size_1", 12,
              static_cast<int64_t>(core.orbits[0].size()));
    add_claim(rep.claims, "delta_orbit_size_2", 4,
              static_cast<int64_t>(core.orbits[1].size()));
  }

  const PermGroup& m11 = ctx.group("M11.deg24");
  std::vector<CertifyOutput> outs;
  for (size_t i = 0; i < core.orbits.size(); ++i) {
    Perm gi = core.orbits[i].front();
    std::string label = "delta" + std::to_string(i + 1);
    outs.push_back(certify_graph(core.space, gi, label, m11));
    const GraphCertificate& c = outs.back().cert;
    rep.graphs_built.push_back(c);
    std::string p = label + "_";
    add_claim(rep.claims, p + "vertices", 7920, c.vertex_count);
    add_claim(rep.claims, p + "valency", 4, c.valency);
    add_claim(rep.claims, p + "connected", 1, c.connected);
    add_claim(rep.claims, p + "s_transitivity", 2, c.s_transitivity);
    add_claim(rep.claims, p + "vertex_stabilizer_order", 24,
              static_cast<int64_t>(c.vertex_stabilizer_order));
    add_claim(rep.claims, p + "local_action_order", 24,
              static_cast<int64_t>(c.local_action_order));
    add_claim(rep.claims, p + "local_action_symmetric", 1, c.local_action_symmetric);
    add_claim(rep.claims, p + "aut_order", 190080, static_cast<int64_t>(c.aut_order));
    add_claim(rep.claims, p + "aut_contains_coset_action", 1, c.aut_contains_action);
    add_claim(rep.claims, p + "regular_m11_found", 1, c.regular_point_group_found);
    add_claim(rep.claims, p + "connection_set_size", 4, c.connection_set_size);
    add_claim(rep.claims, p + "connection_set_generates_m11", 1,
              c.connection_set_generates);
    add_claim(rep.claims, p + "cayley_graph_isomorphic", 1, c.cayley_isomorphic);
    add_claim(rep.claims, p + "non_normal", 1, c.non_normal);
  }
  if (outs.size() == 2) {
    add_claim(rep.claims, "canonical_forms_differ", 1,
              !(outs[0].form == outs[1].form));
    add_claim(rep.claims, "base_vertex_neighborhoods_differ", 1,
              outs[0].graph.neighbors(0) != outs[1].graph.neighbors(0));
    add_claim(rep.claims, "graphs_non_isomorphic", 1,
              !are_isomorphic(outs[0].graph, outs[1].graph).has_value());
  }
  rep.verdict = "graphs";
  return rep;
}

SearchReport run_m12_a4(Context& ctx, const CaseSpec& spec) {
  SearchReport rep;
  rep.spec = spec;
  const PermGroup& m12 = ctx.group("M12.deg24");
  const PermGroup& m11 = ctx.group("M11.deg24");
  rep.k_classes = complement_classes(m12, m11, StabilizerType::kA4);
  add_claim(rep.claims, "a4_complement_class_count", 1,
            static_cast<int64_t>(rep.k_classes.size()));

  const auto& core = ctx.s4_core();
  // The A4 sitting inside the distinguished S4 complement.
  std::vector<Perm> a4_els;
  for (const Perm& p : core.k.elements)
    if (m12.contains(p)) a4_els.push_back(p);
  add_claim(rep.claims, "s4_meets_m12_in_order", 12,
            static_cast<int64_t>(a4_els.size()));
  SmallSubgroup a4 = make_subgroup(a4_els, generating_pair(a4_els, 12));
  if (!rep.k_classes.empty()) {
    bool same_class =
        transporter(m12, a4.to_group(), rep.k_classes[0].rep.to_group()).has_value();
    add_claim(rep.claims, "a4_matches_complement_class", 1, same_class);
  }

  std::vector<Perm> delta = feasible_elements(m12, a4);
  rep.feasible.push_back(delta);
  rep.normalizer_order = normalizer(m12, a4.to_group()).order();
  auto orbits = delta_orbits(a4, delta);
  rep.delta_orbit_partition.push_back(orbits);
  add_claim(rep.claims, "feasible_two_element_count", 12,
            static_cast<int64_t>(delta.size()));
  add_claim(rep.claims, "delta_orbit_count", 1, static_cast<int64_t>(orbits.size()));
  if (!orbits.empty())
    add_claim(rep.claims, "delta_orbit_size_1", 12,
              static_cast<int64_t>(orbits[0].size()));

  // Every element lands inside the first orbit of the S4 search.
  std::unordered_set<Perm, PermHash> delta1(core.orbits[0].begin(),
                                            core.orbits[0].end());
  bool contained = true;
  for (const Perm& d : delta)
    if (!delta1.count(d)) contained = false;
  add_claim(rep.claims, "delta_contained_in_delta1", 1, contained);
  add_claim(rep.claims, "delta_equals_delta1", 1,
            contained && delta.size() == core.orbits[0].size());

  // sigma: A4 x -> S4 x is an isomorphism onto the first graph.
  Perm g1 = core.orbits[0].front();
  add_claim(rep.claims, "g1_inside_m12", 1, m12.contains(g1));
  Graph gamma1 = coset_graph(core.space, g1);
  rep.sigma = run_sigma(ctx, a4, g1, gamma1, core.space);
  add_claim(rep.claims, "sigma_is_isomorphism", 1, rep.sigma.ok);
  add_claim(rep.claims, "sigma_edges_checked", 15840,
            static_cast<int64_t>(rep.sigma.edges_checked));

  CertifyOutput star = certify_graph(CosetSpace::build(m12, a4.to_group()), g1,
                                     "delta1-star", m11);
  rep.graphs_built.push_back(star.cert);
  add_claim(rep.claims, "star_vertices", 7920, star.cert.vertex_count);
  add_claim(rep.claims, "star_valency", 4, star.cert.valency);
  add_claim(rep.claims, "star_connected", 1, star.cert.connected);
  add_claim(rep.claims, "star_s_transitivity", 2, star.cert.s_transitivity);
  add_claim(rep.claims, "star_vertex_stabilizer_order", 12,
            static_cast<int64_t>(star.cert.vertex_stabilizer_order));
  add_claim(rep.claims, "star_local_action_order", 12,
            static_cast<int64_t>(star.cert.local_action_order));
  add_claim(rep.claims, "star_local_two_transitive", 1,
            star.cert.local_two_transitive);
  add_claim(rep.claims, "star_aut_order", 190080,
            static_cast<int64_t>(star.cert.aut_order));
  add_claim(rep.claims, "star_non_normal", 1, star.cert.non_normal);
  rep.verdict = "graphs";
  return rep;
}

SearchReport run_complement_empty(Context& ctx, const CaseSpec& spec,
                                  const std::string& label) {
  SearchReport rep;
  rep.spec = spec;
  const PermGroup& amb = ctx.group(spec.ambient);
  PermGroup point = ctx.resolve_point_group(spec.point_group);
  rep.k_classes = complement_classes(amb, point, spec.stab_type);
  add_claim(rep.claims, label + "_classes_found", 1, !rep.k_classes.empty());
  uint64_t total = 0;
  for (const SubgroupClassInfo& cls : rep.k_classes) {
    std::vector<Perm> delta = feasible_elements(amb, cls.rep);
    total += delta.size();
    rep.feasible.push_back(std::move(delta));
  }
  add_claim(rep.claims, "feasible_two_element_total", 0, static_cast<int64_t>(total));
  rep.verdict = total == 0 ? "empty" : "graphs";
  return rep;
}

SearchReport run_quotient(Context& ctx, const CaseSpec& spec,
                          int64_t expected_classes) {
  SearchReport rep;
  rep.spec = spec;
  const PermGroup& t = ctx.group(spec.ambient);
  rep.k_classes = subgroup_classes_with_sizes(t, spec.stab_type);
  add_claim(rep.claims, "s4_class_count", expected_classes,
            static_cast<int64_t>(rep.k_classes.size()));
  uint64_t total = 0;
  for (const SubgroupClassInfo& cls : rep.k_classes) {
    std::vector<Perm> delta = feasible_elements(t, cls.rep);
    total += delta.size();
    rep.feasible.push_back(std::move(delta));
  }
  add_claim(rep.claims, "feasible_two_element_total", 0, static_cast<int64_t>(total));
  rep.verdict = total == 0 ? "empty" : "graphs";
  return rep;
}

SearchReport run_obstruction(Context& ctx, const CaseSpec& spec) {
  SearchReport rep;
  rep.spec = spec;
  const PermGroup& m11 = ctx.group("M11.deg12");
  rep.obstruction = regular_complement_obstruction(m11);
  add_claim(rep.claims, "a4_classes_found", 1, !rep.obstruction.empty());
  bool orbits4 = true, burnside_match = true, inv4 = true, ord3 = true;
  for (const RegularObstructionClass& cls : rep.obstruction) {
    if (cls.direct_orbit_count != 4) orbits4 = false;
    if (cls.burnside_count != cls.direct_orbit_count) burnside_match = false;
    if (cls.involution_fixed_points != 4) inv4 = false;
    if (cls.order3_fixed_points != 3) ord3 = false;
  }
  add_claim(rep.claims, "every_class_has_four_orbits", 1, orbits4);
  add_claim(rep.claims, "burnside_matches_direct_count", 1, burnside_match);
  add_claim(rep.claims, "involutions_fix_four_points", 1, inv4);
  add_claim(rep.claims, "order3_elements_fix_three_points", 1, ord3);
  rep.verdict = "empty";
  return rep;
}

SearchReport dispatch_case(Context& ctx, const CaseSpec& spec) {
  if (spec.id == "m12.2-s4") return run_m12_2_s4(ctx, spec);
  if (spec.id == "m12-a4") return run_m12_a4(ctx, spec);
  if (spec.id == "m24-s4") return run_complement_empty(ctx, spec, "regular_s4");
  if (spec.id == "a12-a4") return run_complement_empty(ctx, spec, "regular_a4");
  if (spec.id == "s12-s4") return run_complement_empty(ctx, spec, "s4_complement");
  if (spec.id == "m11-s4-quotient") return run_quotient(ctx, spec, 1);
  if (spec.id == "m12-s4-quotient") return run_quotient(ctx, spec, 4);
  if (spec.id == "a12-s4-quotient") return run_quotient(ctx, spec, 24);
  if (spec.id == "m11-a4-regularity") return run_obstruction(ctx, spec);
  throw Error(ErrorKind::kUnknownGroup, "unknown case id: " + spec.id);
}

}  // namespace

const std::vector<CaseSpec>& case_list() {
  static const std::vector<CaseSpec> cases = {
      {"m12.2-s4", "M12.2.deg24", "M11.deg24", StabilizerType::kS4, true,
       CaseMode::kComplementSearch},
      {"m12-a4", "M12.deg24", "M11.deg24", StabilizerType::kA4, true,
       CaseMode::kComplementSearch},
      {"m24-s4", "M24.deg24", "M24.deg24:stab:0", StabilizerType::kS4, true,
       CaseMode::kComplementSearch},
      {"a12-a4", "A12.deg12", "A12.deg12:stab:11", StabilizerType::kA4, true,
       CaseMode::kComplementSearch},
      {"s12-s4", "S12.deg12", "A11.deg11:embed:12", StabilizerType::kS4, true,
       CaseMode::kComplementSearch},
      {"m11-s4-quotient", "M11.deg11", "", StabilizerType::kS4, false,
       CaseMode::kQuotientSearch},
      {"m12-s4-quotient", "M12.deg12", "", StabilizerType::kS4, false,
       CaseMode::kQuotientSearch},
      {"a12-s4-quotient", "A12.deg12", "", StabilizerType::kS4, false,
       CaseMode::kQuotientSearch},
      {"m11-a4-regularity", "M11.deg12", "", StabilizerType::kA4, false,
       CaseMode::kQuotientSearch},
  };
  return cases;
}

SearchReport run_case(const CaseSpec& spec) {
  Context ctx;
  return dispatch_case(ctx, spec);
}

SearchReport run_case(const std::string& id) {
  for (const CaseSpec& spec : case_list())
    if (spec.id == id) return run_case(spec);
  throw Error(ErrorKind::kUnknownGroup, "unknown case id: " + id);
}

bool SearchReport::ok() const {
  for (const Claim& c : claims)
    if (!c.ok) return false;
  return true;
}

bool ClassificationReport::ok() const {
  for (const SearchReport& r : cases)
    if (!r.ok()) return false;
  for (const Claim& c : global_claims)
    if (!c.ok) return false;
  return true;
}

ClassificationReport run_all(unsigned threads) {
  ClassificationReport report;
  const auto& cases = case_list();
  Context shared;
  if (threads <= 1) {
    for (const CaseSpec& spec : cases)
      report.cases.push_back(dispatch_case(shared, spec));
  } else {
    // The first case populates the shared core the second one reads; the
    // rest are independent and run with private contexts.
    report.cases.push_back(dispatch_case(shared, cases[0]));
    std::vector<std::future<SearchReport>> futures;
    for (size_t i = 1; i < cases.size(); ++i) {
      futures.push_back(std::async(std::launch::async, [&cases, i, &shared]() {
        Context ctx;
        if (cases[i].id == "m12-a4") ctx = shared;
        return dispatch_case(ctx, cases[i]);
      }));
    }
    for (auto& f : futures) report.cases.push_back(f.get());
  }

  // Count distinct graphs (by canonical certificate) among the ones the
  // leading case produced.
  std::set<uint64_t> distinct_hashes;
  for (const SearchReport& r : report.cases)
    if (r.spec.id == "m12.2-s4")
      for (const GraphCertificate& c : r.graphs_built)
        distinct_hashes.insert(c.certificate_hash);
  report.total_graphs = static_cast<uint32_t>(distinct_hashes.size());
  add_claim(report.global_claims, "distinct_non_normal_graphs", 2,
            report.total_graphs);
  bool noniso = false, nonnormal = true, aut_ok = true, stab_ok = true;
  for (const SearchReport& r : report.cases) {
    if (r.spec.id != "m12.2-s4") continue;
    for (const Claim& c : r.claims)
      if (c.name == "graphs_non_isomorphic") noniso = c.ok;
    for (const GraphCertificate& c : r.graphs_built) {
      if (!c.non_normal) nonnormal = false;
      if (c.aut_order != 190080) aut_ok = false;
      if (c.vertex_stabilizer_order != 24) stab_ok = false;
    }
  }
  add_claim(report.global_claims, "graphs_pairwise_non_isomorphic", 1, noniso);
  add_claim(report.global_claims, "graphs_all_non_normal", 1, nonnormal);
  add_claim(report.global_claims, "aut_order_190080_each", 1, aut_ok);
  add_claim(report.global_claims, "vertex_stabilizer_s4_each", 1, stab_ok);
  bool cases_ok = true;
  for (const SearchReport& r : report.cases)
    if (!r.ok()) cases_ok = false;
  add_claim(report.global_claims, "all_cases_passed", 1, cases_ok);
  return report;
}

void verify_report_witnesses(const SearchReport& report) {
  Context ctx;
  const PermGroup& amb = ctx.group(report.spec.ambient);
  std::optional<PermGroup> point;
  if (!report.spec.point_group.empty())
    point = ctx.resolve_point_group(report.spec.point_group);

  for (size_t ci = 0; ci < report.k_classes.size(); ++ci) {
    const SubgroupClassInfo& cls = report.k_classes[ci];
    // The stored generators regenerate exactly the stored element list.
    std::vector<Perm> closure;
    if (!small_closure(cls.rep.generators, cls.rep.elements.size(), closure) ||
        closure.size() != cls.rep.elements.size())
      throw Error(ErrorKind::kVerification, "witness closure has the wrong order");
    std::sort(closure.begin(), closure.end());
    if (closure != cls.rep.elements)
      throw Error(ErrorKind::kVerification, "witness elements do not match closure");
    for (const Perm& p : cls.rep.elements)
      if (!amb.contains(p))
        throw Error(ErrorKind::kVerification, "witness subgroup leaves the ambient group");
    if (point) {
      uint64_t meet = 0;
      for (const Perm& p : cls.rep.elements)
        if (point->contains(p)) ++meet;
      if (meet != cls.point_group_intersection)
        throw Error(ErrorKind::kVerification, "witness intersection differs");
    }
    if (ci < report.feasible.size()) {
      std::unordered_set<Perm, PermHash> k_set(cls.rep.elements.begin(),
                                               cls.rep.elements.end());
      for (const Perm& g : report.feasible[ci]) {
        if (!g.is_two_element() || g.is_identity())
          throw Error(ErrorKind::kVerification, "witness g is not a 2-element");
        if (!k_set.count(compose(g, g)))
          throw Error(ErrorKind::kVerification, "witness g^2 is outside K");
        Perm ginv = inverse(g);
        uint64_t meet = 0;
        bool normalizes = true;
        for (const Perm& p : cls.rep.elements) {
          Perm conj = conjugate(p, ginv);
          if (k_set.count(conj)) ++meet;
          if (!k_set.count(conjugate(p, g))) normalizes = false;
        }
        if (normalizes)
          throw Error(ErrorKind::kVerification, "witness g normalizes K");
        if (meet * 4 != cls.rep.order())
          throw Error(ErrorKind::kVerification, "witness valency is not 4");
        std::vector<Perm> gens = cls.rep.generators;
        gens.push_back(g);
        if (PermGroup::from_generators(gens).order() != amb.order())
          throw Error(ErrorKind::kVerification, "witness g does not generate with K");
      }
    }
  }
  for (size_t ci = 0; ci < report.delta_orbit_partition.size(); ++ci) {
    size_t total = 0;
    for (const auto& orbit : report.delta_orbit_partition[ci]) {
      total += orbit.size();
      std::unordered_set<Perm, PermHash> orbit_set(orbit.begin(), orbit.end());
      for (const Perm& d : orbit)
        for (const Perm& kgen : report.k_classes[ci].rep.generators)
          if (!orbit_set.count(conjugate(d, kgen)))
            throw Error(ErrorKind::kVerification, "stored orbit is not K-closed");
    }
    if (ci < report.feasible.size() && total != report.feasible[ci].size())
      throw Error(ErrorKind::kVerification, "orbit partition does not cover delta");
  }
  for (const RegularObstructionClass& cls : report.obstruction) {
    PermGroup grp = cls.rep.to_group();
    if (grp.orbits().size() != cls.direct_orbit_count)
      throw Error(ErrorKind::kVerification, "stored orbit count differs");
    if (burnside_orbit_count(grp) != cls.burnside_count)
      throw Error(ErrorKind::kVerification, "stored Burnside count differs");
  }
  for (const GraphCertificate& cert : report.graphs_built) {
    // Rebuild the graph from its stored element and compare the basics.
    const SmallSubgroup* k = nullptr;
    for (const SubgroupClassInfo& cls : report.k_classes) {
      std::vector<Perm> gens = cls.rep.generators;
      gens.push_back(cert.coset_element);
      if (PermGroup::from_generators(gens).order() == amb.order()) {
        k = &cls.rep;
        break;
      }
    }
    if (report.spec.id == "m12-a4") continue;  // graph lives in the S4 space
    if (!k) throw Error(ErrorKind::kVerification, "certificate has no matching class");
    Graph g = coset_graph(amb, k->to_group(), cert.coset_element);
    uint32_t valency = 0;
    g.is_regular(&valency);
    if (g.vertex_count() != cert.vertex_count || valency != cert.valency ||
        g.is_connected() != cert.connected)
      throw Error(ErrorKind::kVerification, "certificate basics do not match");
    if (canonical_form(g).certificate_hash != cert.certificate_hash)
      throw Error(ErrorKind::kVerification, "certificate hash does not match");
  }
}

}  // namespace cayley
