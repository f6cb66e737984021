#include "cayley/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "cayley/error.hpp"

namespace cayley {

namespace {

constexpr uint32_t kUnset = UINT32_MAX;
constexpr uint64_t kElementCap = 200000;

// prof[p][i] = length of the cycle of p under perms[i].
std::vector<std::vector<uint32_t>> cycle_profiles(const std::vector<Perm>& perms,
                                                  uint32_t n) {
  std::vector<std::vector<uint32_t>> prof(n, std::vector<uint32_t>(perms.size()));
  std::vector<uint32_t> cyc;
  for (size_t i = 0; i < perms.size(); ++i) {
    std::vector<bool> done(n, false);
    for (uint32_t s = 0; s < n; ++s) {
      if (done[s]) continue;
      cyc.clear();
      uint32_t j = s;
      do {
        cyc.push_back(j);
        done[j] = true;
        j = perms[i][j];
      } while (j != s);
      for (uint32_t v : cyc) prof[v][i] = static_cast<uint32_t>(cyc.size());
    }
  }
  return prof;
}

std::vector<uint32_t> moved_points(const std::vector<Perm>& perms, uint32_t n) {
  std::vector<uint32_t> pts;
  for (uint32_t p = 0; p < n; ++p)
    for (const Perm& x : perms)
      if (x[p] != p) {
        pts.push_back(p);
        break;
      }
  return pts;
}

// Conjugation constraint solver.  Searches the point maps µ on the support
// of xs with µ(x_i(p)) = y_i(µ(p)) everywhere; each consistent support map
// is handed to the sink, which extends it inside the group and decides
// whether to stop.
class ConjSearch {
 public:
  ConjSearch(const std::vector<Perm>& xs, uint32_t n)
      : xs_(xs), n_(n), prof_x_(cycle_profiles(xs, n)) {
    std::vector<uint32_t> support = moved_points(xs, n);
    support_size_ = support.size();
    std::vector<bool> in_support(n, false);
    for (uint32_t p : support) in_support[p] = true;
    std::vector<bool> seen(n, false);
    for (uint32_t p : support) {
      if (seen[p]) continue;
      orbit_reps_.push_back(p);
      std::vector<uint32_t> queue{p};
      seen[p] = true;
      for (size_t qi = 0; qi < queue.size(); ++qi)
        for (const Perm& x : xs_) {
          uint32_t q = x[queue[qi]];
          if (!seen[q]) {
            seen[q] = true;
            queue.push_back(q);
          }
        }
    }
  }

  size_t support_size() const { return support_size_; }

  // Runs the search for one image tuple.  sink returns true to stop.
  bool run(const std::vector<Perm>& ys,
           const std::function<bool(const std::vector<uint32_t>&)>& sink) {
    ys_ = &ys;
    if (moved_points(ys, n_).size() != support_size_) return false;
    prof_y_ = cycle_profiles(ys, n_);
    mu_.assign(n_, kUnset);
    used_.assign(n_, false);
    sink_ = &sink;
    return dfs(0);
  }

 private:
  bool dfs(size_t rep_idx) {
    if (rep_idx == orbit_reps_.size()) return (*sink_)(mu_);
    uint32_t p = orbit_reps_[rep_idx];
    for (uint32_t q = 0; q < n_; ++q) {
      if (used_[q] || prof_y_[q] != prof_x_[p]) continue;
      size_t mark = trail_.size();
      if (propagate(p, q)) {
        if (dfs(rep_idx + 1)) {
          unwind(mark);
          return true;
        }
      }
      unwind(mark);
    }
    return false;
  }

  bool propagate(uint32_t p, uint32_t q) {
    size_t head = trail_.size();
    assign(p, q);
    while (head < trail_.size()) {
      uint32_t a = trail_[head++];
      uint32_t b = mu_[a];
      for (size_t i = 0; i < xs_.size(); ++i) {
        uint32_t a2 = xs_[i][a];
        uint32_t b2 = (*ys_)[i][b];
        if (mu_[a2] != kUnset) {
          if (mu_[a2] != b2) return false;
        } else {
          if (used_[b2]) return false;
          assign(a2, b2);
        }
      }
    }
    return true;
  }

  void assign(uint32_t p, uint32_t q) {
    mu_[p] = q;
    used_[q] = true;
    trail_.push_back(p);
  }

  void unwind(size_t mark) {
    while (trail_.size() > mark) {
      uint32_t p = trail_.back();
      trail_.pop_back();
      used_[mu_[p]] = false;
      mu_[p] = kUnset;
    }
  }

  const std::vector<Perm>& xs_;
  const std::vector<Perm>* ys_ = nullptr;
  uint32_t n_;
  size_t support_size_;
  std::vector<std::vector<uint32_t>> prof_x_, prof_y_;
  std::vector<uint32_t> orbit_reps_;
  std::vector<uint32_t> mu_;
  std::vector<bool> used_;
  std::vector<uint32_t> trail_;
  const std::function<bool(const std::vector<uint32_t>&)>* sink_ = nullptr;
};

// Completes a support map to an element of the group, walking a chain
// whose base was built to start with the support.
std::optional<Perm> extend_partial(const PermGroup& chain,
                                   std::vector<uint32_t> mu) {
  uint32_t n = chain.degree();
  Perm accum(n);
  for (size_t lvl = 0; lvl < chain.num_levels(); ++lvl) {
    uint32_t b = chain.base_point(lvl);
    uint32_t target = mu[b];
    if (target == kUnset) continue;
    const auto& orbit = chain.level_orbit(lvl);
    if (std::find(orbit.begin(), orbit.end(), target) == orbit.end())
      return std::nullopt;
    if (target != b) {
      Perm u = chain.transversal_element(lvl, target);
      Perm uinv = inverse(u);
      for (uint32_t p = 0; p < n; ++p)
        if (mu[p] != kUnset) mu[p] = uinv[mu[p]];
      accum = compose(u, accum);
    }
  }
  for (uint32_t p = 0; p < n; ++p)
    if (mu[p] != kUnset && mu[p] != p) return std::nullopt;
  return accum;
}

std::vector<Perm> nontrivial_gens(const std::vector<Perm>& gens) {
  std::vector<Perm> out;
  std::unordered_set<Perm, PermHash> seen;
  for (const Perm& g : gens)
    if (!g.is_identity() && seen.insert(g).second) out.push_back(g);
  return out;
}

// Candidate images in H for a generator: elements with the same ambient
// cycle type, in lexicographic order.
std::vector<Perm> type_matched(const std::vector<Perm>& pool, const Perm& x) {
  std::vector<uint32_t> want = x.cycle_type();
  std::vector<Perm> out;
  for (const Perm& y : pool)
    if (y.cycle_type() == want) out.push_back(y);
  return out;
}

struct ComboSearch {
  std::vector<Perm> xs;
  std::vector<std::vector<Perm>> candidates;

  ComboSearch(std::vector<Perm> gens, const std::vector<Perm>& pool) {
    xs = std::move(gens);
    // Most-constrained generator first.
    std::vector<std::vector<Perm>> cand;
    cand.reserve(xs.size());
    for (const Perm& x : xs) cand.push_back(type_matched(pool, x));
    std::vector<size_t> idx(xs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return cand[a].size() < cand[b].size();
    });
    std::vector<Perm> xs2;
    for (size_t i : idx) {
      xs2.push_back(xs[i]);
      candidates.push_back(std::move(cand[i]));
    }
    xs = std::move(xs2);
  }

  bool empty() const {
    for (const auto& c : candidates)
      if (c.empty()) return true;
    return false;
  }

  // Iterates all image tuples; visit returns true to stop.
  bool for_each(const std::function<bool(const std::vector<Perm>&)>& visit) const {
    std::vector<Perm> ys(xs.size(), Perm(0));
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
      if (i == xs.size()) return visit(ys);
      for (const Perm& y : candidates[i]) {
        ys[i] = y;
        if (rec(i + 1)) return true;
      }
      return false;
    };
    return rec(0);
  }
};

void require_subgroup(const PermGroup& g, const PermGroup& h, const char* what) {
  for (const Perm& x : h.generators())
    if (!g.contains(x)) throw Error(ErrorKind::kNotASubgroup, what);
}

}  // namespace

std::optional<Perm> transport_tuple(const PermGroup& g, const std::vector<Perm>& xs,
                                    const std::vector<Perm>& ys) {
  if (xs.size() != ys.size())
    throw Error(ErrorKind::kPrecondition, "transport_tuple: tuple sizes differ");
  for (const Perm& p : xs)
    if (p.degree() != g.degree())
      throw Error(ErrorKind::kDegreeMismatch, "transport_tuple: degree mismatch");
  for (const Perm& p : ys)
    if (p.degree() != g.degree())
      throw Error(ErrorKind::kDegreeMismatch, "transport_tuple: degree mismatch");

  ConjSearch search(xs, g.degree());
  std::vector<uint32_t> support = moved_points(xs, g.degree());
  PermGroup chain = support.empty()
                        ? g
                        : PermGroup::with_base_prefix(g.generators(), support);
  std::optional<Perm> result;
  search.run(ys, [&](const std::vector<uint32_t>& mu) {
    auto cand = extend_partial(chain, mu);
    if (!cand) return false;
    for (size_t i = 0; i < xs.size(); ++i)
      if (conjugate(xs[i], *cand) != ys[i]) return false;
    result = std::move(cand);
    return true;
  });
  return result;
}

std::optional<Perm> element_transporter(const PermGroup& g, const Perm& x,
                                        const Perm& y) {
  return transport_tuple(g, {x}, {y});
}

namespace {

// Shared all-solutions driver for normalizer/centralizer: collects the
// subgroup {g in G : xs^g is the prescribed tuple set}.
PermGroup conjugation_stabilizer(const PermGroup& g, const std::vector<Perm>& xs,
                                 const std::vector<Perm>& image_pool,
                                 std::vector<Perm> seed) {
  uint32_t n = g.degree();
  std::vector<uint32_t> support = moved_points(xs, n);
  PermGroup chain = support.empty()
                        ? g
                        : PermGroup::with_base_prefix(g.generators(), support);
  // Everything fixing the support pointwise conjugates each x to itself.
  for (const Perm& s : chain.strong_generators()) {
    bool fixes = true;
    for (uint32_t p : support)
      if (s[p] != p) {
        fixes = false;
        break;
      }
    if (fixes) seed.push_back(s);
  }
  seed = nontrivial_gens(seed);
  PermGroup result =
      seed.empty() ? PermGroup::trivial(n) : PermGroup::from_generators(seed);

  ComboSearch combos(xs, image_pool);
  if (combos.empty()) return result;
  ConjSearch search(combos.xs, n);
  combos.for_each([&](const std::vector<Perm>& ys) {
    search.run(ys, [&](const std::vector<uint32_t>& mu) {
      auto cand = extend_partial(chain, mu);
      if (!cand) return false;
      for (size_t i = 0; i < combos.xs.size(); ++i)
        if (conjugate(combos.xs[i], *cand) != ys[i]) return false;
      if (!result.contains(*cand)) {
        seed.push_back(*cand);
        result = PermGroup::from_generators(seed);
      }
      return false;  // keep enumerating
    });
    return false;
  });
  return result;
}

}  // namespace

PermGroup centralizer(const PermGroup& g, const Perm& x) {
  if (x.degree() != g.degree())
    throw Error(ErrorKind::kDegreeMismatch, "centralizer: degree mismatch");
  if (!g.contains(x))
    throw Error(ErrorKind::kPrecondition, "centralizer: element outside group");
  if (x.is_identity()) return g;
  return conjugation_stabilizer(g, {x}, {x}, {x});
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (h.degree() != g.degree())
    throw Error(ErrorKind::kDegreeMismatch, "normalizer: degree mismatch");
  require_subgroup(g, h, "normalizer: H is not a subgroup of G");
  std::vector<Perm> xs = nontrivial_gens(h.generators());
  if (xs.empty()) return g;
  if (h.order() > kElementCap)
    throw Error(ErrorKind::kCapExceeded, "normalizer: H too large to enumerate");
  std::vector<Perm> pool = h.elements(kElementCap);
  PermGroup result = conjugation_stabilizer(g, xs, pool, xs);
  for (const Perm& s : result.generators())
    for (const Perm& x : xs)
      if (!h.contains(conjugate(x, s)))
        throw Error(ErrorKind::kVerification, "normalizer: generator fails to normalize");
  return result;
}

std::optional<Perm> transporter(const PermGroup& g, const PermGroup& h1,
                                const PermGroup& h2) {
  if (h1.degree() != g.degree() || h2.degree() != g.degree())
    throw Error(ErrorKind::kDegreeMismatch, "transporter: degree mismatch");
  require_subgroup(g, h1, "transporter: H1 is not a subgroup of G");
  require_subgroup(g, h2, "transporter: H2 is not a subgroup of G");
  if (h1.order() != h2.order()) return std::nullopt;
  // Cheap isomorphism-invariant prefilters.
  auto orbit_sizes = [](const PermGroup& h) {
    std::vector<size_t> sizes;
    for (const auto& o : h.orbits()) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (orbit_sizes(h1) != orbit_sizes(h2)) return std::nullopt;
  if (h1.order() <= 10000) {
    auto type_multiset = [](const PermGroup& h) {
      std::vector<std::vector<uint32_t>> types;
      for (const Perm& e : h.elements(10000)) types.push_back(e.cycle_type());
      std::sort(types.begin(), types.end());
      return types;
    };
    if (type_multiset(h1) != type_multiset(h2)) return std::nullopt;
  }

  std::vector<Perm> xs = nontrivial_gens(h1.generators());
  if (xs.empty()) return Perm(g.degree());  // both trivial
  if (h2.order() > kElementCap)
    throw Error(ErrorKind::kCapExceeded, "transporter: H2 too large to enumerate");
  std::vector<Perm> pool = h2.elements(kElementCap);

  uint32_t n = g.degree();
  std::vector<uint32_t> support = moved_points(xs, n);
  PermGroup chain = support.empty()
                        ? g
                        : PermGroup::with_base_prefix(g.generators(), support);
  ComboSearch combos(xs, pool);
  if (combos.empty()) return std::nullopt;
  ConjSearch search(combos.xs, n);
  std::optional<Perm> result;
  combos.for_each([&](const std::vector<Perm>& ys) {
    return search.run(ys, [&](const std::vector<uint32_t>& mu) {
      auto cand = extend_partial(chain, mu);
      if (!cand) return false;
      for (size_t i = 0; i < combos.xs.size(); ++i)
        if (conjugate(combos.xs[i], *cand) != ys[i]) return false;
      // xs^g lands inside H2 and orders agree, so H1^g = H2.
      result = std::move(cand);
      return true;
    });
  });
  if (result)
    for (const Perm& x : h1.generators())
      if (!h2.contains(conjugate(x, *result)))
        throw Error(ErrorKind::kVerification, "transporter: bad conjugator");
  return result;
}

std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x, uint64_t cap) {
  std::vector<Perm> queue{x};
  std::unordered_set<Perm, PermHash> seen{x};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& s : g.generators()) {
      Perm y = conjugate(queue[qi], s);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::kCapExceeded, "conjugacy_class: cap exceeded");
        queue.push_back(std::move(y));
      }
    }
  }
  return queue;
}

SetStabilizerResult set_stabilizer(const PermGroup& g,
                                   const std::vector<uint32_t>& pts,
                                   uint64_t orbit_cap) {
  std::vector<uint32_t> base = pts;
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  for (uint32_t p : base)
    if (p >= g.degree())
      throw Error(ErrorKind::kOutOfRange, "set_stabilizer: point out of range");

  auto apply_set = [&](const std::vector<uint32_t>& s, const Perm& x) {
    std::vector<uint32_t> out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = x[s[i]];
    std::sort(out.begin(), out.end());
    return out;
  };

  SetStabilizerResult res;
  res.orbit.push_back(base);
  std::map<std::vector<uint32_t>, uint32_t> index{{base, 0}};
  std::vector<Perm> reps{Perm(g.degree())};
  std::vector<Perm> stab_gens;
  PermGroup stab = PermGroup::trivial(g.degree());
  for (size_t qi = 0; qi < res.orbit.size(); ++qi) {
    for (const Perm& s : g.generators()) {
      std::vector<uint32_t> img = apply_set(res.orbit[qi], s);
      auto it = index.find(img);
      if (it == index.end()) {
        if (res.orbit.size() >= orbit_cap)
          throw Error(ErrorKind::kCapExceeded, "set_stabilizer: orbit cap exceeded");
        index.emplace(img, static_cast<uint32_t>(res.orbit.size()));
        res.orbit.push_back(std::move(img));
        reps.push_back(compose(reps[qi], s));
      } else {
        Perm schreier = compose(compose(reps[qi], s), inverse(reps[it->second]));
        if (!schreier.is_identity() && !stab.contains(schreier)) {
          stab_gens.push_back(std::move(schreier));
          stab = PermGroup::from_generators(stab_gens);
        }
      }
    }
  }
  res.stabilizer = std::move(stab);
  return res;
}

}  // namespace cayley
