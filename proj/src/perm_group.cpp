#include "cayley/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cayley/error.hpp"

namespace cayley {

namespace {
constexpr uint32_t kNoPos = UINT32_MAX;
}

PermGroup PermGroup::from_generators(const std::vector<Perm>& gens) {
  PermGroup g;
  g.build(gens, {}, false);
  return g;
}

PermGroup PermGroup::with_base_prefix(const std::vector<Perm>& gens,
                                      const std::vector<uint32_t>& prefix) {
  PermGroup g;
  g.build(gens, prefix, false);
  return g;
}

PermGroup PermGroup::trivial(uint32_t degree) {
  PermGroup g;
  g.degree_ = degree;
  return g;
}

void PermGroup::build(const std::vector<Perm>& gens,
                      const std::vector<uint32_t>& prefix, bool allow_empty) {
  if (gens.empty() && !allow_empty)
    throw Error(ErrorKind::kEmptyGenerators, "group needs at least one generator");
  if (gens.empty()) return;
  degree_ = gens[0].degree();
  for (const Perm& p : gens)
    if (p.degree() != degree_)
      throw Error(ErrorKind::kDegreeMismatch, "generators have mixed degrees");
  gens_ = gens;
  prefix_ = prefix;
  for (uint32_t p : prefix_)
    if (p >= degree_)
      throw Error(ErrorKind::kOutOfRange, "base prefix point out of range");

  std::unordered_set<Perm, PermHash> seen;
  for (const Perm& p : gens_) {
    if (p.is_identity()) continue;
    if (seen.insert(p).second) strong_.push_back(p);
  }
  for (const Perm& p : strong_) strong_inv_.push_back(inverse(p));
  if (strong_.empty()) {
    // Trivial group; keep a chain for any prescribed prefix points.
    for (uint32_t p : prefix_) {
      Level lv;
      lv.base = p;
      levels_.push_back(std::move(lv));
      rebuild_orbit(levels_.size() - 1);
    }
    return;
  }

  // First level: prescribed point, else smallest moved point.
  Perm witness = strong_[0];
  for (const Perm& s : strong_) {
    if (!s.is_identity()) {
      witness = s;
      break;
    }
  }
  add_level(witness);
  levels_[0].gen_ids.resize(strong_.size());
  for (uint32_t i = 0; i < strong_.size(); ++i) levels_[0].gen_ids[i] = i;
  // Deeper prescribed points get their levels lazily in add_level.
  schreier_sims(0);
  verify();
}

bool PermGroup::add_level(const Perm& witness) {
  Level lv;
  if (prefix_used_ < prefix_.size()) {
    lv.base = prefix_[prefix_used_++];
  } else {
    uint32_t pt = kNoPos;
    for (uint32_t i = 0; i < degree_; ++i) {
      if (witness[i] != i) {
        pt = i;
        break;
      }
    }
    if (pt == kNoPos) return false;
    lv.base = pt;
  }
  levels_.push_back(std::move(lv));
  rebuild_orbit(levels_.size() - 1);
  return true;
}

void PermGroup::rebuild_orbit(size_t level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  lv.pos.assign(degree_, kNoPos);
  lv.parent.assign(degree_, kNoPos);
  lv.via.assign(degree_, kNoPos);
  lv.orbit.push_back(lv.base);
  lv.pos[lv.base] = 0;
  extend_orbit(level);
}

void PermGroup::extend_orbit(size_t level) {
  Level& lv = levels_[level];
  for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    uint32_t p = lv.orbit[qi];
    for (uint32_t gid : lv.gen_ids) {
      uint32_t q = strong_[gid][p];
      if (lv.pos[q] == kNoPos) {
        lv.pos[q] = static_cast<uint32_t>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.parent[q] = p;
        lv.via[q] = gid;
      }
    }
  }
}

void PermGroup::tree_path(size_t level, uint32_t pt,
                          std::vector<uint32_t>& path) const {
  const Level& lv = levels_[level];
  if (pt >= degree_ || lv.pos[pt] == kNoPos)
    throw Error(ErrorKind::kOutOfRange, "point not in level orbit");
  path.clear();
  uint32_t cur = pt;
  while (cur != lv.base) {
    path.push_back(lv.via[cur]);
    cur = lv.parent[cur];
  }
  std::reverse(path.begin(), path.end());
}

Perm PermGroup::transversal_element(size_t level, uint32_t pt) const {
  // Apply the Schreier-tree word pointwise into one buffer.
  std::vector<uint32_t> path;
  tree_path(level, pt, path);
  std::vector<uint32_t> img(degree_);
  std::iota(img.begin(), img.end(), 0u);
  for (uint32_t gid : path) {
    const Perm& s = strong_[gid];
    for (uint32_t i = 0; i < degree_; ++i) img[i] = s[img[i]];
  }
  return Perm(std::move(img));
}

void PermGroup::divide_by_transversal(size_t level, uint32_t pt,
                                      std::vector<uint32_t>& img,
                                      std::vector<uint32_t>& path) const {
  // img := img * u^-1 where u maps the level base to pt, applied as the
  // reversed word of generator inverses.
  tree_path(level, pt, path);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Perm& sinv = strong_inv_[*it];
    for (uint32_t i = 0; i < degree_; ++i) img[i] = sinv[img[i]];
  }
}

std::pair<Perm, size_t> PermGroup::strip(Perm g, size_t from_level) const {
  std::vector<uint32_t> img = g.images();
  std::vector<uint32_t> path;
  for (size_t i = from_level; i < levels_.size(); ++i) {
    uint32_t image = img[levels_[i].base];
    if (levels_[i].pos[image] == kNoPos) return {Perm(std::move(img)), i};
    if (image != levels_[i].base) divide_by_transversal(i, image, img, path);
  }
  return {Perm(std::move(img)), levels_.size()};
}

void PermGroup::schreier_sims(size_t level) {
  Level& lv = levels_[level];
  rebuild_orbit(level);
  std::vector<uint32_t> u_img, work, path;
  for (size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    uint32_t gamma = lv.orbit[oi];
    u_img.resize(degree_);
    std::iota(u_img.begin(), u_img.end(), 0u);
    tree_path(level, gamma, path);
    for (uint32_t gid : path)
      for (uint32_t i = 0; i < degree_; ++i) u_img[i] = strong_[gid][u_img[i]];
    for (size_t sgi = 0; sgi < lv.gen_ids.size(); ++sgi) {
      uint32_t gid = lv.gen_ids[sgi];
      const Perm& s = strong_[gid];
      uint32_t delta = s[gamma];
      // Tree edges give trivial Schreier generators.
      if (lv.parent[delta] == gamma && lv.via[delta] == gid) continue;
      work.resize(degree_);
      for (uint32_t i = 0; i < degree_; ++i) work[i] = s[u_img[i]];
      divide_by_transversal(level, delta, work, path);
      Perm schreier_gen(work);
      if (schreier_gen.is_identity()) continue;
      auto [residue, drop] = strip(std::move(schreier_gen), level + 1);
      if (residue.is_identity()) continue;
      if (drop == levels_.size()) add_level(residue);
      uint32_t new_id = static_cast<uint32_t>(strong_.size());
      strong_.push_back(residue);
      strong_inv_.push_back(inverse(residue));
      for (size_t l = level + 1; l <= drop && l < levels_.size(); ++l)
        levels_[l].gen_ids.push_back(new_id);
      for (size_t l = std::min(drop, levels_.size() - 1); l > level; --l)
        schreier_sims(l);
      // New strong generators never land at this level, so the orbit and
      // generator list here are unchanged; continue scanning.
    }
  }
}

uint64_t PermGroup::order() const {
  unsigned __int128 o = 1;
  for (const Level& lv : levels_) {
    o *= lv.orbit.size();
    if (o > static_cast<unsigned __int128>(UINT64_MAX))
      throw Error(ErrorKind::kCapExceeded, "group order exceeds 2^64");
  }
  return static_cast<uint64_t>(o);
}

std::vector<uint32_t> PermGroup::base() const {
  std::vector<uint32_t> b;
  b.reserve(levels_.size());
  for (const Level& lv : levels_) b.push_back(lv.base);
  return b;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) {
    if (degree_ == 0 && p.is_identity()) return true;
    throw Error(ErrorKind::kDegreeMismatch, "membership test: degree mismatch");
  }
  auto [residue, drop] = strip(p, 0);
  return drop == levels_.size() && residue.is_identity();
}

Perm PermGroup::sift(const Perm& p) const {
  return strip(p, 0).first;
}

std::vector<std::vector<uint32_t>> PermGroup::orbits() const {
  std::vector<std::vector<uint32_t>> result;
  std::vector<bool> seen(degree_, false);
  for (uint32_t start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<uint32_t> block{start};
    seen[start] = true;
    for (size_t qi = 0; qi < block.size(); ++qi) {
      for (const Perm& s : strong_) {
        uint32_t q = s[block[qi]];
        if (!seen[q]) {
          seen[q] = true;
          block.push_back(q);
        }
      }
    }
    std::sort(block.begin(), block.end());
    result.push_back(std::move(block));
  }
  return result;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && orbit_of(0).size() == degree_;
}

std::vector<uint32_t> PermGroup::orbit_of(uint32_t pt) const {
  if (pt >= degree_) throw Error(ErrorKind::kOutOfRange, "orbit_of: bad point");
  std::vector<uint32_t> orbit{pt};
  std::vector<bool> seen(degree_, false);
  seen[pt] = true;
  for (size_t qi = 0; qi < orbit.size(); ++qi) {
    for (const Perm& s : strong_) {
      uint32_t q = s[orbit[qi]];
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  }
  return orbit;
}

PermGroup PermGroup::point_stabilizer(uint32_t pt) const {
  if (pt >= degree_)
    throw Error(ErrorKind::kOutOfRange, "point_stabilizer: bad point");
  return pointwise_stabilizer({pt});
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<uint32_t>& pts) const {
  if (strong_.empty()) return trivial(degree_);
  PermGroup chain = with_base_prefix(gens_, pts);
  std::vector<Perm> stab_gens;
  for (const Perm& s : chain.strong_) {
    bool fixes = true;
    for (uint32_t p : pts)
      if (s[p] != p) {
        fixes = false;
        break;
      }
    if (fixes) stab_gens.push_back(s);
  }
  if (stab_gens.empty()) return trivial(degree_);
  PermGroup result;
  result.build(stab_gens, {}, true);
  return result;
}

bool PermGroup::for_each_element(const std::function<void(const Perm&)>& fn,
                                 uint64_t cap) const {
  if (order() > cap) return false;
  if (levels_.empty()) {
    fn(Perm(degree_));
    return true;
  }
  // Depth-first over transversal choices, deepest level innermost:
  // every element is written uniquely as t_{k-1} ... t_1 t_0 with t_i in
  // the level-i transversal (left-to-right composition).
  std::vector<Perm> partial(levels_.size() + 1);
  partial[levels_.size()] = Perm(degree_);
  std::function<void(size_t)> rec = [&](size_t level) {
    if (level == SIZE_MAX) {
      fn(partial[0]);
      return;
    }
    for (uint32_t pt : levels_[level].orbit) {
      partial[level] =
          pt == levels_[level].base
              ? partial[level + 1]
              : compose(partial[level + 1], transversal_element(level, pt));
      rec(level - 1);
    }
  };
  rec(levels_.size() - 1);
  return true;
}

std::vector<Perm> PermGroup::elements(uint64_t cap) const {
  std::vector<Perm> result;
  if (!for_each_element([&](const Perm& p) { result.push_back(p); }, cap))
    throw Error(ErrorKind::kCapExceeded, "element enumeration over cap");
  return result;
}

void PermGroup::verify() const {
  for (size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    for (uint32_t gid : lv.gen_ids) {
      for (size_t j = 0; j < i; ++j)
        if (strong_[gid][levels_[j].base] != levels_[j].base)
          throw Error(ErrorKind::kVerification, "strong generator moves an earlier base point");
    }
    std::vector<uint32_t> u_img, work, path;
    for (uint32_t pt : lv.orbit) {
      u_img.resize(degree_);
      std::iota(u_img.begin(), u_img.end(), 0u);
      tree_path(i, pt, path);
      for (uint32_t gid : path)
        for (uint32_t j = 0; j < degree_; ++j) u_img[j] = strong_[gid][u_img[j]];
      if (u_img[lv.base] != pt)
        throw Error(ErrorKind::kVerification, "transversal element maps base wrongly");
      for (uint32_t gid : lv.gen_ids) {
        const Perm& s = strong_[gid];
        if (lv.parent[s[pt]] == pt && lv.via[s[pt]] == gid) continue;
        work.resize(degree_);
        for (uint32_t j = 0; j < degree_; ++j) work[j] = s[u_img[j]];
        divide_by_transversal(i, s[pt], work, path);
        auto [residue, drop] = strip(Perm(work), i + 1);
        if (drop != levels_.size() || !residue.is_identity())
          throw Error(ErrorKind::kVerification, "Schreier generator fails to sift");
      }
    }
  }
  for (const Perm& g : gens_) {
    auto [residue, drop] = strip(g, 0);
    if (drop != levels_.size() || !residue.is_identity())
      throw Error(ErrorKind::kVerification, "original generator fails to sift");
  }
}

}  // namespace cayley
