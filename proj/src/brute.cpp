#include "cayley/brute.hpp"

#include <algorithm>
#include <unordered_set>

#include "cayley/error.hpp"

namespace cayley {

std::vector<Perm> naive_closure(const std::vector<Perm>& gens, uint64_t cap) {
  if (gens.empty())
    throw Error(ErrorKind::kEmptyGenerators, "naive_closure: no generators");
  uint32_t degree = gens[0].degree();
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue{Perm(degree)};
  seen.insert(queue[0]);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& s : gens) {
      Perm next = compose(queue[qi], s);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::kCapExceeded, "naive_closure: cap exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

uint64_t naive_order(const std::vector<Perm>& gens, uint64_t cap) {
  return naive_closure(gens, cap).size();
}

bool naive_contains(const std::vector<Perm>& gens, const Perm& p, uint64_t cap) {
  for (const Perm& q : naive_closure(gens, cap))
    if (q == p) return true;
  return false;
}

namespace {

bool conjugates_into(const Perm& g, const PermGroup& h1, const PermGroup& h2) {
  for (const Perm& x : h1.generators())
    if (!h2.contains(conjugate(x, g))) return false;
  return true;
}

}  // namespace

PermGroup naive_normalizer(const PermGroup& g, const PermGroup& h, uint64_t cap) {
  std::vector<Perm> found;
  bool ok = g.for_each_element(
      [&](const Perm& x) {
        if (conjugates_into(x, h, h) && conjugates_into(inverse(x), h, h))
          found.push_back(x);
      },
      cap);
  if (!ok) throw Error(ErrorKind::kCapExceeded, "naive_normalizer: cap exceeded");
  return PermGroup::from_generators(found);
}

PermGroup naive_centralizer(const PermGroup& g, const Perm& x, uint64_t cap) {
  std::vector<Perm> found;
  bool ok = g.for_each_element(
      [&](const Perm& e) {
        if (conjugate(x, e) == x) found.push_back(e);
      },
      cap);
  if (!ok) throw Error(ErrorKind::kCapExceeded, "naive_centralizer: cap exceeded");
  return PermGroup::from_generators(found);
}

std::optional<Perm> naive_transporter(const PermGroup& g, const PermGroup& h1,
                                      const PermGroup& h2, uint64_t cap) {
  if (h1.order() != h2.order()) return std::nullopt;
  std::optional<Perm> result;
  bool ok = g.for_each_element(
      [&](const Perm& x) {
        if (result) return;
        if (conjugates_into(x, h1, h2) && conjugates_into(inverse(x), h2, h1))
          result = x;
      },
      cap);
  if (!ok) throw Error(ErrorKind::kCapExceeded, "naive_transporter: cap exceeded");
  return result;
}

}  // namespace cayley
