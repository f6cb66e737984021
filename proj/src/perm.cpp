#include "cayley/perm.hpp"

#include <numeric>
#include <stdexcept>

#include "cayley/error.hpp"

namespace cayley {

Perm::Perm(uint32_t n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw Error(ErrorKind::kInvalidPermutation, "image table is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

uint64_t Perm::order() const {
  uint64_t ord = 1;
  std::vector<bool> done(degree(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (done[i]) continue;
    uint64_t len = 0;
    uint32_t j = i;
    do {
      done[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool Perm::is_two_element() const {
  uint64_t ord = order();
  return (ord & (ord - 1)) == 0;
}

uint32_t Perm::num_fixed_points() const {
  uint32_t n = 0;
  for (uint32_t i = 0; i < degree(); ++i)
    if (img_[i] == i) ++n;
  return n;
}

std::vector<uint32_t> Perm::cycle_type() const {
  std::vector<uint32_t> lens;
  std::vector<bool> done(degree(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (done[i]) continue;
    uint32_t len = 0;
    uint32_t j = i;
    do {
      done[j] = true;
      j = img_[j];
      ++len;
    } while (j != i);
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

uint64_t Perm::moved_mask() const {
  if (degree() > 64)
    throw Error(ErrorKind::kCapExceeded, "moved_mask requires degree <= 64");
  uint64_t m = 0;
  for (uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) m |= uint64_t{1} << i;
  return m;
}

bool Perm::operator<(const Perm& o) const {
  return img_ < o.img_;
}

std::string Perm::to_cycle_string() const {
  std::string s;
  std::vector<bool> done(degree(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (done[i] || img_[i] == i) {
      done[i] = true;
      continue;
    }
    s += '(';
    uint32_t j = i;
    bool first = true;
    do {
      if (!first) s += ' ';
      s += std::to_string(j);
      done[j] = true;
      j = img_[j];
      first = false;
    } while (j != i);
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorKind::kDegreeMismatch, "compose: degree mismatch");
  std::vector<uint32_t> img(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Perm(std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<uint32_t> img(p.degree());
  for (uint32_t i = 0; i < p.degree(); ++i) img[p[i]] = i;
  return Perm(std::move(img));
}

Perm conjugate(const Perm& h, const Perm& g) {
  if (h.degree() != g.degree())
    throw Error(ErrorKind::kDegreeMismatch, "conjugate: degree mismatch");
  // (h^g)(g(i)) = g(h(i))
  std::vector<uint32_t> img(h.degree());
  for (uint32_t i = 0; i < h.degree(); ++i) img[g[i]] = g[h[i]];
  return Perm(std::move(img));
}

Perm power(const Perm& p, uint64_t e) {
  Perm acc(p.degree());
  Perm base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

uint64_t hash_bytes(const void* data, size_t len, uint64_t seed) {
  const auto* b = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

size_t PermHash::operator()(const Perm& p) const {
  return static_cast<size_t>(
      hash_bytes(p.images().data(), p.images().size() * sizeof(uint32_t)));
}

}  // namespace cayley
