#include "cayley/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/error.hpp"

namespace cayley {

namespace {

// Ordered partition of the vertex set.  A cell is identified by its start
// position; cell_of maps a vertex to the start of its cell.
struct Partition {
  std::vector<uint32_t> lab;        // position -> vertex
  std::vector<uint32_t> pos;        // vertex -> position
  std::vector<uint32_t> cell_of;    // vertex -> cell start position
  std::vector<uint32_t> cell_size;  // valid at start positions

  explicit Partition(const std::vector<uint32_t>& colors) {
    uint32_t n = static_cast<uint32_t>(colors.size());
    lab.resize(n);
    std::iota(lab.begin(), lab.end(), 0u);
    std::stable_sort(lab.begin(), lab.end(),
                     [&](uint32_t a, uint32_t b) { return colors[a] < colors[b]; });
    pos.resize(n);
    cell_of.resize(n);
    cell_size.assign(n, 0);
    for (uint32_t i = 0; i < n; ++i) pos[lab[i]] = i;
    uint32_t start = 0;
    for (uint32_t i = 0; i < n; ++i) {
      if (i > 0 && colors[lab[i]] != colors[lab[i - 1]]) start = i;
      cell_of[lab[i]] = start;
      ++cell_size[start];
    }
  }

  uint32_t size() const { return static_cast<uint32_t>(lab.size()); }

  bool discrete() const {
    for (uint32_t v : lab)
      if (cell_size[cell_of[v]] != 1) return false;
    return true;
  }

  std::vector<uint32_t> cell_starts() const {
    std::vector<uint32_t> starts;
    uint32_t s = 0;
    while (s < size()) {
      starts.push_back(s);
      s += cell_size[s];
    }
    return starts;
  }
};

// Equitable refinement; splitters start from the given worklist.
void refine_partition(const Graph& g, Partition& p,
                      std::vector<uint32_t> worklist) {
  uint32_t n = p.size();
  std::vector<bool> queued(n, false);
  for (uint32_t s : worklist) queued[s] = true;
  std::vector<uint32_t> cnt(n, 0);
  std::vector<uint32_t> touched_verts;
  std::vector<uint32_t> touched_cells;
  std::vector<uint32_t> splitter;
  std::vector<uint32_t> cellbuf;
  std::vector<uint32_t> bucket_of;
  std::vector<uint32_t> sorted_cell;

  for (size_t wi = 0; wi < worklist.size(); ++wi) {
    uint32_t ws = worklist[wi];
    queued[ws] = false;
    // The cell may have shrunk or moved since queueing; use its current
    // extent at this start position.
    splitter.clear();
    for (uint32_t i = ws; i < ws + p.cell_size[ws]; ++i)
      splitter.push_back(p.lab[i]);

    touched_verts.clear();
    touched_cells.clear();
    for (uint32_t w : splitter) {
      for (uint32_t u : g.neighbors(w)) {
        if (cnt[u] == 0) {
          touched_verts.push_back(u);
          uint32_t c = p.cell_of[u];
          if (p.cell_size[c] > 1) touched_cells.push_back(c);
        }
        ++cnt[u];
      }
    }
    std::sort(touched_cells.begin(), touched_cells.end());
    touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                        touched_cells.end());

    for (uint32_t c : touched_cells) {
      uint32_t len = p.cell_size[c];
      cellbuf.assign(p.lab.begin() + c, p.lab.begin() + c + len);
      uint32_t min_cnt = UINT32_MAX, max_cnt = 0;
      for (uint32_t v : cellbuf) {
        min_cnt = std::min(min_cnt, cnt[v]);
        max_cnt = std::max(max_cnt, cnt[v]);
      }
      if (min_cnt == max_cnt) continue;
      // Stable counting bucket by neighbor count (counts are tiny).
      bucket_of.assign(max_cnt - min_cnt + 1, 0);
      for (uint32_t v : cellbuf) ++bucket_of[cnt[v] - min_cnt];
      uint32_t acc = 0;
      for (uint32_t& b : bucket_of) {
        uint32_t next = acc + b;
        b = acc;
        acc = next;
      }
      sorted_cell.resize(len);
      for (uint32_t v : cellbuf) sorted_cell[bucket_of[cnt[v] - min_cnt]++] = v;
      cellbuf = sorted_cell;
      // Write back and record fragment boundaries.
      uint32_t frag_start = c;
      for (uint32_t i = 0; i < len; ++i) {
        uint32_t v = cellbuf[i];
        p.lab[c + i] = v;
        p.pos[v] = c + i;
        if (i > 0 && cnt[v] != cnt[cellbuf[i - 1]]) frag_start = c + i;
        p.cell_of[v] = frag_start;
      }
      uint32_t s = c;
      while (s < c + len) {
        uint32_t e = s + 1;
        while (e < c + len && p.cell_of[p.lab[e]] == s) ++e;
        p.cell_size[s] = e - s;
        if (!queued[s]) {
          queued[s] = true;
          worklist.push_back(s);
        }
        s = e;
      }
    }
    for (uint32_t v : touched_verts) cnt[v] = 0;
  }
}

void individualize(Partition& p, uint32_t v) {
  uint32_t s = p.cell_of[v];
  uint32_t len = p.cell_size[s];
  uint32_t pv = p.pos[v];
  std::swap(p.lab[s], p.lab[pv]);
  p.pos[p.lab[pv]] = pv;
  p.pos[v] = s;
  p.cell_size[s] = 1;
  if (len > 1) {
    p.cell_size[s + 1] = len - 1;
    for (uint32_t i = s + 1; i < s + len; ++i) p.cell_of[p.lab[i]] = s + 1;
  }
}

using EdgeList = std::vector<std::pair<uint32_t, uint32_t>>;

EdgeList relabeled_edges(const Graph& g, const std::vector<uint32_t>& pos) {
  EdgeList out;
  out.reserve(g.edge_count());
  for (uint32_t u = 0; u < g.vertex_count(); ++u)
    for (uint32_t v : g.neighbors(u))
      if (pos[u] < pos[v]) out.emplace_back(pos[u], pos[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Individualization-refinement search over one graph.
class IrSearch {
 public:
  IrSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  void run() {
    Partition root(std::vector<uint32_t>(n_, 0));
    search(root, root.cell_starts(), {}, SIZE_MAX);
  }

  bool have_best() const { return have_best_; }
  const EdgeList& best_edges() const { return best_edges_; }
  const std::vector<uint32_t>& best_pos() const { return best_pos_; }
  const std::vector<Perm>& aut_gens() const { return aut_gens_; }

 private:
  // Returns the depth to backjump to (SIZE_MAX when none pending).
  size_t search(Partition& p, std::vector<uint32_t> worklist,
                const std::vector<uint32_t>& prefix, size_t diverged_at) {
    refine_partition(g_, p, std::move(worklist));
    if (p.discrete()) return handle_leaf(p, diverged_at);
    size_t depth = prefix.size();
    // First smallest non-singleton cell.
    uint32_t target = UINT32_MAX, best_size = UINT32_MAX;
    for (uint32_t s : p.cell_starts())
      if (p.cell_size[s] > 1 && p.cell_size[s] < best_size) {
        best_size = p.cell_size[s];
        target = s;
      }
    std::vector<uint32_t> children(p.lab.begin() + target,
                                   p.lab.begin() + target + p.cell_size[target]);
    std::sort(children.begin(), children.end());

    bool first_child = true;
    std::vector<uint32_t> explored;
    std::vector<uint32_t> new_prefix = prefix;
    new_prefix.push_back(0);
    uint64_t uf_version = UINT64_MAX;
    std::vector<uint32_t> uf;
    std::vector<bool> explored_mark;
    for (uint32_t v : children) {
      // Orbit pruning: skip v if a known automorphism fixing the prefix
      // maps it into the component of an explored sibling.
      if (!explored.empty()) {
        if (uf_version != aut_version_) {
          uf_version = aut_version_;
          rebuild_uf(prefix, uf);
          explored_mark.assign(n_, false);
        } else if (explored_mark.empty()) {
          explored_mark.assign(n_, false);
        }
        for (uint32_t u : explored) explored_mark[uf_find(uf, u)] = true;
        if (explored_mark[uf_find(uf, v)]) continue;
      }
      if (depth == first_path_.size() && !have_first_) first_path_.push_back(v);
      size_t child_diverged = diverged_at;
      if (child_diverged == SIZE_MAX &&
          (depth >= first_path_.size() || first_path_[depth] != v))
        child_diverged = depth;
      Partition child = p;
      individualize(child, v);
      std::vector<uint32_t> wl{p.cell_of[v]};
      if (best_size > 1) wl.push_back(p.cell_of[v] + 1);
      new_prefix.back() = v;
      size_t jump = search(child, std::move(wl), new_prefix, child_diverged);
      explored.push_back(v);
      if (jump != SIZE_MAX) {
        if (jump < depth) return jump;  // abandon this level too
        // jump == depth: this child's subtree was an image of an explored
        // one; move on to the next sibling.
      }
      first_child = false;
    }
    (void)first_child;
    return SIZE_MAX;
  }

  size_t handle_leaf(const Partition& p, size_t diverged_at) {
    EdgeList cand = relabeled_edges(g_, p.pos);
    bool matched = false;
    if (!have_first_) {
      have_first_ = true;
      first_edges_ = cand;
      first_lab_ = p.lab;
    } else if (cand == first_edges_) {
      record_automorphism(first_lab_, p.pos);
      matched = true;
    }
    if (!have_best_ || cand < best_edges_) {
      have_best_ = true;
      best_edges_ = std::move(cand);
      best_pos_ = p.pos;
      best_lab_ = p.lab;
    } else if (cand == best_edges_) {
      record_automorphism(best_lab_, p.pos);
      matched = true;
    }
    // A leaf equal to one in an already-explored subtree makes the rest of
    // the current branch its automorphic image: abandon up to the level
    // where the paths diverged.
    if (matched && diverged_at != SIZE_MAX) return diverged_at;
    return SIZE_MAX;
  }

  // gamma(v) = ref_lab[cur_pos[v]] maps the current leaf onto the
  // reference leaf; equal edge lists make it an automorphism.
  void record_automorphism(const std::vector<uint32_t>& ref_lab,
                           const std::vector<uint32_t>& cur_pos) {
    std::vector<uint32_t> img(n_);
    for (uint32_t v = 0; v < n_; ++v) img[v] = ref_lab[cur_pos[v]];
    Perm gamma(std::move(img));
    if (gamma.is_identity()) return;
    for (const Perm& known : aut_gens_)
      if (known == gamma) return;
    for (uint32_t u = 0; u < n_; ++u)
      for (uint32_t w : g_.neighbors(u))
        if (!g_.adjacent(gamma[u], gamma[w]))
          throw Error(ErrorKind::kVerification, "search produced a non-automorphism");
    aut_gens_.push_back(std::move(gamma));
    ++aut_version_;
  }

  void rebuild_uf(const std::vector<uint32_t>& prefix,
                  std::vector<uint32_t>& uf) {
    uf.resize(n_);
    std::iota(uf.begin(), uf.end(), 0u);
    for (const Perm& gen : aut_gens_) {
      bool fixes = true;
      for (uint32_t q : prefix)
        if (gen[q] != q) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (uint32_t v = 0; v < n_; ++v) {
        uint32_t a = uf_find(uf, v), b = uf_find(uf, gen[v]);
        if (a != b) uf[a] = b;
      }
    }
  }

  static uint32_t uf_find(std::vector<uint32_t>& uf, uint32_t v) {
    while (uf[v] != v) {
      uf[v] = uf[uf[v]];
      v = uf[v];
    }
    return v;
  }

  const Graph& g_;
  uint32_t n_;
  bool have_first_ = false, have_best_ = false;
  EdgeList first_edges_, best_edges_;
  std::vector<uint32_t> first_lab_, best_lab_, best_pos_, first_path_;
  std::vector<Perm> aut_gens_;
  uint64_t aut_version_ = 0;
};

}  // namespace

std::vector<uint32_t> refine(const ColoredGraph& cg) {
  if (cg.colors.size() != cg.graph.vertex_count())
    throw Error(ErrorKind::kPrecondition, "refine: one color per vertex required");
  Partition p(cg.colors);
  refine_partition(cg.graph, p, p.cell_starts());
  std::vector<uint32_t> out(p.size());
  uint32_t color = 0;
  uint32_t s = 0;
  while (s < p.size()) {
    for (uint32_t i = s; i < s + p.cell_size[s]; ++i) out[p.lab[i]] = color;
    ++color;
    s += p.cell_size[s];
  }
  return out;
}

CanonicalResult canonicalize(const Graph& g, uint32_t vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw Error(ErrorKind::kCapExceeded, "canonicalize: vertex cap exceeded");
  CanonicalResult res;
  uint32_t n = g.vertex_count();
  if (n == 0) {
    res.form.relabeling = Perm(0);
    res.form.certificate_hash = hash_bytes(nullptr, 0);
    res.aut = PermGroup::trivial(0);
    return res;
  }
  IrSearch search(g);
  search.run();
  res.form.relabeling = Perm(search.best_pos());
  res.form.canonical_edge_list = search.best_edges();
  res.form.certificate_hash =
      hash_bytes(res.form.canonical_edge_list.data(),
                 res.form.canonical_edge_list.size() * sizeof(std::pair<uint32_t, uint32_t>));
  res.aut = search.aut_gens().empty() ? PermGroup::trivial(n)
                                      : PermGroup::from_generators(search.aut_gens());
  return res;
}

CanonicalForm canonical_form(const Graph& g) {
  // Skips the automorphism-group chain; the search alone fixes the form.
  CanonicalForm form;
  uint32_t n = g.vertex_count();
  if (n == 0) {
    form.relabeling = Perm(0);
    form.certificate_hash = hash_bytes(nullptr, 0);
    return form;
  }
  IrSearch search(g);
  search.run();
  form.relabeling = Perm(search.best_pos());
  form.canonical_edge_list = search.best_edges();
  form.certificate_hash =
      hash_bytes(form.canonical_edge_list.data(),
                 form.canonical_edge_list.size() * sizeof(std::pair<uint32_t, uint32_t>));
  return form;
}

PermGroup automorphism_group(const Graph& g, uint32_t vertex_cap) {
  return canonicalize(g, vertex_cap).aut;
}

std::optional<std::vector<uint32_t>> are_isomorphic(const Graph& g1,
                                                    const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return std::nullopt;
  CanonicalForm f1 = canonical_form(g1);
  CanonicalForm f2 = canonical_form(g2);
  if (!(f1 == f2)) return std::nullopt;
  // v -> relabel2^-1(relabel1(v))
  std::vector<uint32_t> inv2(g2.vertex_count());
  for (uint32_t v = 0; v < g2.vertex_count(); ++v) inv2[f2.relabeling[v]] = v;
  std::vector<uint32_t> iso(g1.vertex_count());
  for (uint32_t v = 0; v < g1.vertex_count(); ++v) iso[v] = inv2[f1.relabeling[v]];
  for (uint32_t u = 0; u < g1.vertex_count(); ++u)
    for (uint32_t w : g1.neighbors(u))
      if (!g2.adjacent(iso[u], iso[w]))
        throw Error(ErrorKind::kVerification, "canonical forms matched but map fails");
  return iso;
}

namespace {

uint64_t count_cycles_of_length(const Graph& g, uint32_t k) {
  // Cycles counted at their minimal vertex; each is seen twice (both
  // directions).
  uint64_t count = 0;
  uint32_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<uint32_t> path;
  std::function<void(uint32_t, uint32_t)> dfs = [&](uint32_t root, uint32_t v) {
    on_path[v] = true;
    path.push_back(v);
    for (uint32_t w : g.neighbors(v)) {
      if (path.size() == k) {
        if (w == root) ++count;
        continue;
      }
      if (w <= root || on_path[w]) continue;
      dfs(root, w);
    }
    on_path[v] = false;
    path.pop_back();
  };
  for (uint32_t root = 0; root < n; ++root) dfs(root, root);
  return count / 2;
}

// Girth as the minimum, over edges (u, v), of 1 + the u-v distance with
// that edge removed.  The BFS is depth-capped by the best cycle so far.
uint32_t graph_girth(const Graph& g) {
  uint32_t best = UINT32_MAX;
  uint32_t n = g.vertex_count();
  std::vector<uint32_t> dist(n);
  for (auto [u, v] : g.edges()) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    std::vector<uint32_t> queue{u};
    dist[u] = 0;
    bool found = false;
    for (size_t qi = 0; qi < queue.size() && !found; ++qi) {
      uint32_t a = queue[qi];
      if (best != UINT32_MAX && dist[a] + 2 > best) break;
      for (uint32_t b : g.neighbors(a)) {
        if (a == u && b == v) continue;  // the deleted edge
        if (dist[b] != UINT32_MAX) continue;
        if (b == v) {
          best = std::min(best, dist[a] + 2);
          found = true;
          break;
        }
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return best == UINT32_MAX ? 0 : best;
}

}  // namespace

InvariantSignature invariant_signature(const Graph& g) {
  InvariantSignature sig;
  sig.vertex_count = g.vertex_count();
  sig.edge_count = g.edge_count();
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    sig.degree_sequence.push_back(static_cast<uint32_t>(g.neighbors(v).size()));
  std::sort(sig.degree_sequence.begin(), sig.degree_sequence.end());
  sig.girth = graph_girth(g);
  for (uint32_t k = 3; k <= 8; ++k)
    sig.cycle_counts.push_back(count_cycles_of_length(g, k));
  ColoredGraph cg{g, std::vector<uint32_t>(g.vertex_count(), 0)};
  std::vector<uint32_t> colors = refine(cg);
  uint32_t num_colors = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<uint32_t> hist(num_colors, 0);
  for (uint32_t c : colors) ++hist[c];
  std::sort(hist.begin(), hist.end());
  sig.color_histogram = std::move(hist);
  return sig;
}

uint64_t brute_force_automorphism_count(const Graph& g) {
  uint32_t n = g.vertex_count();
  if (n > 10)
    throw Error(ErrorKind::kCapExceeded, "brute_force_automorphism_count: too many vertices");
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  uint64_t count = 0;
  do {
    bool ok = true;
    for (uint32_t u = 0; u < n && ok; ++u)
      for (uint32_t v : g.neighbors(u))
        if (!g.adjacent(img[u], img[v])) {
          ok = false;
          break;
        }
    if (ok) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

}  // namespace cayley
