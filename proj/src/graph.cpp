#include "cayley/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

Graph Graph::from_edges(uint32_t vertex_count,
                        const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  Graph g(vertex_count);
  for (auto [u, v] : edges) g.add_edge(u, v);
  g.ensure_sorted();
  return g;
}

void Graph::add_edge(uint32_t u, uint32_t v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorKind::kOutOfRange, "edge endpoint out of range");
  if (u == v) throw Error(ErrorKind::kPrecondition, "loops not allowed");
  if (adjacent(u, v)) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  sorted_ = false;
}

void Graph::ensure_sorted() const {
  if (sorted_) return;
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  sorted_ = true;
}

bool Graph::adjacent(uint32_t u, uint32_t v) const {
  const auto& nbrs = adj_[u];
  if (sorted_) return std::binary_search(nbrs.begin(), nbrs.end(), v);
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

const std::vector<uint32_t>& Graph::neighbors(uint32_t v) const {
  if (v >= vertex_count())
    throw Error(ErrorKind::kOutOfRange, "neighbors: vertex out of range");
  ensure_sorted();
  return adj_[v];
}

uint64_t Graph::edge_count() const {
  uint64_t deg_sum = 0;
  for (const auto& nbrs : adj_) deg_sum += nbrs.size();
  return deg_sum / 2;
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(edge_count());
  ensure_sorted();
  for (uint32_t u = 0; u < vertex_count(); ++u)
    for (uint32_t v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;  // by convention
  std::vector<bool> seen(vertex_count(), false);
  std::vector<uint32_t> queue{0};
  seen[0] = true;
  size_t visited = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (uint32_t v : adj_[queue[qi]])
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        queue.push_back(v);
      }
  return visited == vertex_count();
}

bool Graph::is_regular(uint32_t* valency) const {
  if (vertex_count() == 0) {
    if (valency) *valency = 0;
    return true;
  }
  size_t d = adj_[0].size();
  for (const auto& nbrs : adj_)
    if (nbrs.size() != d) return false;
  if (valency) *valency = static_cast<uint32_t>(d);
  return true;
}

void Graph::validate() const {
  ensure_sorted();
  for (uint32_t u = 0; u < vertex_count(); ++u) {
    const auto& nbrs = adj_[u];
    for (size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == u) throw Error(ErrorKind::kVerification, "loop found");
      if (i + 1 < nbrs.size() && nbrs[i] == nbrs[i + 1])
        throw Error(ErrorKind::kVerification, "duplicate neighbor");
      if (!adjacent(nbrs[i], u))
        throw Error(ErrorKind::kVerification, "asymmetric adjacency");
    }
  }
}

Graph relabel(const Graph& g, const std::vector<uint32_t>& lab) {
  Graph out(g.vertex_count());
  for (uint32_t u = 0; u < g.vertex_count(); ++u)
    for (uint32_t v : g.adj_[u]) out.adj_[lab[u]].push_back(lab[v]);
  out.sorted_ = false;
  out.ensure_sorted();
  return out;
}

Graph quotient_graph(const Graph& g,
                     const std::vector<std::vector<uint32_t>>& blocks) {
  std::vector<uint32_t> block_of(g.vertex_count(), UINT32_MAX);
  for (uint32_t b = 0; b < blocks.size(); ++b)
    for (uint32_t v : blocks[b]) {
      if (v >= g.vertex_count() || block_of[v] != UINT32_MAX)
        throw Error(ErrorKind::kNotAPartition, "blocks do not partition the vertices");
      block_of[v] = b;
    }
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    if (block_of[v] == UINT32_MAX)
      throw Error(ErrorKind::kNotAPartition, "vertex missing from the partition");
  Graph out(static_cast<uint32_t>(blocks.size()));
  for (auto [u, v] : g.edges())
    if (block_of[u] != block_of[v]) out.add_edge(block_of[u], block_of[v]);
  return out;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "graph " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  std::string tag;
  uint32_t n = 0;
  uint64_t m = 0;
  if (!(in >> tag >> n >> m) || tag != "graph")
    throw Error(ErrorKind::kParseError, "bad graph header (line 1)");
  Graph g(n);
  for (uint64_t i = 0; i < m; ++i) {
    uint32_t u, v;
    if (!(in >> u >> v))
      throw Error(ErrorKind::kParseError,
                  "bad edge at line " + std::to_string(i + 2));
    if (u >= n || v >= n || u == v)
      throw Error(ErrorKind::kParseError,
                  "invalid edge at line " + std::to_string(i + 2));
    g.add_edge(u, v);
  }
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path);
  return read_edge_list(in);
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path);
  out << write_edge_list(g);
}

}  // namespace cayley
