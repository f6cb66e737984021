// Finite simple undirected graphs with canonical vertex indexing.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cayley {

class Graph {
 public:
  Graph() = default;
  explicit Graph(uint32_t vertex_count) : adj_(vertex_count) {}

  // From an edge list; rejects loops, merges duplicates.
  static Graph from_edges(uint32_t vertex_count,
                          const std::vector<std::pair<uint32_t, uint32_t>>& edges);

  uint32_t vertex_count() const { return static_cast<uint32_t>(adj_.size()); }
  uint64_t edge_count() const;

  void add_edge(uint32_t u, uint32_t v);
  bool adjacent(uint32_t u, uint32_t v) const;

  // Sorted neighbor list.
  const std::vector<uint32_t>& neighbors(uint32_t v) const;

  // Sorted (u, v) pairs with u < v.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

  bool is_connected() const;
  bool is_regular(uint32_t* valency = nullptr) const;

  // Checks the simple-graph invariants (no loops, symmetric, no duplicate
  // neighbors); throws on violation.
  void validate() const;

  bool operator==(const Graph& o) const {
    ensure_sorted();
    o.ensure_sorted();
    return adj_ == o.adj_;
  }

 private:
  mutable std::vector<std::vector<uint32_t>> adj_;
  mutable bool sorted_ = true;
  void ensure_sorted() const;
  friend Graph relabel(const Graph&, const std::vector<uint32_t>&);
};

// Image of the graph under a vertex bijection: vertex v becomes lab[v].
Graph relabel(const Graph& g, const std::vector<uint32_t>& lab);

// Quotient by a vertex partition: one vertex per block, blocks adjacent iff
// some cross edge exists; internal edges never become loops.
Graph quotient_graph(const Graph& g,
                     const std::vector<std::vector<uint32_t>>& blocks);

// Text format: "graph <n> <m>" then one "u v" line per edge, u < v,
// 0-based, sorted lexicographically.  Bit-exact for golden files.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace cayley
