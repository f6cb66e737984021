// Shipped permutation generators for the concrete groups the census needs,
// re-verified on every load.
//
// Generator file format (text, UTF-8):
//   line 1: degree <n>
//   line 2: order <m>
//   optional '#' comment lines
//   each remaining non-comment line: one permutation as n whitespace
//   separated 1-based images.
// LF or CRLF both accepted; the loader never trusts a file - the order and
// the transitivity flag are recomputed from the generators every time.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/perm.hpp"
#include "cayley/perm_group.hpp"

namespace cayley {

struct CatalogEntry {
  std::string name;
  uint32_t degree;
  uint64_t order;
  bool transitive;
};

// The full fixed catalog, sorted by name.
const std::vector<CatalogEntry>& catalog();

struct GroupSpec {
  std::string name;
  uint32_t degree = 0;
  uint64_t expected_order = 0;
  bool transitive = false;
  std::vector<Perm> generators;
  PermGroup group;
};

// Loads a catalog group by name and verifies every GroupSpec invariant
// (order from the stabilizer chain, transitivity); fails loudly otherwise.
GroupSpec load_group(const std::string& name);

// Directory holding the generator files: $CAYLEY_CENSUS_DATA if set, else
// the compiled-in default.
std::string data_directory();

struct GeneratorFile {
  uint32_t degree = 0;
  uint64_t order = 0;
  std::vector<Perm> generators;
};

GeneratorFile read_generator_file(const std::string& path, uint32_t max_degree);

void write_generator_file(const std::string& path, const std::string& comment,
                          uint64_t order, const std::vector<Perm>& gens);

// Builds and verifies a user-supplied group file (same format; the header
// order must match the rebuilt chain).
GroupSpec load_group_file(const std::string& path, uint32_t max_degree = 64);

}  // namespace cayley
