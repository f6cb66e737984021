#include "cayley/group_data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cayley/error.hpp"

#ifndef CAYLEY_DATA_DIR
#define CAYLEY_DATA_DIR "data"
#endif

namespace cayley {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"A11.deg11", 11, 19958400ull, true},
      {"A12.deg12", 12, 239500800ull, true},
      {"M11.deg11", 11, 7920ull, true},
      {"M11.deg12", 12, 7920ull, true},
      {"M11.deg24", 24, 7920ull, false},
      {"M12.2.deg24", 24, 190080ull, true},
      {"M12.deg12", 12, 95040ull, true},
      {"M12.deg24", 24, 95040ull, false},
      {"M24.deg24", 24, 244823040ull, true},
      {"S12.deg12", 12, 479001600ull, true},
  };
  return entries;
}

std::string data_directory() {
  if (const char* env = std::getenv("CAYLEY_CENSUS_DATA"); env && *env)
    return env;
  return CAYLEY_DATA_DIR;
}

GeneratorFile read_generator_file(const std::string& path, uint32_t max_degree) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path);
  GeneratorFile out;
  std::string line;
  int header_fields = 0;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (header_fields == 0) {
      std::string key;
      if (!(ls >> key >> out.degree) || key != "degree" || out.degree == 0)
        throw Error(ErrorKind::kParseError,
                    path + ":" + std::to_string(lineno) + ": expected 'degree <n>'");
      if (out.degree > max_degree)
        throw Error(ErrorKind::kParseError,
                    path + ": degree exceeds the cap of " + std::to_string(max_degree));
      header_fields = 1;
    } else if (header_fields == 1) {
      std::string key;
      if (!(ls >> key >> out.order) || key != "order" || out.order == 0)
        throw Error(ErrorKind::kParseError,
                    path + ":" + std::to_string(lineno) + ": expected 'order <m>'");
      header_fields = 2;
    } else {
      std::vector<uint32_t> img(out.degree);
      for (uint32_t i = 0; i < out.degree; ++i) {
        uint64_t v;
        if (!(ls >> v) || v < 1 || v > out.degree)
          throw Error(ErrorKind::kParseError,
                      path + ":" + std::to_string(lineno) + ": bad image list");
        img[i] = static_cast<uint32_t>(v - 1);
      }
      uint64_t extra;
      if (ls >> extra)
        throw Error(ErrorKind::kParseError,
                    path + ":" + std::to_string(lineno) + ": trailing values");
      try {
        out.generators.push_back(Perm(std::move(img)));
      } catch (const Error&) {
        throw Error(ErrorKind::kParseError,
                    path + ":" + std::to_string(lineno) + ": not a permutation");
      }
    }
  }
  if (header_fields < 2 || out.generators.empty())
    throw Error(ErrorKind::kParseError, path + ": missing header or generators");
  return out;
}

void write_generator_file(const std::string& path, const std::string& comment,
                          uint64_t order, const std::vector<Perm>& gens) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path);
  out << "degree " << gens.at(0).degree() << "\n";
  out << "order " << order << "\n";
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const Perm& g : gens) {
    for (uint32_t i = 0; i < g.degree(); ++i) {
      if (i) out << ' ';
      out << g[i] + 1;
    }
    out << "\n";
  }
}

namespace {

GroupSpec build_spec(const std::string& name, const GeneratorFile& file,
                     bool check_transitive, bool expect_transitive) {
  GroupSpec spec;
  spec.name = name;
  spec.degree = file.degree;
  spec.expected_order = file.order;
  spec.generators = file.generators;
  spec.group = PermGroup::from_generators(file.generators);
  uint64_t order = spec.group.order();
  if (order != file.order)
    throw Error(ErrorKind::kOrderMismatch,
                name + ": chain order " + std::to_string(order) +
                    " does not match expected " + std::to_string(file.order));
  spec.transitive = spec.group.is_transitive();
  if (check_transitive && spec.transitive != expect_transitive)
    throw Error(ErrorKind::kTransitivityMismatch,
                name + ": transitivity does not match the catalog");
  return spec;
}

}  // namespace

GroupSpec load_group(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name != name) continue;
    std::string path = data_directory() + "/" + name + ".grp";
    GeneratorFile file = read_generator_file(path, 64);
    if (file.degree != e.degree)
      throw Error(ErrorKind::kOrderMismatch, name + ": degree does not match the catalog");
    if (file.order != e.order)
      throw Error(ErrorKind::kOrderMismatch, name + ": header order does not match the catalog");
    return build_spec(name, file, true, e.transitive);
  }
  throw Error(ErrorKind::kUnknownGroup, "unknown group: " + name);
}

GroupSpec load_group_file(const std::string& path, uint32_t max_degree) {
  GeneratorFile file = read_generator_file(path, max_degree);
  return build_spec(path, file, false, false);
}

}  // namespace cayley
