#include "ocw/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "ocw/error.hpp"

namespace ocw {

namespace {

struct BuiltinSpec {
  const char* name;
  const char* text;
};

// Regular representations are used where no small faithful degree is
// convenient (Q8: points ordered 1,-1,i,-i,j,-j,k,-k under right
// multiplication by i and j).
const BuiltinSpec kBuiltins[] = {
    {"C2", "degree 2\ngen (1 2)\n"},
    {"C3", "degree 3\ngen (1 2 3)\n"},
    {"C4", "degree 4\ngen (1 2 3 4)\n"},
    {"C5", "degree 5\ngen (1 2 3 4 5)\n"},
    {"C6", "degree 6\ngen (1 2 3 4 5 6)\n"},
    {"S3", "degree 3\ngen (1 2 3)\ngen (1 2)\n"},
    {"S4", "degree 4\ngen (1 2 3 4)\ngen (1 2)\n"},
    {"A4", "degree 4\ngen (1 2 3)\ngen (2 3 4)\n"},
    {"D4", "degree 4\ngen (1 2 3 4)\ngen (1 3)\n"},
    {"Q8", "degree 8\ngen (1 3 2 4)(5 8 6 7)\ngen (1 5 2 6)(3 7 4 8)\n"},
    {"S3xS3", "degree 6\ngen (1 2 3)\ngen (1 2)\ngen (4 5 6)\ngen (4 5)\n"},
    {"A5", "degree 5\ngen (1 2 3 4 5)\ngen (1 2 3)\n"},
    {"S5", "degree 5\ngen (1 2 3 4 5)\ngen (1 2)\n"},
};

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

GroupPtr parse_group_stream(std::istream& in, const std::string& fallback_name,
                            const std::string& origin) {
  std::string name = fallback_name;
  int degree = -1;
  std::vector<Permutation> gens;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string directive;
    ls >> directive;
    std::string rest = strip(line.substr(directive.size()));

    auto fail = [&](const std::string& msg) -> parse_error {
      return parse_error(origin + ": " + msg, line_no);
    };

    if (directive == "name") {
      if (rest.empty()) throw fail("name directive needs a value");
      name = rest;
    } else if (directive == "degree") {
      int value = 0;
      std::istringstream vs(rest);
      if (!(vs >> value) || value < 1 || value > 200) throw fail("degree must be in 1..200");
      degree = value;
    } else if (directive == "gen") {
      if (degree < 0) throw fail("degree must come before generators");
      try {
        gens.push_back(parse_cycles(static_cast<unsigned>(degree), rest));
      } catch (const parse_error& e) {
        throw fail(std::string("bad cycle notation: ") + e.what());
      }
    } else {
      throw fail("unknown directive '" + directive + "'");
    }
  }
  if (degree < 0) throw parse_error(origin + ": missing degree", line_no);
  return PermGroup::from_generators(static_cast<unsigned>(degree), std::move(gens),
                                    std::move(name));
}

GroupPtr parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw argument_error("cannot open group file: " + path);
  return parse_group_stream(in, std::filesystem::path(path).stem().string(), path);
}

CatalogEntry make_entry(std::string name, std::string source, GroupPtr group) {
  CatalogEntry e;
  e.name = std::move(name);
  e.source = std::move(source);
  DerivedSeriesResult ds = derived_series(group);
  e.soluble = ds.soluble();
  e.derived_length = ds.derived_length;
  e.group = std::move(group);
  return e;
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  out.reserve(std::size(kBuiltins));
  for (const BuiltinSpec& spec : kBuiltins) {
    std::istringstream in(spec.text);
    out.push_back(make_entry(spec.name, "builtin", parse_group_stream(in, spec.name, spec.name)));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(std::span<const std::string> paths, bool include_builtin) {
  std::vector<CatalogEntry> out;
  if (include_builtin) out = builtin_catalog();
  for (const std::string& path : paths) {
    GroupPtr g = parse_group_file(path);
    out.push_back(make_entry(g->name(), path, g));
  }
  std::unordered_set<std::string> names;
  for (const CatalogEntry& e : out)
    if (!names.insert(e.name).second)
      throw argument_error("duplicate catalog entry name: " + e.name);
  return out;
}

const CatalogEntry* find_entry(std::span<const CatalogEntry> catalog, std::string_view name) {
  for (const CatalogEntry& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace ocw
