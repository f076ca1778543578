#ifndef OCW_CATALOG_HPP
#define OCW_CATALOG_HPP

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocw/perm_group.hpp"

namespace ocw {

struct CatalogEntry {
  std::string name;
  std::string source;  // "builtin" or the file path
  GroupPtr group;
  bool soluble = false;
  std::optional<int> derived_length;
};

/// Group definition file format (one directive per line, '#' starts a
/// comment):
///   name <string>     optional; defaults to the file stem
///   degree <n>        required before any generator
///   gen <cycles>      one per generator, 1-indexed disjoint cycles;
///                     the identity generator is ()
GroupPtr parse_group_stream(std::istream& in, const std::string& fallback_name,
                            const std::string& origin);
GroupPtr parse_group_file(const std::string& path);

// The shipped small groups: cyclic C2..C6, S3, S4, A4, D4, Q8 (regular
// representation), S3xS3, A5, S5. Solubility is precomputed.
std::vector<CatalogEntry> builtin_catalog();

CatalogEntry make_entry(std::string name, std::string source, GroupPtr group);

// File entries after the builtins; duplicate names are an error.
std::vector<CatalogEntry> load_catalog(std::span<const std::string> paths, bool include_builtin);

const CatalogEntry* find_entry(std::span<const CatalogEntry> catalog, std::string_view name);

}  // namespace ocw

#endif
