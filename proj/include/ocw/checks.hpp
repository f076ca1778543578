#ifndef OCW_CHECKS_HPP
#define OCW_CHECKS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocw/catalog.hpp"
#include "ocw/perm_group.hpp"
#include "ocw/word_tree.hpp"

namespace ocw {

/// Outcome of one theorem/lemma check on one (group, word) instance, with
/// enough data to re-run it.
struct CheckReport {
  std::string subject;
  std::string group;
  std::string word;
  std::map<std::string, long long> quantities;
  bool ok = true;
  std::optional<std::string> counterexample;
  std::optional<std::string> skip_reason;

  bool skipped() const { return skip_reason.has_value(); }
};

// base^exp clamped to the int64 maximum.
long long saturating_pow(long long base, long long exp);

// Value set closed under inversion.
CheckReport check_symmetry(const GroupPtr& g, const WordTree& w);

// [w(G), gamma(G)] lies in the product of the pi_v(G) over the section.
CheckReport check_three_subgroup(const GroupPtr& g, const WordTree& w, const WordTree& gamma,
                                 const Section& s);

// Soluble: |w(G)| <= 2^(m-1) plus the full build/verify/refine round trip.
// Non-soluble: m >= 3, |w(G)| <= (m-1)^(m-1), and every value of the derived
// word of index height+1 has order at most (m-1)(m-2).
CheckReport check_theorem_a(const GroupPtr& g, const WordTree& w);

// build + verify_pcg; top equals the verbal subgroup; skipped when g is not
// soluble.
CheckReport check_theorem_b(const GroupPtr& g, const WordTree& w);

struct SuiteSummary {
  int ok = 0;
  int fail = 0;
  int skip = 0;
};

/// Cross product catalog x words x {symmetry, three-subgroup, theorem-a,
/// theorem-b} in deterministic order; resource errors downgrade to skips.
std::vector<CheckReport> run_suite(std::span<const CatalogEntry> catalog,
                                   std::span<const WordTree> words);

SuiteSummary summarize(std::span<const CheckReport> reports);

}  // namespace ocw

#endif
