#ifndef OCW_EVALUATOR_HPP
#define OCW_EVALUATOR_HPP

#include <optional>
#include <span>
#include <vector>

#include "ocw/perm_group.hpp"
#include "ocw/word_tree.hpp"

namespace ocw {

/// The set of values a word takes in a group, optionally modulo a normal
/// subgroup (in which case the values are canonical coset representatives).
struct ValueSet {
  GroupPtr group;
  WordTree word;
  std::optional<Subgroup> modulus;
  std::vector<Permutation> values;  // sorted, deduplicated

  std::size_t size() const { return values.size(); }  // m
  bool contains(const Permutation& p) const;
};

/// Recursive pair-product evaluation: a leaf takes every element (coset rep),
/// a commutator vertex takes all commutators of pairs from its children's
/// value sets. Sound because outer words use pairwise disjoint
/// indeterminates, so the two sides range independently.
ValueSet value_set(const GroupPtr& g, const WordTree& w, const Subgroup* modulus = nullptr);

/// Reference oracle: enumerates all |G|^k argument tuples, serially.
ValueSet value_set_naive(const GroupPtr& g, const WordTree& w);

/// Substitutes assignment[leaf_index] for each indeterminate.
Permutation evaluate_word(const WordTree& w, std::span<const Permutation> assignment);

// Subgroup generated by the value set (together with the modulus when given);
// normal in g.
Subgroup verbal_subgroup(const GroupPtr& g, const WordTree& w,
                         const Subgroup* modulus = nullptr);

/// Maximum over s in `over` (default: the whole verbal subgroup) of the
/// minimal length of a factorization of s into values and inverse values.
int width(const GroupPtr& g, const WordTree& w, std::span<const Permutation> over = {});

}  // namespace ocw

#endif
