#ifndef OCW_PCG_HPP
#define OCW_PCG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocw/evaluator.hpp"
#include "ocw/perm_group.hpp"
#include "ocw/word_tree.hpp"

namespace ocw {

struct PcgStep {
  Subgroup subgroup;                   // H_i
  std::vector<Permutation> witnesses;  // S_i, sorted
};

/// Ascending chain base = H_0 <= H_1 <= ... <= H_n of normal subgroups with
/// per-step witness generator sets. A verified series has abelian sections
/// H_i/H_{i-1} generated by the witnesses, each witness being a word value
/// modulo H_{i-1} with all its powers again word values modulo H_{i-1}.
struct PcgSeries {
  GroupPtr group;
  WordTree word;
  Subgroup base;
  std::vector<PcgStep> steps;

  const Subgroup& top() const { return steps.empty() ? base : steps.back().subgroup; }
  std::size_t length() const { return steps.size(); }
};

enum class PcgCondition { normal, abelian, p1, p2 };

struct PcgFailure {
  std::size_t step = 0;  // 0 = base, 1.. = steps
  PcgCondition condition = PcgCondition::normal;
  std::optional<Permutation> witness;
  std::string detail;
};

struct PcgReport {
  bool ok = true;
  std::vector<PcgFailure> failures;
};

std::string to_string(PcgCondition c);

/// Checks, per step: normality in the group, abelian section, generation
/// (P1: H_i = <S_i> H_{i-1}) and power-closed values (P2: every power of
/// every witness is a word value modulo H_{i-1}). Failures are collected,
/// never thrown.
PcgReport verify_pcg(const PcgSeries& s);

// Joins two series over the same group/word/base: a's steps, then b's
// subgroups multiplied by a's top, witnesses carried over.
PcgSeries join(const PcgSeries& a, const PcgSeries& b);

/// Turns a series from K to L w.r.t. alpha into one from [K,B] to [L,B]
/// (times `modulus`) w.r.t. [alpha,beta], with witnesses {[x,y] : x in S_i,
/// y in beta-values}. Requires [L, B, L] <= modulus; throws
/// precondition_error naming a violating triple otherwise.
PcgSeries commutator_lift(const PcgSeries& s, const WordTree& beta,
                          const Subgroup& beta_group, const Subgroup& modulus);

/// Series from base to the i-th derived subgroup (times base) w.r.t. the
/// derived word of index i; length at most 2^d - 2^i where d is the derived
/// length modulo base. Throws argument_error when g is not soluble mod base.
PcgSeries build_derived(const GroupPtr& g, int i, const Subgroup* base = nullptr);

/// Full construction for an arbitrary outer commutator word: double
/// induction on height and defect, via same-height proper extensions and the
/// commutator lift.
PcgSeries build(const GroupPtr& g, const WordTree& w, const Subgroup* base = nullptr);

struct CyclicStep {
  Subgroup subgroup;
  Permutation generator;
  std::size_t section_order = 1;
};

/// Refinement of a verified series into a chain with cyclic sections, each
/// generated by a word value whose powers are all word values in the
/// section; every nontrivial coset of every section contains a word value.
struct CyclicRefinement {
  GroupPtr group;
  WordTree word;
  Subgroup base;
  std::vector<CyclicStep> steps;

  std::size_t section_order_sum() const;
};

CyclicRefinement refine_cyclic(const PcgSeries& s);

/// Dietzmann decomposition: for a normal subset X = (c_1,...,c_n) of g and
/// y in <X>, exponents r with prod c_i^(r_i) = y in the given order.
/// Minimizes the exponent sum, ties broken lexicographically.
std::vector<int> dietzmann_decompose(const GroupPtr& g, std::span<const Permutation> xs,
                                     const Permutation& y);

}  // namespace ocw

#endif
