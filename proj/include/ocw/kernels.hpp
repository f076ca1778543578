#ifndef OCW_KERNELS_HPP
#define OCW_KERNELS_HPP

#include <span>
#include <vector>

#include "ocw/perm.hpp"
#include "ocw/perm_group.hpp"

namespace ocw::kernels {

// Runtime switch between the OpenMP kernels and their serial reference
// twins. Defaults to on when compiled with OpenMP. The `_serial` variants
// are the reference implementations the tests compare against.
bool parallel_enabled();
void set_parallel_enabled(bool enabled);

/// All commutators [a,b] with a in lhs, b in rhs, reduced to canonical coset
/// representatives when `mod` is given; sorted and deduplicated.
std::vector<Permutation> pairwise_commutators_serial(std::span<const Permutation> lhs,
                                                     std::span<const Permutation> rhs,
                                                     const Subgroup* mod);
std::vector<Permutation> pairwise_commutators_parallel(std::span<const Permutation> lhs,
                                                       std::span<const Permutation> rhs,
                                                       const Subgroup* mod);
std::vector<Permutation> pairwise_commutators(std::span<const Permutation> lhs,
                                              std::span<const Permutation> rhs,
                                              const Subgroup* mod);

/// True iff g^-1 x g (coset-reduced when `mod` is given) lies in the sorted
/// set `within` for every x in values and g in conjugators.
bool closed_under_conjugation_serial(std::span<const Permutation> values,
                                     std::span<const Permutation> conjugators,
                                     const Subgroup* mod,
                                     std::span<const Permutation> within);
bool closed_under_conjugation_parallel(std::span<const Permutation> values,
                                       std::span<const Permutation> conjugators,
                                       const Subgroup* mod,
                                       std::span<const Permutation> within);
bool closed_under_conjugation(std::span<const Permutation> values,
                              std::span<const Permutation> conjugators, const Subgroup* mod,
                              std::span<const Permutation> within);

}  // namespace ocw::kernels

#endif
