#include "ocw/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

namespace ocw::kernels {

namespace {

#ifdef _OPENMP
std::atomic<bool> g_parallel{true};
#else
std::atomic<bool> g_parallel{false};
#endif

using PermSet = std::unordered_set<Permutation, PermutationHash>;

Permutation reduce(Permutation p, const Subgroup* mod) {
  return mod ? coset_rep(p, *mod) : std::move(p);
}

std::vector<Permutation> sorted_unique(PermSet&& set) {
  std::vector<Permutation> out;
  out.reserve(set.size());
  for (auto it = set.begin(); it != set.end();) out.push_back(std::move(set.extract(it++).value()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool parallel_enabled() { return g_parallel.load(); }
void set_parallel_enabled(bool enabled) { g_parallel.store(enabled); }

std::vector<Permutation> pairwise_commutators_serial(std::span<const Permutation> lhs,
                                                     std::span<const Permutation> rhs,
                                                     const Subgroup* mod) {
  PermSet values;
  for (const Permutation& a : lhs) {
    const Permutation a_inv = a.inverse();
    for (const Permutation& b : rhs)
      values.insert(reduce(a_inv * b.inverse() * a * b, mod));
  }
  return sorted_unique(std::move(values));
}

std::vector<Permutation> pairwise_commutators_parallel(std::span<const Permutation> lhs,
                                                       std::span<const Permutation> rhs,
                                                       const Subgroup* mod) {
  PermSet values;
  const long long n = static_cast<long long>(lhs.size());
#pragma omp parallel
  {
    PermSet local;
#pragma omp for schedule(dynamic, 4) nowait
    for (long long i = 0; i < n; ++i) {
      const Permutation a_inv = lhs[i].inverse();
      for (const Permutation& b : rhs)
        local.insert(reduce(a_inv * b.inverse() * lhs[i] * b, mod));
    }
#pragma omp critical(ocw_pairwise_merge)
    values.merge(local);
  }
  return sorted_unique(std::move(values));
}

std::vector<Permutation> pairwise_commutators(std::span<const Permutation> lhs,
                                              std::span<const Permutation> rhs,
                                              const Subgroup* mod) {
  return parallel_enabled() ? pairwise_commutators_parallel(lhs, rhs, mod)
                            : pairwise_commutators_serial(lhs, rhs, mod);
}

bool closed_under_conjugation_serial(std::span<const Permutation> values,
                                     std::span<const Permutation> conjugators,
                                     const Subgroup* mod,
                                     std::span<const Permutation> within) {
  for (const Permutation& x : values)
    for (const Permutation& g : conjugators) {
      Permutation y = reduce(x.conjugated_by(g), mod);
      if (!std::binary_search(within.begin(), within.end(), y)) return false;
    }
  return true;
}

bool closed_under_conjugation_parallel(std::span<const Permutation> values,
                                       std::span<const Permutation> conjugators,
                                       const Subgroup* mod,
                                       std::span<const Permutation> within) {
  std::atomic<bool> ok{true};
  const long long n = static_cast<long long>(values.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    for (const Permutation& g : conjugators) {
      Permutation y = reduce(values[i].conjugated_by(g), mod);
      if (!std::binary_search(within.begin(), within.end(), y)) {
        ok.store(false, std::memory_order_relaxed);
        break;
      }
    }
  }
  return ok.load();
}

bool closed_under_conjugation(std::span<const Permutation> values,
                              std::span<const Permutation> conjugators, const Subgroup* mod,
                              std::span<const Permutation> within) {
  return parallel_enabled()
             ? closed_under_conjugation_parallel(values, conjugators, mod, within)
             : closed_under_conjugation_serial(values, conjugators, mod, within);
}

}  // namespace ocw::kernels
