#ifndef OCW_LIMITS_HPP
#define OCW_LIMITS_HPP

#include <cstddef>
#include <cstdint>

namespace ocw {

// Global resource caps. Defaults are generous for the shipped catalog;
// raise them for larger experiments.
struct Limits {
  int max_word_height = 6;
  int max_word_leaves = 64;
  std::size_t max_group_order = 20000;
  std::size_t max_value_set = 20000;
  std::uint64_t naive_eval_budget = 50'000'000;  // tuples times vertices
  std::size_t max_extensions = 200'000;
};

Limits& limits();

}  // namespace ocw

#endif
