// Times the OpenMP kernels against their serial reference twins, and the
// recursive pair-product evaluator against the naive tuple oracle.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "ocw/catalog.hpp"
#include "ocw/evaluator.hpp"
#include "ocw/kernels.hpp"
#include "ocw/limits.hpp"
#include "ocw/word_parser.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto start = Clock::now();
    fn();
    auto stop = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

ocw::GroupPtr symmetric_group(unsigned degree) {
  std::vector<std::uint8_t> cycle(degree), swap(degree);
  for (unsigned i = 0; i < degree; ++i) cycle[i] = static_cast<std::uint8_t>((i + 1) % degree);
  for (unsigned i = 0; i < degree; ++i) swap[i] = static_cast<std::uint8_t>(i);
  std::swap(swap[0], swap[1]);
  return ocw::PermGroup::from_generators(
      degree, {ocw::Permutation(cycle), ocw::Permutation(swap)}, "S" + std::to_string(degree));
}

}  // namespace

int main(int argc, char** argv) {
  bool big = false;
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--big")) big = true;
    if (!std::strcmp(argv[i], "--quick")) quick = true;
  }
  const int repeats = quick ? 1 : 3;

  if (big) ocw::limits().max_group_order = 6000;
  ocw::GroupPtr g = symmetric_group(big ? 7 : quick ? 5 : 6);
  const auto& elems = g->elements();
  std::printf("pairwise commutator kernel on %s (%zu x %zu pairs)\n", g->name().c_str(),
              elems.size(), elems.size());

  std::vector<ocw::Permutation> serial_out, parallel_out;
  double serial_ms = time_ms(
      [&] { serial_out = ocw::kernels::pairwise_commutators_serial(elems, elems, nullptr); },
      repeats);
  double parallel_ms = time_ms(
      [&] { parallel_out = ocw::kernels::pairwise_commutators_parallel(elems, elems, nullptr); },
      repeats);
  std::printf("  serial   %10.2f ms  (%zu distinct values)\n", serial_ms, serial_out.size());
  std::printf("  parallel %10.2f ms  (%zu distinct values)  speedup %.2fx\n", parallel_ms,
              parallel_out.size(), serial_ms / parallel_ms);
  if (serial_out != parallel_out) {
    std::printf("  MISMATCH between serial and parallel results\n");
    return 1;
  }

  for (const char* expr : {"g3", "d2"}) {
    ocw::WordTree w = ocw::parse_word(expr);
    ocw::ValueSet fast, naive;
    // Fresh group per repeat so the evaluator memoization cannot hide work.
    double fast_ms = 1e300;
    for (int r = 0; r < repeats; ++r) {
      ocw::GroupPtr s4 = symmetric_group(4);
      fast_ms = std::min(fast_ms, time_ms([&] { fast = ocw::value_set(s4, w, nullptr); }, 1));
      double naive_once = time_ms([&] { naive = ocw::value_set_naive(s4, w); }, 1);
      if (r == repeats - 1) {
        std::printf("value set of %s on S4: recursive %8.3f ms, naive %8.3f ms, m=%zu %s\n",
                    expr, fast_ms, naive_once, fast.size(),
                    fast.values == naive.values ? "(agree)" : "(MISMATCH)");
        if (fast.values != naive.values) return 1;
      }
    }
  }
  return 0;
}
