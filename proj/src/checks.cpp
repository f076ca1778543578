#include "ocw/checks.hpp"

#include <algorithm>
#include <limits>

#include "ocw/error.hpp"
#include "ocw/evaluator.hpp"
#include "ocw/pcg.hpp"
#include "ocw/word_parser.hpp"

namespace ocw {

long long saturating_pow(long long base, long long exp) {
  constexpr long long kMax = std::numeric_limits<long long>::max();
  if (exp < 0) throw argument_error("negative exponent");
  long long result = 1;
  for (long long i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

namespace {

CheckReport make_report(const std::string& subject, const GroupPtr& g, const WordTree& w) {
  CheckReport r;
  r.subject = subject;
  r.group = g->name().empty() ? "order-" + std::to_string(g->order()) : g->name();
  r.word = render_word(w);
  return r;
}

}  // namespace

CheckReport check_symmetry(const GroupPtr& g, const WordTree& w) {
  CheckReport r = make_report("symmetry", g, w);
  ValueSet vs = value_set(g, w, nullptr);
  r.quantities["m"] = static_cast<long long>(vs.size());
  for (const Permutation& x : vs.values) {
    if (!vs.contains(x.inverse())) {
      r.ok = false;
      r.counterexample = format_cycles(x);
      break;
    }
  }
  return r;
}

CheckReport check_three_subgroup(const GroupPtr& g, const WordTree& w, const WordTree& gamma,
                                 const Section& s) {
  CheckReport r = make_report("three-subgroup", g, w);
  if (!is_valid_section(w, s)) throw argument_error("invalid section for the word");

  Subgroup lhs = commutator_subgroup(verbal_subgroup(g, w), verbal_subgroup(g, gamma));
  Subgroup rhs = Subgroup::trivial(g);
  for (VertexId v : s.members)
    rhs = join_subgroups(rhs, verbal_subgroup(g, pi_v(w, v, gamma)));

  r.quantities["section_size"] = static_cast<long long>(s.members.size());
  r.quantities["lhs_order"] = static_cast<long long>(lhs.order());
  r.quantities["rhs_order"] = static_cast<long long>(rhs.order());
  if (!subgroup_leq(lhs, rhs)) {
    r.ok = false;
    for (const Permutation& x : lhs.elements())
      if (!rhs.contains(x)) {
        r.counterexample = format_cycles(x);
        break;
      }
  }
  return r;
}

CheckReport check_theorem_a(const GroupPtr& g, const WordTree& w) {
  CheckReport r = make_report("theorem-a", g, w);
  ValueSet vs = value_set(g, w, nullptr);
  Subgroup verbal = verbal_subgroup(g, w, nullptr);
  const long long m = static_cast<long long>(vs.size());
  const long long order = static_cast<long long>(verbal.order());
  r.quantities["m"] = m;
  r.quantities["order"] = order;

  DerivedSeriesResult ds = derived_series(g);
  if (ds.soluble()) {
    r.quantities["derived_length"] = *ds.derived_length;
    const long long bound = saturating_pow(2, m - 1);
    r.quantities["bound"] = bound;
    if (order > bound) {
      r.ok = false;
      r.counterexample = "order exceeds the soluble bound";
      return r;
    }
    PcgSeries series = build(g, w);
    PcgReport report = verify_pcg(series);
    r.quantities["series_length"] = static_cast<long long>(series.length());
    if (!report.ok || !(series.top().elements() == verbal.elements())) {
      r.ok = false;
      r.counterexample = "series construction or verification failed";
      return r;
    }
    CyclicRefinement refined = refine_cyclic(series);
    const long long sum = static_cast<long long>(refined.section_order_sum());
    const long long k = static_cast<long long>(refined.steps.size());
    r.quantities["refined_steps"] = k;
    r.quantities["refined_sum"] = sum;
    if (sum > m + k - 1) {
      r.ok = false;
      r.counterexample = "cyclic section orders exceed m + k - 1";
    }
  } else {
    const long long bound = saturating_pow(m - 1, m - 1);
    r.quantities["bound"] = bound;
    if (m < 3) {
      r.ok = false;
      r.counterexample = "non-soluble group with fewer than 3 values";
      return r;
    }
    if (order > bound) {
      r.ok = false;
      r.counterexample = "order exceeds the non-soluble bound";
      return r;
    }
    ValueSet deep = value_set(g, WordTree::full(w.height() + 1), nullptr);
    long long max_order = 0;
    const Permutation* worst = nullptr;
    for (const Permutation& x : deep.values) {
      long long o = element_order(x);
      if (o > max_order) {
        max_order = o;
        worst = &x;
      }
    }
    r.quantities["max_deep_value_order"] = max_order;
    r.quantities["order_bound"] = (m - 1) * (m - 2);
    if (max_order > (m - 1) * (m - 2)) {
      r.ok = false;
      r.counterexample = worst ? format_cycles(*worst) : "";
    }
  }
  return r;
}

CheckReport check_theorem_b(const GroupPtr& g, const WordTree& w) {
  CheckReport r = make_report("theorem-b", g, w);
  DerivedSeriesResult ds = derived_series(g);
  if (!ds.soluble()) {
    r.skip_reason = "group is not soluble";
    return r;
  }
  r.quantities["derived_length"] = *ds.derived_length;

  PcgSeries series = build(g, w);
  PcgReport report = verify_pcg(series);
  Subgroup verbal = verbal_subgroup(g, w, nullptr);
  r.quantities["series_length"] = static_cast<long long>(series.length());
  r.quantities["top_order"] = static_cast<long long>(series.top().order());
  r.quantities["verbal_order"] = static_cast<long long>(verbal.order());

  if (!report.ok) {
    r.ok = false;
    const PcgFailure& f = report.failures.front();
    r.counterexample = "step " + std::to_string(f.step) + " " + to_string(f.condition) + ": " +
                       f.detail;
    return r;
  }
  if (!(series.top().elements() == verbal.elements())) {
    r.ok = false;
    r.counterexample = "series top differs from the verbal subgroup";
  }
  return r;
}

std::vector<CheckReport> run_suite(std::span<const CatalogEntry> catalog,
                                   std::span<const WordTree> words) {
  constexpr int kKinds = 4;
  const std::size_t pairs = catalog.size() * words.size();
  std::vector<CheckReport> reports(pairs * kKinds);

  const long long n = static_cast<long long>(pairs);
#pragma omp parallel for schedule(dynamic)
  for (long long p = 0; p < n; ++p) {
    const CatalogEntry& entry = catalog[static_cast<std::size_t>(p) / words.size()];
    const WordTree& word = words[static_cast<std::size_t>(p) % words.size()];
    for (int kind = 0; kind < kKinds; ++kind) {
      CheckReport& slot = reports[static_cast<std::size_t>(p) * kKinds + kind];
      try {
        switch (kind) {
          case 0: slot = check_symmetry(entry.group, word); break;
          case 1:
            slot = check_three_subgroup(entry.group, word, WordTree::indeterminate(),
                                        leaves_section(word));
            break;
          case 2: slot = check_theorem_a(entry.group, word); break;
          default: slot = check_theorem_b(entry.group, word); break;
        }
      } catch (const resource_error& e) {
        slot = CheckReport{};
        slot.subject = kind == 0   ? "symmetry"
                       : kind == 1 ? "three-subgroup"
                       : kind == 2 ? "theorem-a"
                                   : "theorem-b";
        slot.group = entry.name;
        slot.word = render_word(word);
        slot.skip_reason = e.what();
      } catch (const std::exception& e) {
        slot = CheckReport{};
        slot.subject = kind == 0   ? "symmetry"
                       : kind == 1 ? "three-subgroup"
                       : kind == 2 ? "theorem-a"
                                   : "theorem-b";
        slot.group = entry.name;
        slot.word = render_word(word);
        slot.ok = false;
        slot.counterexample = e.what();
      }
    }
  }
  return reports;
}

SuiteSummary summarize(std::span<const CheckReport> reports) {
  SuiteSummary s;
  for (const CheckReport& r : reports) {
    if (r.skipped())
      ++s.skip;
    else if (r.ok)
      ++s.ok;
    else
      ++s.fail;
  }
  return s;
}

}  // namespace ocw
