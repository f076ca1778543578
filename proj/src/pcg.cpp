#include "ocw/pcg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "ocw/error.hpp"
#include "ocw/kernels.hpp"
#include "ocw/perm.hpp"

namespace ocw {

namespace {

Subgroup base_or_trivial(const GroupPtr& g, const Subgroup* base) {
  if (!base) return Subgroup::trivial(g);
  if (base->parent() != g) throw argument_error("base subgroup belongs to a different group");
  return *base;
}

// Subgroup generated by `extra` together with `carry`.
Subgroup extend_subgroup(const GroupPtr& g, const Subgroup& carry,
                         std::span<const Permutation> extra) {
  std::vector<Permutation> gens = carry.elements();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return generated_subgroup(g, gens);
}

std::vector<Permutation> sorted_unique(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Permutation> intersect_elements(const std::vector<Permutation>& a,
                                            const std::vector<Permutation>& b) {
  std::vector<Permutation> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string to_string(PcgCondition c) {
  switch (c) {
    case PcgCondition::normal: return "normal";
    case PcgCondition::abelian: return "abelian";
    case PcgCondition::p1: return "P1";
    case PcgCondition::p2: return "P2";
  }
  return "?";
}

PcgReport verify_pcg(const PcgSeries& s) {
  PcgReport report;
  auto fail = [&](std::size_t step, PcgCondition c, std::optional<Permutation> witness,
                  std::string detail) {
    report.ok = false;
    report.failures.push_back({step, c, std::move(witness), std::move(detail)});
  };

  const GroupPtr& g = s.group;
  if (!s.base.is_normal_in_parent())
    fail(0, PcgCondition::normal, std::nullopt, "base subgroup is not normal");

  const Subgroup* prev = &s.base;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const std::size_t step_no = i + 1;
    const Subgroup& h = s.steps[i].subgroup;

    if (!subgroup_leq(*prev, h))
      fail(step_no, PcgCondition::p1, std::nullopt, "chain is not ascending");
    if (!h.is_normal_in_parent())
      fail(step_no, PcgCondition::normal, std::nullopt, "step subgroup is not normal");

    Subgroup section_comm = commutator_subgroup(h, h);
    if (!subgroup_leq(section_comm, *prev)) {
      std::optional<Permutation> witness;
      for (const Permutation& a : h.elements()) {
        for (const Permutation& b : h.elements()) {
          Permutation c = commutator(a, b);
          if (!prev->contains(c)) {
            witness = c;
            break;
          }
        }
        if (witness) break;
      }
      fail(step_no, PcgCondition::abelian, witness, "section is not abelian");
    }

    Subgroup generated = extend_subgroup(g, *prev, s.steps[i].witnesses);
    if (!(generated.elements() == h.elements()))
      fail(step_no, PcgCondition::p1, std::nullopt,
           "witnesses and the previous term generate order " +
               std::to_string(generated.order()) + ", expected " + std::to_string(h.order()));

    if (prev->is_normal_in_parent()) {
      ValueSet values = value_set(g, s.word, prev->is_trivial() ? nullptr : prev);
      for (const Permutation& x : s.steps[i].witnesses) {
        const int order = element_order(x);
        for (int n = 0; n < order; ++n) {
          Permutation p = power(x, n);
          Permutation rep = prev->is_trivial() ? p : coset_rep(p, *prev);
          if (!values.contains(rep)) {
            fail(step_no, PcgCondition::p2, x,
                 "power n=" + std::to_string(n) +
                     " is not a word value modulo the previous term");
            break;
          }
        }
      }
    }

    prev = &h;
  }
  return report;
}

PcgSeries join(const PcgSeries& a, const PcgSeries& b) {
  if (a.group != b.group || !(a.word == b.word) || !(a.base == b.base))
    throw argument_error("join requires the same group, word and base");
  PcgSeries out = a;
  for (const PcgStep& step : b.steps) {
    Subgroup lifted = join_subgroups(step.subgroup, out.top());
    out.steps.push_back({std::move(lifted), step.witnesses});
  }
  return out;
}

PcgSeries commutator_lift(const PcgSeries& s, const WordTree& beta,
                          const Subgroup& beta_group, const Subgroup& modulus) {
  const GroupPtr& g = beta_group.parent();
  if (modulus.parent() != g) throw argument_error("modulus belongs to a different group");

  const std::vector<Permutation>& top = s.top().elements();
  const std::vector<Permutation>& b = beta_group.elements();

  // Hypothesis [L, B, L] <= modulus.
  std::vector<Permutation> lb = kernels::pairwise_commutators(top, b, nullptr);
  std::vector<Permutation> lbl = kernels::pairwise_commutators(lb, top, nullptr);
  for (const Permutation& c : lbl) {
    if (modulus.contains(c)) continue;
    // Re-scan to name a violating triple.
    for (const Permutation& l1 : top)
      for (const Permutation& y : b)
        for (const Permutation& l2 : top)
          if (commutator(commutator(l1, y), l2) == c)
            throw precondition_error(
                "commutator lift hypothesis fails: [[l, b], l'] lies outside the modulus for l=" +
                format_cycles(l1) + " b=" + format_cycles(y) + " l'=" + format_cycles(l2));
    throw precondition_error("commutator lift hypothesis fails");
  }

  ValueSet beta_values = value_set(g, beta, nullptr);

  PcgSeries out;
  out.group = g;
  out.word = WordTree::commutator(s.word, beta);
  out.base = extend_subgroup(
      g, modulus, kernels::pairwise_commutators(s.base.elements(), b, nullptr));
  for (const PcgStep& step : s.steps) {
    PcgStep lifted;
    lifted.subgroup = extend_subgroup(
        g, modulus, kernels::pairwise_commutators(step.subgroup.elements(), b, nullptr));
    std::vector<Permutation> witnesses;
    witnesses.reserve(step.witnesses.size() * beta_values.values.size());
    for (const Permutation& x : step.witnesses)
      for (const Permutation& y : beta_values.values) witnesses.push_back(commutator(x, y));
    lifted.witnesses = sorted_unique(std::move(witnesses));
    out.steps.push_back(std::move(lifted));
  }
  return out;
}

namespace {

// Derived length of g modulo `base`: smallest d with G^(d) <= base.
// argument_error when the derived series stabilizes above base.
int derived_length_mod(const DerivedSeriesResult& series, const Subgroup& base) {
  for (std::size_t j = 0; j < series.terms.size(); ++j)
    if (subgroup_leq(series.terms[j], base)) return static_cast<int>(j);
  throw argument_error("group is not soluble modulo the base subgroup");
}

// The i-th term, repeating the stable term past the end.
const Subgroup& series_term(const DerivedSeriesResult& series, int i) {
  std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(i), series.terms.size() - 1);
  return series.terms[idx];
}

PcgSeries build_derived_impl(const GroupPtr& g, int i, const Subgroup& base);

// Series of length <= 2^i from `modulus` to G^(i) * modulus w.r.t. the
// derived word of index i, assuming [G^(i), G^(i)] <= modulus.
PcgSeries build_derived_abelian(const GroupPtr& g, int i, const Subgroup& modulus,
                                const DerivedSeriesResult& series) {
  if (!subgroup_leq(series_term(series, i + 1), modulus))
    throw internal_error("abelian-case construction invoked without its hypothesis");

  if (i == 0) {
    PcgSeries out;
    out.group = g;
    out.word = WordTree::indeterminate();
    out.base = modulus;
    PcgStep step;
    step.subgroup = Subgroup::whole(g);
    step.witnesses = value_set(g, WordTree::indeterminate(), &modulus).values;
    out.steps.push_back(std::move(step));
    return out;
  }

  const WordTree half = WordTree::full(i - 1);
  const Subgroup& b = series_term(series, i - 1);

  // First half: recurse into the derived subgroup as its own group, then lift
  // by commutators with G^(i-1); lands on [G^(i), G^(i-1)] * modulus.
  const Subgroup& derived = series_term(series, 1);
  GroupPtr gp = PermGroup::from_elements(g->degree(), derived.elements(),
                                         g->name().empty() ? "" : g->name() + "'");
  Subgroup inner_base = Subgroup::from_elements(
      gp, intersect_elements(modulus.elements(), derived.elements()));
  PcgSeries inner1 = build_derived_impl(gp, i - 1, inner_base);
  PcgSeries part1 = commutator_lift(inner1, half, b, modulus);

  // Second half: the abelian case one index down, taken modulo G^(i), lifted
  // the same way; continues from part1's top to G^(i) * modulus.
  Subgroup mid = join_subgroups(series_term(series, i), modulus);
  PcgSeries inner2 = build_derived_abelian(g, i - 1, mid, series);
  PcgSeries part2 = commutator_lift(inner2, half, b, part1.top());

  if (!(part1.base == modulus) || !(part2.base == part1.top()))
    throw internal_error("derived-word construction pieces do not chain");

  PcgSeries out;
  out.group = g;
  out.word = WordTree::full(i);
  out.base = modulus;
  out.steps = std::move(part1.steps);
  out.steps.insert(out.steps.end(), std::make_move_iterator(part2.steps.begin()),
                   std::make_move_iterator(part2.steps.end()));
  return out;
}

PcgSeries build_derived_impl(const GroupPtr& g, int i, const Subgroup& base) {
  if (i < 0) throw argument_error("derived word index must be >= 0");
  DerivedSeriesResult series = derived_series(g);
  int d = derived_length_mod(series, base);

  PcgSeries out;
  out.group = g;
  out.word = WordTree::full(i);
  out.base = base;
  if (i >= d) return out;  // G^(i) already lies in the base

  for (int j = d - 1; j >= i; --j) {
    Subgroup modulus = join_subgroups(series_term(series, j + 1), base);
    PcgSeries piece = build_derived_abelian(g, j, modulus, series);
    // The piece is a series w.r.t. the derived word of index j >= i, which is
    // a value of the index-i derived word; the chain stays valid for it.
    if (!(piece.base == out.top())) throw internal_error("derived-series pieces do not chain");
    out.steps.insert(out.steps.end(), std::make_move_iterator(piece.steps.begin()),
                     std::make_move_iterator(piece.steps.end()));
  }
  return out;
}

}  // namespace

PcgSeries build_derived(const GroupPtr& g, int i, const Subgroup* base) {
  return build_derived_impl(g, i, base_or_trivial(g, base));
}

namespace {

struct BuildKey {
  std::string shape;
  std::vector<Permutation> base;

  friend bool operator<(const BuildKey& a, const BuildKey& b) {
    if (a.shape != b.shape) return a.shape < b.shape;
    return a.base < b.base;
  }
};

std::mutex g_build_mutex;
std::map<std::weak_ptr<const PermGroup>, std::map<BuildKey, PcgSeries>,
         std::owner_less<std::weak_ptr<const PermGroup>>>
    g_build_cache;

PcgSeries build_impl(const GroupPtr& g, const WordTree& w, const Subgroup& base) {
  BuildKey key{w.shape(), base.elements()};
  {
    std::lock_guard lock(g_build_mutex);
    auto it = g_build_cache.find(g);
    if (it != g_build_cache.end()) {
      auto jt = it->second.find(key);
      if (jt != it->second.end()) return jt->second;
    }
  }

  PcgSeries result;
  const WordMeasures m = w.measures();
  if (m.height == 0) {
    result = build_derived_impl(g, 0, base);
  } else if (m.defect == 0) {
    result = build_derived_impl(g, m.height, base);
  } else {
    // Join the series of all same-height proper extensions; their verbal
    // subgroups land inside the join top L.
    PcgSeries acc;
    acc.group = g;
    acc.word = w;
    acc.base = base;
    for (const WordTree& phi : proper_extensions(w)) {
      PcgSeries sphi = build_impl(g, phi, base);
      sphi.word = w;  // every value of the extension is a value of w
      acc = join(acc, sphi);
    }
    const Subgroup big = acc.top();

    const int i = max_delta_level(w);
    Subgroup omega_sub = verbal_subgroup(g, w, &base);
    Subgroup delta_sub = derived_term(g, i);
    if (!subgroup_leq(commutator_subgroup(omega_sub, delta_sub), big))
      throw internal_error(
          "the verbal subgroup does not commute with the derived term modulo the joined "
          "extensions");

    const WordTree alpha = w.subtree(w.at(w.root()).left);
    const WordTree beta = w.subtree(w.at(w.root()).right);
    const WordTree delta_word = WordTree::full(i);
    const bool in_beta = is_constituent(delta_word, beta);
    if (!in_beta && !is_constituent(delta_word, alpha))
      throw internal_error("no side of the word contains the maximal derived constituent");

    // Build the series for the side containing the derived constituent and
    // lift it by commutators with the partner's verbal subgroup.
    const WordTree& side = in_beta ? beta : alpha;
    const WordTree& partner = in_beta ? alpha : beta;
    PcgSeries side_series = build_impl(g, side, big);
    Subgroup partner_sub = verbal_subgroup(g, partner, nullptr);
    PcgSeries lifted = commutator_lift(side_series, partner, partner_sub, big);
    // When the constituent sits on the right, the lift is w.r.t. the mirror
    // word; its values coincide with w's since value sets are symmetric.
    lifted.word = w;
    if (!(lifted.base == big)) throw internal_error("lifted series does not chain onto the join");

    result = std::move(acc);
    result.steps.insert(result.steps.end(), std::make_move_iterator(lifted.steps.begin()),
                        std::make_move_iterator(lifted.steps.end()));
  }

  {
    std::lock_guard lock(g_build_mutex);
    for (auto it = g_build_cache.begin(); it != g_build_cache.end();)
      it = it->first.expired() ? g_build_cache.erase(it) : std::next(it);
    g_build_cache[g].emplace(std::move(key), result);
  }
  return result;
}

}  // namespace

PcgSeries build(const GroupPtr& g, const WordTree& w, const Subgroup* base) {
  return build_impl(g, w, base_or_trivial(g, base));
}

std::size_t CyclicRefinement::section_order_sum() const {
  std::size_t sum = 0;
  for (const CyclicStep& s : steps) sum += s.section_order;
  return sum;
}

CyclicRefinement refine_cyclic(const PcgSeries& s) {
  ValueSet values = value_set(s.group, s.word, nullptr);

  CyclicRefinement out;
  out.group = s.group;
  out.word = s.word;
  out.base = s.base;

  Subgroup current = s.base;
  for (const PcgStep& step : s.steps) {
    while (current.order() < step.subgroup.order()) {
      const Permutation* chosen = nullptr;
      for (const Permutation& x : step.witnesses)
        if (!current.contains(x)) {
          chosen = &x;
          break;
        }
      if (!chosen)
        throw internal_error("witnesses exhausted before the step subgroup was reached");

      Subgroup next = extend_subgroup(s.group, current, std::span(chosen, 1));
      if (!subgroup_leq(commutator_subgroup(next, next), current))
        throw internal_error("cyclic refinement produced a non-normal section");
      const std::size_t section = next.order() / current.order();

      // Every nontrivial coset of the section must contain a word value.
      Permutation p = *chosen;
      for (std::size_t t = 1; t < section; ++t) {
        bool covered = false;
        for (const Permutation& y : values.values) {
          if (y.is_identity()) continue;
          if (current.contains(p * y.inverse())) {
            covered = true;
            break;
          }
        }
        if (!covered) throw internal_error("cyclic section coset carries no word value");
        p = p * *chosen;
      }

      out.steps.push_back({next, *chosen, section});
      current = std::move(next);
    }
  }
  if (!(current.elements() == s.top().elements()))
    throw internal_error("cyclic refinement did not reach the series top");
  return out;
}

std::vector<int> dietzmann_decompose(const GroupPtr& g, std::span<const Permutation> xs,
                                     const Permutation& y) {
  std::vector<Permutation> set = sorted_unique({xs.begin(), xs.end()});
  for (const Permutation& x : xs)
    for (const Permutation& c : g->generators())
      if (!std::binary_search(set.begin(), set.end(), x.conjugated_by(c)))
        throw argument_error("the subset is not normal: conjugate of " + format_cycles(x) +
                             " escapes it");

  Subgroup span_sub = generated_subgroup(g, xs);
  if (!span_sub.contains(y))
    throw argument_error("element does not lie in the subgroup generated by the subset");

  // Layered shortest path over prefix products, minimizing the exponent sum
  // with lexicographically smallest exponents on ties.
  struct State {
    long long cost;
    std::vector<int> exponents;
  };
  std::map<Permutation, State> layer;
  layer.emplace(g->identity_element(), State{0, {}});
  for (const Permutation& c : xs) {
    const int order = element_order(c);
    std::map<Permutation, State> next;
    for (const auto& [product, state] : layer) {
      Permutation p = product;
      for (int t = 0; t < order; ++t) {
        State candidate{state.cost + t, state.exponents};
        candidate.exponents.push_back(t);
        auto it = next.find(p);
        if (it == next.end()) {
          next.emplace(p, std::move(candidate));
        } else if (candidate.cost < it->second.cost ||
                   (candidate.cost == it->second.cost &&
                    candidate.exponents < it->second.exponents)) {
          it->second = std::move(candidate);
        }
        p = p * c;
      }
    }
    layer = std::move(next);
  }

  auto it = layer.find(y);
  if (it == layer.end()) throw internal_error("no prefix-product decomposition found");
  return it->second.exponents;
}

}  // namespace ocw
