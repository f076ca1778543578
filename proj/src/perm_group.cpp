#include "ocw/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "ocw/error.hpp"
#include "ocw/kernels.hpp"
#include "ocw/limits.hpp"

namespace ocw {

namespace {

void check_degrees(unsigned degree, std::span<const Permutation> perms) {
  for (const Permutation& p : perms)
    if (p.degree() != degree) throw argument_error("generator degree mismatch");
}

}  // namespace

std::vector<Permutation> closure(unsigned degree, std::span<const Permutation> gens) {
  check_degrees(degree, gens);
  const std::size_t cap = limits().max_group_order;

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier;
  seen.insert(Permutation::identity(degree));
  frontier.push_back(Permutation::identity(degree));

  // Plain orbit walk under right multiplication by the generators. Inverses
  // come for free in a finite group (g^-1 = g^(order-1) lies on the orbit).
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& e : frontier) {
      for (const Permutation& g : gens) {
        Permutation p = e * g;
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw resource_error("group order exceeds the configured cap");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr PermGroup::from_generators(unsigned degree, std::vector<Permutation> generators,
                                    std::string name) {
  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->name_ = std::move(name);
  g->elements_ = closure(degree, generators);
  g->generators_ = std::move(generators);
  return g;
}

GroupPtr PermGroup::from_elements(unsigned degree, std::vector<Permutation> elements,
                                  std::string name) {
  check_degrees(degree, elements);
  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->name_ = std::move(name);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g->elements_ = std::move(elements);
  g->generators_ = g->elements_;
  return g;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  Subgroup s;
  s.elements_.push_back(parent->identity_element());
  s.parent_ = std::move(parent);
  s.normal_.store(1);
  return s;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  Subgroup s;
  s.elements_ = parent->elements();
  s.parent_ = std::move(parent);
  s.normal_.store(1);
  return s;
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<Permutation> elements) {
  Subgroup s;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const Permutation& p : elements)
    if (!parent->contains(p)) throw argument_error("subgroup element outside the parent group");
  s.elements_ = std::move(elements);
  s.parent_ = std::move(parent);
  return s;
}

bool Subgroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool Subgroup::is_normal_in_parent() const {
  int cached = normal_.load();
  if (cached >= 0) return cached == 1;
  bool normal =
      kernels::closed_under_conjugation(elements_, parent_->generators(), nullptr, elements_);
  normal_.store(normal ? 1 : 0);
  return normal;
}

Subgroup generated_subgroup(GroupPtr parent, std::span<const Permutation> gens) {
  std::vector<Permutation> elems = closure(parent->degree(), gens);
  return Subgroup::from_elements(std::move(parent), std::move(elems));
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent()) throw argument_error("subgroups of different parents");
  std::vector<Permutation> comms =
      kernels::pairwise_commutators(h.elements(), k.elements(), nullptr);
  return generated_subgroup(h.parent(), comms);
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Permutation> s) {
  for (const Permutation& p : s)
    if (!g->contains(p)) throw argument_error("normal closure seed outside the group");

  std::vector<Permutation> gens(s.begin(), s.end());
  while (true) {
    std::vector<Permutation> elems = closure(g->degree(), gens);
    std::vector<Permutation> extra;
    for (const Permutation& x : elems)
      for (const Permutation& c : g->generators()) {
        Permutation y = x.conjugated_by(c);
        if (!std::binary_search(elems.begin(), elems.end(), y)) extra.push_back(y);
      }
    if (extra.empty()) return Subgroup::from_elements(g, std::move(elems));
    gens = std::move(elems);
    gens.insert(gens.end(), extra.begin(), extra.end());
  }
}

Subgroup join_subgroups(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw argument_error("subgroups of different parents");
  std::vector<Permutation> gens = a.elements();
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generated_subgroup(a.parent(), gens);
}

Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw argument_error("subgroups of different parents");
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return Subgroup::from_elements(a.parent(), std::move(common));
}

bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                       a.elements().end());
}

DerivedSeriesResult derived_series(const GroupPtr& g) {
  DerivedSeriesResult result;
  result.terms.push_back(Subgroup::whole(g));
  while (true) {
    const Subgroup& last = result.terms.back();
    if (last.is_trivial()) {
      result.derived_length = static_cast<int>(result.terms.size()) - 1;
      return result;
    }
    Subgroup next = commutator_subgroup(last, last);
    if (next.order() == last.order()) return result;  // stabilized above 1: not soluble
    result.terms.push_back(std::move(next));
  }
}

Subgroup derived_term(const GroupPtr& g, int i) {
  if (i < 0) throw argument_error("derived series index must be >= 0");
  DerivedSeriesResult series = derived_series(g);
  std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(i), series.terms.size() - 1);
  return series.terms[idx];
}

bool mod_eq(const Permutation& x, const Permutation& y, const Subgroup& n) {
  return n.contains(x * y.inverse());
}

Permutation coset_rep(const Permutation& x, const Subgroup& n) {
  Permutation best = n.elements().front() * x;
  for (std::size_t i = 1; i < n.elements().size(); ++i) {
    Permutation candidate = n.elements()[i] * x;
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace ocw
