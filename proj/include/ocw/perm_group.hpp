#ifndef OCW_PERM_GROUP_HPP
#define OCW_PERM_GROUP_HPP

#include <atomic>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocw/perm.hpp"

namespace ocw {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// A finite permutation group with its full element set materialized eagerly
/// at construction (sorted, deduplicated). Immutable afterwards.
class PermGroup {
 public:
  static GroupPtr from_generators(unsigned degree, std::vector<Permutation> generators,
                                  std::string name = "");
  // Trusted constructor for an already-closed element set (sorted on entry or
  // sorted here); used when carving subgroups out as standalone groups.
  static GroupPtr from_elements(unsigned degree, std::vector<Permutation> elements,
                                std::string name = "");

  unsigned degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  Permutation identity_element() const { return Permutation::identity(degree_); }

 private:
  PermGroup() = default;
  unsigned degree_ = 0;
  std::string name_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// A subgroup of a fixed parent group, as an explicit sorted element set.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const Subgroup& other)
      : parent_(other.parent_), elements_(other.elements_), normal_(other.normal_.load()) {}
  Subgroup& operator=(const Subgroup& other) {
    parent_ = other.parent_;
    elements_ = other.elements_;
    normal_.store(other.normal_.load());
    return *this;
  }

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  // `elements` must be a subset of the parent closed under product and
  // inverse; sortedness is established here, closure is trusted.
  static Subgroup from_elements(GroupPtr parent, std::vector<Permutation> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_normal_in_parent() const;  // cached

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<Permutation> elements_;
  mutable std::atomic<int> normal_{-1};  // -1 unknown, 0 no, 1 yes
};

/// Smallest product/inverse-closed superset of gens plus the identity,
/// in ascending order. Throws resource_error past limits().max_group_order.
std::vector<Permutation> closure(unsigned degree, std::span<const Permutation> gens);

Subgroup generated_subgroup(GroupPtr parent, std::span<const Permutation> gens);

// Subgroup generated by {[h,k] : h in H, k in K}; normal in the parent
// whenever H and K are.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);

// Smallest normal subgroup of g containing s.
Subgroup normal_closure(const GroupPtr& g, std::span<const Permutation> s);

// <A union B>; equals the product set AB when both are normal.
Subgroup join_subgroups(const Subgroup& a, const Subgroup& b);
Subgroup intersect_subgroups(const Subgroup& a, const Subgroup& b);
bool subgroup_leq(const Subgroup& a, const Subgroup& b);  // A subset of B

struct DerivedSeriesResult {
  std::vector<Subgroup> terms;              // G = terms[0] >= terms[1] >= ...
  std::optional<int> derived_length;        // empty when not soluble
  bool soluble() const { return derived_length.has_value(); }
};

DerivedSeriesResult derived_series(const GroupPtr& g);
// terms[i] of the derived series, where i past stabilization repeats the
// stable term.
Subgroup derived_term(const GroupPtr& g, int i);

// Coset arithmetic modulo a normal subgroup (quotients are never built).
bool mod_eq(const Permutation& x, const Permutation& y, const Subgroup& n);
// Minimal element of the coset Nx in the canonical element order.
Permutation coset_rep(const Permutation& x, const Subgroup& n);

}  // namespace ocw

#endif
