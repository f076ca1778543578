#ifndef OCW_WORD_TREE_HPP
#define OCW_WORD_TREE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ocw {

struct VertexId {
  std::uint32_t value = UINT32_MAX;

  constexpr bool valid() const { return value != UINT32_MAX; }
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct Vertex {
  VertexId parent{};         // invalid at the root
  VertexId left{}, right{};  // both invalid at a leaf
  std::uint16_t depth = 0;

  bool is_leaf() const { return !left.valid(); }
};

struct WordMeasures {
  int height = 0;
  int vertex_count = 0;
  int defect = 0;  // 2^(height+1) - 1 - vertex_count
  int indeterminate_count = 0;

  friend bool operator==(const WordMeasures&, const WordMeasures&) = default;
};

enum class Family { gamma, delta };

/// Ordered binary tree of an outer commutator word.
///
/// Vertices are stored in pre-order (root first, left subtree before right),
/// so equivalent words have byte-identical storage, the subtree of any vertex
/// occupies a contiguous index range, and the canonical indeterminate
/// numbering x1..xk is simply the storage order of the leaves. Labels are
/// never stored; they are derived from the shape on demand.
class WordTree {
 public:
  WordTree();  // single indeterminate

  static WordTree indeterminate();
  static WordTree commutator(const WordTree& alpha, const WordTree& beta);
  // gamma(i): i >= 1 leaves, height i-1. delta(i): full tree of height i.
  // Checked against limits(); throws resource_error beyond the caps.
  static WordTree builtin(Family family, int index);
  // Full binary tree of the given height (unchecked; internal construction).
  static WordTree full(int height);

  int height() const { return height_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  VertexId root() const { return VertexId{0}; }
  const Vertex& at(VertexId v) const;  // argument_error on invalid id
  bool valid(VertexId v) const { return v.value < vertices_.size(); }

  bool is_leaf(VertexId v) const { return at(v).is_leaf(); }
  int depth_of(VertexId v) const { return at(v).depth; }
  int level_of(VertexId v) const { return height_ - at(v).depth; }
  // The sibling vertex; argument_error at the root.
  VertexId companion(VertexId v) const;

  std::vector<VertexId> leaves() const;
  // 0-based position among the leaves; the leaf's indeterminate is x(index+1).
  int leaf_index(VertexId v) const;

  WordMeasures measures() const;

  std::size_t subtree_size(VertexId v) const;
  WordTree subtree(VertexId v) const;
  WordTree replace_subtree(VertexId v, const WordTree& replacement) const;
  // Subtree shape-equals the full tree of height h.
  bool subtree_is_full(VertexId v, int h) const;

  /// Pre-order signature: 'c' per commutator vertex, 'x' per leaf. Two trees
  /// describe equivalent words iff their shapes are equal.
  const std::string& shape() const { return shape_; }

  friend bool operator==(const WordTree& a, const WordTree& b) {
    return a.shape_ == b.shape_;
  }
  friend bool operator<(const WordTree& a, const WordTree& b) {
    return a.shape_ < b.shape_;
  }

 private:
  std::vector<Vertex> vertices_;
  int height_ = 0;
  std::string shape_;

  static WordTree from_shape_unchecked(std::string shape);
  void rebuild_cached();
};

/// Relabels indeterminates canonically. Labels are implicit in this
/// representation, so this is the identity; kept as the explicit statement of
/// the equivalence convention (equivalence classes are exactly shape fibers).
WordTree canonical_form(const WordTree& t);

// True iff omega's tree is obtained from phi's by erasing all branches above
// some antichain (shape-only, reflexive).
bool is_extension(const WordTree& phi, const WordTree& omega);

// True iff some subtree of phi is shape-identical to omega.
bool is_constituent(const WordTree& omega, const WordTree& phi);

/// An antichain of vertices covering every indeterminate exactly once.
struct Section {
  std::vector<VertexId> members;  // ascending ids
};

// Antichain + maximality (every root-to-leaf path meets exactly one member).
bool is_valid_section(const WordTree& t, const Section& s);
Section leaves_section(const WordTree& t);
Section root_children_section(const WordTree& t);
// Members: all vertices at level i+1 plus all leaves at levels above i+1.
// Requires 0 <= i < height(t).
Section cut_below_level(const WordTree& t, int i);

// Replace the subtree at v with [subtree(v), gamma].
WordTree pi_v(const WordTree& t, VertexId v, const WordTree& gamma);

// The proper extension obtained by grafting the full tree of height i at v
// (leaf case) or substituting it for the non-full child of v (internal case).
// Requires v in cut_below_level(t, i) and i = max_delta_level(t).
WordTree omega_v(const WordTree& t, VertexId v, int i);

// All words phi != t of the same height with is_extension(phi, t), in
// ascending shape order. Capped by limits().max_extensions.
std::vector<WordTree> proper_extensions(const WordTree& t);

// Largest i such that some vertex at level i carries the full tree of height
// i as its subtree; defined (and in 1..height-1) whenever defect(t) > 0.
int max_delta_level(const WordTree& t);

}  // namespace ocw

#endif
