#include "ocw/word_tree.hpp"

#include <algorithm>
#include <functional>

#include "ocw/error.hpp"
#include "ocw/limits.hpp"

namespace ocw {

namespace {

// Number of binary-tree shapes of height <= h: n(0)=1, n(h)=1+n(h-1)^2.
// Grows doubly exponentially; used only for small h via the cap check.
double shape_count_up_to(int h) {
  double n = 1.0;
  for (int k = 1; k <= h; ++k) n = 1.0 + n * n;
  return n;
}

}  // namespace

WordTree::WordTree() {
  vertices_.push_back(Vertex{});
  shape_ = "x";
  height_ = 0;
}

WordTree WordTree::indeterminate() { return WordTree(); }

WordTree WordTree::from_shape_unchecked(std::string shape) {
  WordTree t;
  t.shape_ = std::move(shape);
  t.rebuild_cached();
  return t;
}

// Reconstructs vertices_ and height_ from shape_ (pre-order 'c'/'x' string).
void WordTree::rebuild_cached() {
  vertices_.assign(shape_.size(), Vertex{});
  int max_depth = 0;
  std::function<std::uint32_t(std::uint32_t, std::uint16_t)> build =
      [&](std::uint32_t pos, std::uint16_t depth) -> std::uint32_t {
    Vertex& v = vertices_[pos];
    v.depth = depth;
    max_depth = std::max<int>(max_depth, depth);
    if (shape_[pos] == 'x') return pos + 1;
    std::uint32_t left = pos + 1;
    std::uint32_t right = build(left, static_cast<std::uint16_t>(depth + 1));
    std::uint32_t next = build(right, static_cast<std::uint16_t>(depth + 1));
    vertices_[pos].left = VertexId{left};
    vertices_[pos].right = VertexId{right};
    vertices_[left].parent = VertexId{pos};
    vertices_[right].parent = VertexId{pos};
    return next;
  };
  std::uint32_t end = build(0, 0);
  if (end != shape_.size()) throw internal_error("malformed shape signature");
  height_ = max_depth;
}

WordTree WordTree::commutator(const WordTree& alpha, const WordTree& beta) {
  // Operands never share indeterminates here: leaves are renumbered by
  // position, which is exactly the disjoint reinterpretation of [α,α].
  return from_shape_unchecked("c" + alpha.shape_ + beta.shape_);
}

WordTree WordTree::full(int height) {
  if (height < 0) throw argument_error("negative tree height");
  WordTree t = indeterminate();
  for (int i = 0; i < height; ++i) t = commutator(t, t);
  return t;
}

WordTree WordTree::builtin(Family family, int index) {
  const Limits& lim = limits();
  if (family == Family::gamma) {
    if (index < 1) throw argument_error("gamma index must be >= 1");
    if (index - 1 > lim.max_word_height || index > lim.max_word_leaves)
      throw resource_error("gamma index exceeds configured word size caps");
    WordTree t = indeterminate();
    for (int i = 2; i <= index; ++i) t = commutator(t, indeterminate());
    return t;
  }
  if (index < 0) throw argument_error("delta index must be >= 0");
  if (index > lim.max_word_height || (index < 31 && (1 << index) > lim.max_word_leaves))
    throw resource_error("delta index exceeds configured word size caps");
  return full(index);
}

const Vertex& WordTree::at(VertexId v) const {
  if (!valid(v)) throw argument_error("invalid vertex id");
  return vertices_[v.value];
}

VertexId WordTree::companion(VertexId v) const {
  const Vertex& vx = at(v);
  if (!vx.parent.valid()) throw argument_error("the root has no companion");
  const Vertex& p = vertices_[vx.parent.value];
  return p.left == v ? p.right : p.left;
}

std::vector<VertexId> WordTree::leaves() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].is_leaf()) out.push_back(VertexId{i});
  return out;
}

int WordTree::leaf_index(VertexId v) const {
  if (!is_leaf(v)) throw argument_error("vertex is not a leaf");
  int idx = 0;
  for (std::uint32_t i = 0; i < v.value; ++i)
    if (vertices_[i].is_leaf()) ++idx;
  return idx;
}

WordMeasures WordTree::measures() const {
  WordMeasures m;
  m.height = height_;
  m.vertex_count = static_cast<int>(vertices_.size());
  m.defect = (1 << (height_ + 1)) - 1 - m.vertex_count;
  m.indeterminate_count = static_cast<int>((vertices_.size() + 1) / 2);
  return m;
}

std::size_t WordTree::subtree_size(VertexId v) const {
  at(v);
  // Pre-order: the subtree is the contiguous range where 'c' opens two slots.
  std::size_t pos = v.value;
  std::size_t pending = 1;
  std::size_t size = 0;
  while (pending > 0) {
    pending += shape_[pos + size] == 'c' ? 1 : -1;
    ++size;
  }
  return size;
}

WordTree WordTree::subtree(VertexId v) const {
  return from_shape_unchecked(shape_.substr(v.value, subtree_size(v)));
}

WordTree WordTree::replace_subtree(VertexId v, const WordTree& replacement) const {
  std::size_t size = subtree_size(v);
  std::string s = shape_.substr(0, v.value) + replacement.shape_ +
                  shape_.substr(v.value + size);
  return from_shape_unchecked(std::move(s));
}

bool WordTree::subtree_is_full(VertexId v, int h) const {
  std::size_t expected = (std::size_t{1} << (h + 1)) - 1;
  if (subtree_size(v) != expected) return false;
  // A pre-order range of the right size is the full tree iff every vertex of
  // it at relative depth < h is internal; equivalent to comparing shapes.
  return shape_.compare(v.value, expected, full(h).shape()) == 0;
}

WordTree canonical_form(const WordTree& t) { return t; }

namespace {

bool is_extension_at(const WordTree& phi, VertexId pv, const WordTree& omega, VertexId ov) {
  if (omega.is_leaf(ov)) return true;  // anything may grow above a leaf
  if (phi.is_leaf(pv)) return false;
  return is_extension_at(phi, phi.at(pv).left, omega, omega.at(ov).left) &&
         is_extension_at(phi, phi.at(pv).right, omega, omega.at(ov).right);
}

}  // namespace

bool is_extension(const WordTree& phi, const WordTree& omega) {
  return is_extension_at(phi, phi.root(), omega, omega.root());
}

bool is_constituent(const WordTree& omega, const WordTree& phi) {
  // Every position in the pre-order signature starts a subtree.
  return phi.shape().find(omega.shape()) != std::string::npos;
}

bool is_valid_section(const WordTree& t, const Section& s) {
  if (s.members.empty()) return false;
  for (VertexId v : s.members)
    if (!t.valid(v)) return false;
  // Each root-to-leaf path must meet exactly one member.
  std::vector<bool> member(t.vertex_count(), false);
  for (VertexId v : s.members) {
    if (member[v.value]) return false;
    member[v.value] = true;
  }
  for (VertexId leaf : t.leaves()) {
    int hits = 0;
    for (VertexId v = leaf; v.valid(); v = t.at(v).parent)
      if (member[v.value]) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

Section leaves_section(const WordTree& t) { return Section{t.leaves()}; }

Section root_children_section(const WordTree& t) {
  if (t.is_leaf(t.root())) return Section{{t.root()}};
  return Section{{t.at(t.root()).left, t.at(t.root()).right}};
}

Section cut_below_level(const WordTree& t, int i) {
  if (i < 0 || i >= t.height())
    throw argument_error("cut level out of range 0..height-1");
  Section s;
  for (std::uint32_t idx = 0; idx < t.vertex_count(); ++idx) {
    VertexId v{idx};
    int level = t.level_of(v);
    if (level == i + 1 || (level > i + 1 && t.is_leaf(v))) s.members.push_back(v);
  }
  return s;
}

WordTree pi_v(const WordTree& t, VertexId v, const WordTree& gamma) {
  return t.replace_subtree(v, WordTree::commutator(t.subtree(v), gamma));
}

WordTree omega_v(const WordTree& t, VertexId v, int i) {
  if (i != max_delta_level(t))
    throw argument_error("level does not match max_delta_level");
  Section cut = cut_below_level(t, i);
  if (!std::binary_search(cut.members.begin(), cut.members.end(), v))
    throw argument_error("vertex is not in the section cut below the level");

  WordTree result = t;
  if (t.is_leaf(v)) {
    result = t.replace_subtree(v, WordTree::full(i));
  } else {
    VertexId p = t.at(v).left, q = t.at(v).right;
    if (!t.subtree_is_full(q, i))
      result = t.replace_subtree(q, WordTree::full(i));
    else if (!t.subtree_is_full(p, i))
      result = t.replace_subtree(p, WordTree::full(i));
    else
      throw internal_error("both children carry the full tree above the maximal level");
  }
  if (result.height() != t.height() || result == t || !is_extension(result, t))
    throw internal_error("omega_v did not produce a proper same-height extension");
  return result;
}

namespace {

// All tree shapes of height <= h, ascending by shape signature.
std::vector<WordTree> shapes_up_to(int h) {
  std::vector<WordTree> out{WordTree::indeterminate()};
  for (int k = 1; k <= h; ++k) {
    std::vector<WordTree> prev = std::move(out);
    out.clear();
    out.push_back(WordTree::indeterminate());
    for (const WordTree& a : prev)
      for (const WordTree& b : prev) out.push_back(WordTree::commutator(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<WordTree> proper_extensions(const WordTree& t) {
  std::vector<VertexId> leaves = t.leaves();
  double combinations = 1.0;
  for (VertexId leaf : leaves) combinations *= shape_count_up_to(t.level_of(leaf));
  if (combinations > static_cast<double>(limits().max_extensions))
    throw resource_error("extension enumeration exceeds the configured cap");

  // A leaf at level l may carry any subtree of height <= l without changing
  // the overall height; the assignment of subtrees to leaves is a bijection
  // onto the same-height extensions of t.
  std::vector<std::vector<WordTree>> choices(leaves.size());
  for (std::size_t j = 0; j < leaves.size(); ++j)
    choices[j] = shapes_up_to(t.level_of(leaves[j]));

  std::vector<std::size_t> pick(leaves.size(), 0);
  std::vector<WordTree> out;
  while (true) {
    // Replace leaves from last to first so earlier ids stay valid.
    WordTree ext = t;
    for (std::size_t j = leaves.size(); j-- > 0;) {
      const WordTree& sub = choices[j][pick[j]];
      if (sub.vertex_count() > 1) ext = ext.replace_subtree(leaves[j], sub);
    }
    if (!(ext == t)) out.push_back(std::move(ext));

    std::size_t j = 0;
    for (; j < pick.size(); ++j) {
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
    }
    if (j == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int max_delta_level(const WordTree& t) {
  if (t.measures().defect == 0)
    throw argument_error("derived words have no expandable level");
  int best = -1;
  for (std::uint32_t idx = 0; idx < t.vertex_count(); ++idx) {
    VertexId v{idx};
    int level = t.level_of(v);
    if (level > best && t.subtree_is_full(v, level)) best = level;
  }
  if (best < 1 || best >= t.height())
    throw internal_error("maximal full-subtree level outside 1..height-1");
  return best;
}

}  // namespace ocw
