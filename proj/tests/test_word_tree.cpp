#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ocw/error.hpp"
#include "ocw/word_parser.hpp"
#include "ocw/word_tree.hpp"

using namespace ocw;

namespace {

WordTree gamma(int i) { return WordTree::builtin(Family::gamma, i); }
WordTree delta(int i) { return WordTree::builtin(Family::delta, i); }

// Test-side oracle: all tree shapes of height <= h, built by brute recursion.
std::vector<WordTree> all_shapes(int h) {
  if (h == 0) return {WordTree::indeterminate()};
  std::vector<WordTree> smaller = all_shapes(h - 1);
  std::vector<WordTree> out = smaller;
  for (const WordTree& a : smaller)
    for (const WordTree& b : smaller) out.push_back(WordTree::commutator(a, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const WordTree& x, const WordTree& y) { return x == y; }),
            out.end());
  return out;
}

// Test-side oracle: structural subtree comparison, no shape-string tricks.
bool trees_equal_at(const WordTree& a, VertexId va, const WordTree& b, VertexId vb) {
  if (a.is_leaf(va) != b.is_leaf(vb)) return false;
  if (a.is_leaf(va)) return true;
  return trees_equal_at(a, a.at(va).left, b, b.at(vb).left) &&
         trees_equal_at(a, a.at(va).right, b, b.at(vb).right);
}

bool constituent_oracle(const WordTree& omega, const WordTree& phi) {
  for (std::uint32_t i = 0; i < phi.vertex_count(); ++i)
    if (trees_equal_at(omega, omega.root(), phi, VertexId{i})) return true;
  return false;
}

// Test-side oracle: every root-to-leaf path meets exactly one member.
bool section_oracle(const WordTree& t, const Section& s) {
  std::set<VertexId> members(s.members.begin(), s.members.end());
  if (members.size() != s.members.size() || members.empty()) return false;
  for (VertexId leaf : t.leaves()) {
    int hits = 0;
    for (VertexId v = leaf; v.valid(); v = t.at(v).parent) hits += members.count(v);
    if (hits != 1) return false;
  }
  return true;
}

int max_delta_level_oracle(const WordTree& t) {
  int best = -1;
  for (std::uint32_t i = 0; i < t.vertex_count(); ++i) {
    VertexId v{i};
    int level = t.level_of(v);
    if (level > best && trees_equal_at(WordTree::full(level), WordTree::full(level).root(), t, v))
      best = level;
  }
  return best;
}

}  // namespace

TEST_CASE("single indeterminate") {
  WordTree t = WordTree::indeterminate();
  CHECK(t.measures() == WordMeasures{0, 1, 0, 1});
  CHECK(t.level_of(t.root()) == 0);
  CHECK(t.is_leaf(t.root()));
}

TEST_CASE("commutator construction") {
  WordTree g3g3 = WordTree::commutator(gamma(3), gamma(3));
  CHECK(g3g3.vertex_count() == 11);
  CHECK(g3g3.height() == 3);
  CHECK(g3g3.measures().defect == 4);

  WordTree xx = WordTree::commutator(WordTree::indeterminate(), WordTree::indeterminate());
  CHECK(xx.height() == 1);
  CHECK(xx.vertex_count() == 3);
  CHECK(xx.measures().indeterminate_count == 2);

  // vertex count 7 + 7 + 1, so defect = 2^5 - 1 - 15
  WordTree g4d2 = WordTree::commutator(gamma(4), delta(2));
  CHECK(g4d2.height() == 4);
  CHECK(g4d2.vertex_count() == 15);
  CHECK(g4d2.measures().defect == 16);
}

TEST_CASE("builtin words") {
  CHECK(delta(3).vertex_count() == 15);
  CHECK(delta(3).height() == 3);
  CHECK(delta(3).measures().defect == 0);

  CHECK(gamma(4).vertex_count() == 7);
  CHECK(gamma(4).height() == 3);
  CHECK(gamma(4).measures().defect == 8);

  CHECK(gamma(1) == delta(0));
  CHECK(gamma(1) == WordTree::indeterminate());

  CHECK_THROWS_AS(gamma(0), argument_error);
  CHECK_THROWS_AS(delta(-1), argument_error);
  CHECK_THROWS_AS(gamma(9), resource_error);
  CHECK_THROWS_AS(delta(7), resource_error);
}

TEST_CASE("measures") {
  CHECK(gamma(4).measures() == WordMeasures{3, 7, 8, 4});
  CHECK(WordTree::commutator(gamma(3), gamma(3)).measures() == WordMeasures{3, 11, 4, 6});
  for (int h = 0; h <= 4; ++h) CHECK(delta(h).measures().defect == 0);
}

TEST_CASE("levels") {
  WordTree g4 = gamma(4);
  CHECK(g4.level_of(g4.root()) == 3);
  // gamma words chain to the left: root.left.left.left is the leaf x1
  VertexId x1 = g4.at(g4.at(g4.at(g4.root()).left).left).left;
  CHECK(g4.is_leaf(x1));
  CHECK(g4.leaf_index(x1) == 0);
  CHECK(g4.level_of(x1) == 0);

  WordTree w = WordTree::commutator(gamma(3), gamma(3));
  VertexId d1 = w.at(w.at(w.root()).left).left;  // the [x1,x2] vertex
  CHECK(w.subtree(d1) == delta(1));
  CHECK(w.level_of(d1) == 1);

  CHECK_THROWS_AS(g4.level_of(VertexId{99}), argument_error);
}

TEST_CASE("companions") {
  WordTree g4 = gamma(4);
  VertexId x4 = g4.at(g4.root()).right;
  CHECK(g4.subtree(g4.companion(x4)) == gamma(3));

  WordTree xx = WordTree::commutator(WordTree::indeterminate(), WordTree::indeterminate());
  CHECK(xx.companion(xx.at(xx.root()).left) == xx.at(xx.root()).right);

  WordTree d2 = delta(2);
  CHECK(d2.companion(d2.at(d2.root()).left) == d2.at(d2.root()).right);

  CHECK_THROWS_AS(g4.companion(g4.root()), argument_error);

  for (const WordTree& t : all_shapes(3)) {
    for (std::uint32_t i = 1; i < t.vertex_count(); ++i) {
      VertexId v{i};
      CHECK(t.companion(t.companion(v)) == v);
      CHECK(t.level_of(t.companion(v)) == t.level_of(v));
    }
  }
}

TEST_CASE("canonical form and equivalence") {
  WordTree t = parse_word("[x3,x7]");
  CHECK(t == parse_word("[x1,x2]"));
  CHECK(canonical_form(t) == t);
  CHECK(canonical_form(canonical_form(t)) == canonical_form(t));
  CHECK_FALSE(parse_word("[x1,[x2,x3]]") == parse_word("[[x1,x2],x3]"));
}

TEST_CASE("extension relation") {
  // adding the grey trees to [g4,d2] yields [[g3,g3],[d2,g3]]
  WordTree phi = WordTree::commutator(WordTree::commutator(gamma(3), gamma(3)),
                                      WordTree::commutator(delta(2), gamma(3)));
  WordTree omega = WordTree::commutator(gamma(4), delta(2));
  CHECK(is_extension(phi, omega));
  CHECK_FALSE(is_extension(omega, phi));

  for (const WordTree& t : all_shapes(3)) {
    CHECK(is_extension(t, t));
    CHECK(is_extension(delta(3), t));  // the full tree extends everything below it
  }
}

TEST_CASE("constituent relation") {
  CHECK(is_constituent(gamma(3), WordTree::commutator(gamma(3), gamma(3))));
  CHECK_FALSE(is_constituent(delta(2), gamma(4)));

  std::vector<WordTree> shapes = all_shapes(3);
  for (const WordTree& t : shapes) CHECK(is_constituent(t, t));
  for (const WordTree& a : shapes)
    for (const WordTree& b : shapes) CHECK(is_constituent(a, b) == constituent_oracle(a, b));
}

TEST_CASE("cut below a level") {
  WordTree w = WordTree::commutator(gamma(4), gamma(4));
  Section s = cut_below_level(w, 0);
  REQUIRE(s.members.size() == 6);
  CHECK(section_oracle(w, s));
  CHECK(is_valid_section(w, s));
  int leaves_at_2 = 0, internals_at_1 = 0, leaves_at_1 = 0;
  for (VertexId v : s.members) {
    if (w.level_of(v) == 2 && w.is_leaf(v)) ++leaves_at_2;
    if (w.level_of(v) == 1 && !w.is_leaf(v)) ++internals_at_1;
    if (w.level_of(v) == 1 && w.is_leaf(v)) ++leaves_at_1;
  }
  CHECK(leaves_at_2 == 2);    // the two x4 leaves
  CHECK(internals_at_1 == 2); // the two [x1,x2] vertices
  CHECK(leaves_at_1 == 2);    // the two x3 leaves

  Section g3cut = cut_below_level(gamma(3), 1);
  REQUIRE(g3cut.members.size() == 1);
  CHECK(g3cut.members[0] == gamma(3).root());

  WordTree xx = parse_word("[x1,x2]");
  Section xxcut = cut_below_level(xx, 0);
  REQUIRE(xxcut.members.size() == 1);
  CHECK(xxcut.members[0] == xx.root());

  CHECK_THROWS_AS(cut_below_level(gamma(3), 2), argument_error);
  CHECK_THROWS_AS(cut_below_level(gamma(3), -1), argument_error);

  for (const WordTree& t : all_shapes(3))
    for (int i = 0; i < t.height(); ++i) {
      Section cut = cut_below_level(t, i);
      CHECK(section_oracle(t, cut));
      CHECK(is_valid_section(t, cut));
    }
}

TEST_CASE("sections") {
  WordTree g3 = gamma(3);
  CHECK(is_valid_section(g3, leaves_section(g3)));
  CHECK(is_valid_section(g3, root_children_section(g3)));
  CHECK(is_valid_section(g3, Section{{g3.root()}}));
  // an ancestor pair is not an antichain
  CHECK_FALSE(is_valid_section(g3, Section{{g3.root(), g3.at(g3.root()).left}}));
  // missing coverage is not maximal
  CHECK_FALSE(is_valid_section(g3, Section{{g3.at(g3.root()).left}}));
}

TEST_CASE("pi_v substitution") {
  WordTree xx = parse_word("[x1,x2]");
  WordTree x = WordTree::indeterminate();
  CHECK(pi_v(xx, xx.at(xx.root()).left, x) == parse_word("[[x1,x3],x2]"));
  CHECK(pi_v(xx, xx.at(xx.root()).right, x) == parse_word("[x1,[x2,x3]]"));
  CHECK(pi_v(gamma(3), gamma(3).root(), delta(1)) == parse_word("[g3,d1]"));
  CHECK_THROWS_AS(pi_v(xx, VertexId{17}, x), argument_error);

  // vertices outside the replaced subtree keep their shape
  WordTree t = gamma(4);
  VertexId v = t.at(t.root()).left;  // the gamma3 vertex
  WordTree repl = pi_v(t, v, x);
  CHECK(repl.shape().substr(0, v.value) == t.shape().substr(0, v.value));
  std::size_t old_end = v.value + t.subtree_size(v);
  std::size_t new_end = v.value + repl.subtree_size(v);
  CHECK(repl.shape().substr(new_end) == t.shape().substr(old_end));
}

TEST_CASE("omega_v substitution") {
  CHECK(omega_v(gamma(3), gamma(3).root(), 1) == delta(2));

  WordTree w = WordTree::commutator(gamma(4), gamma(4));
  // x4 of the left gamma4
  VertexId x4 = w.at(w.at(w.root()).left).right;
  REQUIRE(w.is_leaf(x4));
  REQUIRE(w.level_of(x4) == 2);
  WordTree grafted = omega_v(w, x4, 1);
  CHECK(grafted.height() == w.height());
  CHECK(is_extension(grafted, w));
  CHECK_FALSE(grafted == w);
  CHECK(grafted.subtree(x4) == delta(1));
  // everything outside the grafted subtree is untouched
  CHECK(grafted.shape().substr(0, x4.value) == w.shape().substr(0, x4.value));
  CHECK(grafted.shape().substr(x4.value + grafted.subtree_size(x4)) ==
        w.shape().substr(x4.value + w.subtree_size(x4)));

  CHECK_THROWS_AS(omega_v(gamma(3), gamma(3).root(), 0), argument_error);
  // root of [g4,g4] is not in the cut below level 1
  CHECK_THROWS_AS(omega_v(w, w.root(), 1), argument_error);
}

TEST_CASE("proper extensions") {
  std::vector<WordTree> g3ext = proper_extensions(gamma(3));
  REQUIRE(g3ext.size() == 1);
  CHECK(g3ext[0] == delta(2));

  std::vector<WordTree> g3g3ext = proper_extensions(WordTree::commutator(gamma(3), gamma(3)));
  REQUIRE(g3g3ext.size() == 3);
  CHECK(std::count(g3g3ext.begin(), g3g3ext.end(), delta(3)) == 1);
  CHECK(std::count(g3g3ext.begin(), g3g3ext.end(), parse_word("[d2,g3]")) == 1);
  CHECK(std::count(g3g3ext.begin(), g3g3ext.end(), parse_word("[g3,d2]")) == 1);

  for (int h = 0; h <= 4; ++h) CHECK(proper_extensions(delta(h)).empty());

  CHECK(proper_extensions(gamma(4)).size() == 9);

  for (const WordTree& t : all_shapes(3)) {
    std::vector<WordTree> exts = proper_extensions(t);
    CHECK(exts.empty() == (t.measures().defect == 0));
    CHECK(exts.empty() == (t == delta(t.height())));
    for (const WordTree& phi : exts) {
      CHECK(phi.height() == t.height());
      CHECK(phi.measures().defect < t.measures().defect);
      CHECK(is_extension(phi, t));
    }
  }
}

TEST_CASE("maximal derived level") {
  CHECK(max_delta_level(gamma(3)) == 1);
  CHECK(max_delta_level(WordTree::commutator(gamma(4), gamma(4))) == 1);
  // the full height-2 subtree of [g4,d2] sits at level 3, not 2, so the
  // deepest full-tree-at-its-own-level vertices are the [x1,x2] pairs
  WordTree g4d2 = WordTree::commutator(gamma(4), delta(2));
  CHECK(max_delta_level_oracle(g4d2) == 1);
  CHECK(max_delta_level(g4d2) == 1);

  CHECK_THROWS_AS(max_delta_level(delta(2)), argument_error);
  CHECK_THROWS_AS(max_delta_level(WordTree::indeterminate()), argument_error);

  for (const WordTree& t : all_shapes(3)) {
    if (t.measures().defect == 0) continue;
    int level = max_delta_level(t);
    CHECK(level == max_delta_level_oracle(t));
    CHECK(level >= 1);
    CHECK(level < t.height());
  }
}
