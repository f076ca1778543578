// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Quantities are exact; the per-criterion wall-clock budgets are
// asserted as well.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ocw/catalog.hpp"
#include "ocw/checks.hpp"
#include "ocw/evaluator.hpp"
#include "ocw/kernels.hpp"
#include "ocw/pcg.hpp"
#include "ocw/word_parser.hpp"
#include "ocw/word_tree.hpp"

using namespace ocw;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget");
  }
  if (!ok) ++g_failures;
  std::printf("%s criterion %2d (%5.2fs): %s%s%s\n", ok ? "PASS" : "FAIL", number, elapsed,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
}

std::vector<WordTree> shapes_up_to_height(int h) {
  if (h == 0) return {WordTree::indeterminate()};
  std::vector<WordTree> smaller = shapes_up_to_height(h - 1);
  std::vector<WordTree> out = smaller;
  for (const WordTree& a : smaller)
    for (const WordTree& b : smaller) out.push_back(WordTree::commutator(a, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const WordTree& x, const WordTree& y) { return x == y; }),
            out.end());
  return out;
}

}  // namespace

int main() {
  const std::vector<CatalogEntry> catalog = builtin_catalog();
  auto group_of = [&](const char* name) { return find_entry(catalog, name)->group; };

  const std::vector<WordTree> series_words = {parse_word("g2"), parse_word("g3"),
                                              parse_word("g4"), parse_word("d1"),
                                              parse_word("d2"), parse_word("[g3,g3]")};

  run_criterion(1, "word measures: defect(g4)=8, defect([g3,g3])=4, defect(d0..d4)=0", 1.0,
                [&](std::string& detail) {
                  bool ok = parse_word("g4").measures().defect == 8;
                  ok = ok && parse_word("[g3,g3]").measures().defect == 4;
                  for (int h = 0; h <= 4; ++h)
                    ok = ok && WordTree::full(h).measures().defect == 0;
                  if (!ok) detail = "defect mismatch";
                  return ok;
                });

  run_criterion(
      2, "figure reproduction: the [g4,d2] extension and the [g4,g4] level-0 cut", 1.0,
      [&](std::string& detail) {
        WordTree phi = parse_word("[[g3,g3],[d2,g3]]");
        WordTree omega = parse_word("[g4,d2]");
        if (!is_extension(phi, omega)) {
          detail = "extension relation failed";
          return false;
        }
        WordTree w = parse_word("[g4,g4]");
        Section s = cut_below_level(w, 0);
        if (s.members.size() != 6 || !is_valid_section(w, s)) {
          detail = "cut has " + std::to_string(s.members.size()) + " members";
          return false;
        }
        int internal1 = 0, leaf1 = 0, leaf2 = 0;
        for (VertexId v : s.members) {
          if (w.level_of(v) == 1 && !w.is_leaf(v)) ++internal1;
          if (w.level_of(v) == 1 && w.is_leaf(v)) ++leaf1;
          if (w.level_of(v) == 2 && w.is_leaf(v)) ++leaf2;
        }
        if (internal1 != 2 || leaf1 != 2 || leaf2 != 2) {
          detail = "cut composition differs from the described section";
          return false;
        }
        return true;
      });

  run_criterion(
      3, "oracle equivalence on |G|<=12 for x1,g2,g3,g4,d2; width(S3,g2)=1", 60.0,
      [&](std::string& detail) {
        const std::vector<WordTree> words = {parse_word("x1"), parse_word("g2"),
                                             parse_word("g3"), parse_word("g4"),
                                             parse_word("d2")};
        for (const CatalogEntry& entry : catalog) {
          if (entry.group->order() > 12) continue;
          for (const WordTree& w : words) {
            if (value_set(entry.group, w).values != value_set_naive(entry.group, w).values) {
              detail = entry.name + " " + render_word(w);
              return false;
            }
          }
        }
        if (width(group_of("S3"), parse_word("g2")) != 1) {
          detail = "width(S3, g2) != 1";
          return false;
        }
        return true;
      });

  run_criterion(
      4, "value sets closed under inversion and conjugation across the suite", 60.0,
      [&](std::string& detail) {
        for (const CatalogEntry& entry : catalog) {
          for (const WordTree& w : series_words) {
            ValueSet vs = value_set(entry.group, w);
            for (const Permutation& x : vs.values)
              if (!vs.contains(x.inverse())) {
                detail = "inversion fails in " + entry.name;
                return false;
              }
            if (!kernels::closed_under_conjugation(vs.values, entry.group->generators(),
                                                   nullptr, vs.values)) {
              detail = "conjugation fails in " + entry.name;
              return false;
            }
          }
        }
        return true;
      });

  run_criterion(
      5, "three-subgroup inclusion on S4 and S3xS3 for the three sections", 60.0,
      [&](std::string& detail) {
        for (const char* name : {"S4", "S3xS3"}) {
          GroupPtr g = group_of(name);
          WordTree xx = parse_word("[x1,x2]");
          WordTree g4g4 = parse_word("[g4,g4]");
          WordTree g3 = parse_word("g3");
          const bool ok =
              check_three_subgroup(g, xx, parse_word("x1"), leaves_section(xx)).ok &&
              check_three_subgroup(g, g4g4, parse_word("d1"), cut_below_level(g4g4, 0)).ok &&
              check_three_subgroup(g, g3, parse_word("x1"), root_children_section(g3)).ok;
          if (!ok) {
            detail = name;
            return false;
          }
        }
        return true;
      });

  run_criterion(
      6, "derived-word series verify with length <= 2^d - 2^i for i=0,1,2", 120.0,
      [&](std::string& detail) {
        for (const CatalogEntry& entry : catalog) {
          if (!entry.soluble) continue;
          const int d = *entry.derived_length;
          for (int i = 0; i <= 2; ++i) {
            PcgSeries s = build_derived(entry.group, i);
            const long long bound = d >= i ? (1ll << d) - (1ll << i) : 0;
            if (static_cast<long long>(s.length()) > bound || !verify_pcg(s).ok ||
                !(s.top().elements() == derived_term(entry.group, i).elements())) {
              detail = entry.name + " i=" + std::to_string(i);
              return false;
            }
          }
        }
        return true;
      });

  run_criterion(
      7, "full construction verifies for every soluble group x benchmark word", 600.0,
      [&](std::string& detail) {
        for (const CatalogEntry& entry : catalog) {
          if (!entry.soluble) continue;
          for (const WordTree& w : series_words) {
            PcgSeries s = build(entry.group, w);  // internal inclusion asserted inside
            PcgReport r = verify_pcg(s);
            Subgroup expected = verbal_subgroup(entry.group, w);
            bool normals = s.base.is_normal_in_parent();
            for (const PcgStep& step : s.steps) normals = normals && step.subgroup.is_normal_in_parent();
            if (!r.ok || !(s.top().elements() == expected.elements()) || !normals) {
              detail = entry.name + " " + render_word(w);
              return false;
            }
          }
        }
        return true;
      });

  run_criterion(
      8, "soluble bound |w(G)| <= 2^(m-1); tight for (Q8,g2) and (D4,g2)", 120.0,
      [&](std::string& detail) {
        for (const CatalogEntry& entry : catalog) {
          if (!entry.soluble) continue;
          for (const WordTree& w : series_words) {
            const long long m = static_cast<long long>(value_set(entry.group, w).size());
            const long long order =
                static_cast<long long>(verbal_subgroup(entry.group, w).order());
            if (order > saturating_pow(2, m - 1)) {
              detail = entry.name + " " + render_word(w);
              return false;
            }
          }
        }
        for (const char* name : {"Q8", "D4"}) {
          ValueSet vs = value_set(group_of(name), parse_word("g2"));
          Subgroup sub = verbal_subgroup(group_of(name), parse_word("g2"));
          if (vs.size() != 2 || sub.order() != 2) {
            detail = std::string(name) + " is not tight";
            return false;
          }
        }
        return true;
      });

  run_criterion(
      9, "non-soluble branch on A5 and S5 with g2 and d2", 300.0,
      [&](std::string& detail) {
        for (const char* name : {"A5", "S5"}) {
          GroupPtr g = group_of(name);
          for (const char* expr : {"g2", "d2"}) {
            WordTree w = parse_word(expr);
            const long long m = static_cast<long long>(value_set(g, w).size());
            const long long order = static_cast<long long>(verbal_subgroup(g, w).order());
            if (m < 3 || order > saturating_pow(m - 1, m - 1)) {
              detail = std::string(name) + " " + expr + " bound";
              return false;
            }
            ValueSet deep = value_set(g, WordTree::full(w.height() + 1));
            for (const Permutation& x : deep.values)
              if (element_order(x) > (m - 1) * (m - 2)) {
                detail = std::string(name) + " " + expr + " element order";
                return false;
              }
          }
        }
        return true;
      });

  run_criterion(
      10, "cyclic refinement accounting: sum of section orders <= m + k - 1", 300.0,
      [&](std::string& detail) {
        for (const CatalogEntry& entry : catalog) {
          if (!entry.soluble) continue;
          for (const WordTree& w : series_words) {
            CyclicRefinement refined = refine_cyclic(build(entry.group, w));
            const long long m = static_cast<long long>(value_set(entry.group, w).size());
            const long long k = static_cast<long long>(refined.steps.size());
            if (static_cast<long long>(refined.section_order_sum()) > m + k - 1) {
              detail = entry.name + " " + render_word(w);
              return false;
            }
          }
        }
        return true;
      });

  run_criterion(
      11, "Dietzmann decomposition over the commutator values of A4", 30.0,
      [&](std::string& detail) {
        GroupPtr a4 = group_of("A4");
        std::vector<Permutation> x = value_set(a4, parse_word("g2")).values;
        Subgroup span = generated_subgroup(a4, x);
        for (const Permutation& y : span.elements()) {
          std::vector<int> r = dietzmann_decompose(a4, x, y);
          Permutation prod = Permutation::identity(a4->degree());
          for (std::size_t i = 0; i < x.size(); ++i) prod = prod * power(x[i], r[i]);
          if (!(prod == y)) {
            detail = "re-multiplication mismatch";
            return false;
          }
        }
        return true;
      });

  run_criterion(12, "parser round-trip on every canonical shape of height <= 3", 10.0,
                [&](std::string& detail) {
                  for (const WordTree& t : shapes_up_to_height(3)) {
                    if (!(parse_word(render_word(t)) == t)) {
                      detail = render_word(t);
                      return false;
                    }
                  }
                  return true;
                });

  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
