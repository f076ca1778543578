#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ocw/catalog.hpp"
#include "ocw/checks.hpp"
#include "ocw/error.hpp"
#include "ocw/evaluator.hpp"
#include "ocw/pcg.hpp"
#include "ocw/report_json.hpp"
#include "ocw/word_parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GroupSelection {
  std::string name;
  std::string file;

  ocw::GroupPtr resolve(const std::vector<ocw::CatalogEntry>& catalog) const {
    if (!file.empty()) return ocw::parse_group_file(file);
    const ocw::CatalogEntry* entry = ocw::find_entry(catalog, name);
    if (!entry) throw ocw::argument_error("unknown group '" + name + "'");
    return entry->group;
  }
};

void add_group_options(CLI::App* cmd, GroupSelection& sel) {
  auto* g = cmd->add_option("--group", sel.name, "built-in catalog group name");
  auto* f = cmd->add_option("--file", sel.file, "group definition file");
  g->excludes(f);
}

std::vector<ocw::WordTree> parse_words(const std::vector<std::string>& exprs) {
  std::vector<ocw::WordTree> words;
  words.reserve(exprs.size());
  for (const std::string& e : exprs) words.push_back(ocw::parse_word(e));
  return words;
}

std::vector<std::string> catalog_dir_files(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".group")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  return paths;
}

void print_check(const ocw::CheckReport& r) {
  std::string status = r.skipped() ? "skip" : r.ok ? "ok" : "FAIL";
  std::cout << status << " " << r.subject << " group=" << r.group << " word=" << r.word;
  for (const auto& [key, value] : r.quantities) std::cout << " " << key << "=" << value;
  if (r.counterexample) std::cout << " counterexample=" << *r.counterexample;
  if (r.skip_reason) std::cout << " reason=\"" << *r.skip_reason << "\"";
  std::cout << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"outer commutator word calculus and finite-group verification"};
  app.require_subcommand(1);

  // word info / word render
  auto* word_cmd = app.add_subcommand("word", "word tree queries");
  word_cmd->require_subcommand(1);
  std::string word_expr;
  auto* info = word_cmd->add_subcommand("info", "height, defect, vertex and leaf counts");
  info->add_option("expr", word_expr, "word expression, e.g. \"[g3,g3]\"")->required();
  std::string render_mode = "bracket";
  auto* render = word_cmd->add_subcommand("render", "bracket or indented tree form");
  render->add_option("expr", word_expr)->required();
  render->add_option("--mode", render_mode)->check(CLI::IsMember({"bracket", "tree"}));

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "value set size and verbal subgroup order");
  GroupSelection eval_group;
  add_group_options(eval_cmd, eval_group);
  std::string eval_word;
  int mod_derived = -1;
  eval_cmd->add_option("--word", eval_word)->required();
  eval_cmd->add_option("--mod-derived", mod_derived,
                       "work modulo the j-th derived subgroup");

  // pcg build
  auto* pcg_cmd = app.add_subcommand("pcg", "power-closed generated series");
  pcg_cmd->require_subcommand(1);
  auto* pcg_build = pcg_cmd->add_subcommand("build", "construct and verify a series");
  GroupSelection pcg_group;
  add_group_options(pcg_build, pcg_group);
  std::string pcg_word;
  std::string pcg_json;
  pcg_build->add_option("--word", pcg_word)->required();
  pcg_build->add_option("--json", pcg_json, "write the series report to a file");

  // check
  auto* check_cmd = app.add_subcommand("check", "single theorem/lemma checks");
  check_cmd->require_subcommand(1);
  GroupSelection check_group;
  std::string check_word, check_gamma = "x1", check_section = "leaves";
  std::vector<CLI::App*> check_subs;
  for (const char* name : {"symmetry", "three-subgroup", "theorem-a", "theorem-b"}) {
    auto* sub = check_cmd->add_subcommand(name);
    add_group_options(sub, check_group);
    sub->add_option("--word", check_word)->required();
    if (std::string(name) == "three-subgroup") {
      sub->add_option("--gamma", check_gamma, "the word commutated against (default x1)");
      sub->add_option("--section", check_section,
                      "leaves | children | cut:<i> (cut below level i)");
    }
    check_subs.push_back(sub);
  }

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run every check over a catalog");
  std::string suite_catalog_dir;
  std::vector<std::string> suite_words;
  std::string suite_json;
  bool suite_no_builtin = false;
  suite_cmd->add_option("--catalog", suite_catalog_dir, "directory of .group files");
  suite_cmd->add_option("--words", suite_words, "word expressions (repeatable)");
  suite_cmd->add_option("--json", suite_json, "write the JSON report to a file");
  suite_cmd->add_flag("--no-builtin", suite_no_builtin, "skip the built-in groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // --help exits cleanly
  }

  if (info->parsed() || render->parsed()) {
    ocw::WordTree t = ocw::parse_word(word_expr);
    if (info->parsed()) {
      ocw::WordMeasures m = t.measures();
      std::cout << "height " << m.height << "\n"
                << "defect " << m.defect << "\n"
                << "vertices " << m.vertex_count << "\n"
                << "indeterminates " << m.indeterminate_count << "\n";
    } else {
      std::cout << ocw::render_word(
          t, render_mode == "tree" ? ocw::RenderMode::tree : ocw::RenderMode::bracket);
      if (render_mode != "tree") std::cout << "\n";
    }
    return kExitOk;
  }

  std::vector<ocw::CatalogEntry> catalog = ocw::builtin_catalog();

  if (eval_cmd->parsed()) {
    ocw::GroupPtr g = eval_group.resolve(catalog);
    ocw::WordTree w = ocw::parse_word(eval_word);
    ocw::Subgroup modulus;
    const ocw::Subgroup* mod = nullptr;
    if (mod_derived >= 0) {
      modulus = ocw::derived_term(g, mod_derived);
      mod = &modulus;
    }
    ocw::ValueSet vs = ocw::value_set(g, w, mod);
    ocw::Subgroup verbal = ocw::verbal_subgroup(g, w, mod);
    std::cout << "m " << vs.size() << "\n"
              << "order " << verbal.order() << "\n";
    return kExitOk;
  }

  if (pcg_build->parsed()) {
    ocw::GroupPtr g = pcg_group.resolve(catalog);
    ocw::WordTree w = ocw::parse_word(pcg_word);
    ocw::PcgSeries series = ocw::build(g, w);
    ocw::PcgReport report = ocw::verify_pcg(series);
    std::cout << "group " << g->name() << " (order " << g->order() << ")\n"
              << "word " << ocw::render_word(w) << "\n"
              << "base order " << series.base.order() << "\n";
    for (std::size_t i = 0; i < series.steps.size(); ++i)
      std::cout << "step " << i + 1 << ": order " << series.steps[i].subgroup.order()
                << ", witnesses " << series.steps[i].witnesses.size() << "\n";
    std::cout << "top order " << series.top().order() << "\n"
              << "verification " << (report.ok ? "ok" : "FAILED") << "\n";
    if (!pcg_json.empty()) {
      std::ofstream out(pcg_json);
      out << ocw::series_to_json(series, report).dump(2) << "\n";
    }
    return report.ok ? kExitOk : kExitCheckFailed;
  }

  if (check_cmd->parsed()) {
    ocw::GroupPtr g = check_group.resolve(catalog);
    ocw::WordTree w = ocw::parse_word(check_word);
    ocw::CheckReport r;
    if (check_subs[0]->parsed()) {
      r = ocw::check_symmetry(g, w);
    } else if (check_subs[1]->parsed()) {
      ocw::WordTree gamma = ocw::parse_word(check_gamma);
      ocw::Section section;
      if (check_section == "leaves")
        section = ocw::leaves_section(w);
      else if (check_section == "children")
        section = ocw::root_children_section(w);
      else if (check_section.rfind("cut:", 0) == 0) {
        int level = 0;
        try {
          level = std::stoi(check_section.substr(4));
        } catch (const std::exception&) {
          throw ocw::argument_error("bad cut level in '" + check_section + "'");
        }
        section = ocw::cut_below_level(w, level);
      } else {
        throw ocw::argument_error("unknown section spec '" + check_section + "'");
      }
      r = ocw::check_three_subgroup(g, w, gamma, section);
    } else if (check_subs[2]->parsed()) {
      r = ocw::check_theorem_a(g, w);
    } else {
      r = ocw::check_theorem_b(g, w);
    }
    print_check(r);
    return r.ok || r.skipped() ? kExitOk : kExitCheckFailed;
  }

  if (suite_cmd->parsed()) {
    std::vector<std::string> paths;
    if (!suite_catalog_dir.empty()) paths = catalog_dir_files(suite_catalog_dir);
    std::vector<ocw::CatalogEntry> entries = ocw::load_catalog(paths, !suite_no_builtin);
    if (suite_words.empty())
      suite_words = {"x1", "g2", "g3", "g4", "d2", "[g3,g3]"};
    std::vector<ocw::WordTree> words = parse_words(suite_words);
    std::vector<ocw::CheckReport> reports = ocw::run_suite(entries, words);
    for (const ocw::CheckReport& r : reports) print_check(r);
    ocw::SuiteSummary summary = ocw::summarize(reports);
    std::cout << "summary ok=" << summary.ok << " fail=" << summary.fail
              << " skip=" << summary.skip << "\n";
    if (!suite_json.empty()) {
      std::ofstream out(suite_json);
      out << ocw::suite_report_json(reports, ocw::utc_timestamp()).dump(2) << "\n";
    }
    return summary.fail == 0 ? kExitOk : kExitCheckFailed;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ocw::resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const ocw::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ocw::argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
