#include "ocw/word_parser.hpp"

#include <cctype>
#include <functional>

#include "ocw/error.hpp"

namespace ocw {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WordTree run() {
    WordTree t = word();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("trailing input after word", pos_);
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw parse_error("index too large", start);
      ++pos_;
    }
    if (pos_ == start) throw parse_error("expected an integer", pos_);
    return value;
  }

  bool keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_, kw.size()) == kw) {
      // longest match first: "gamma" before "g", "delta" before "d"
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  WordTree word() {
    skip_ws();
    if (pos_ == text_.size()) throw parse_error("expected a word", pos_);
    if (eat('[')) {
      WordTree acc = word();
      if (!eat(',')) throw parse_error("commutator needs at least two operands", pos_);
      acc = WordTree::commutator(acc, word());
      while (eat(',')) acc = WordTree::commutator(acc, word());
      if (!eat(']')) throw parse_error("expected ',' or ']'", pos_);
      return acc;
    }
    std::size_t start = pos_;
    if (keyword("gamma") || keyword("g")) {
      long i = integer();
      if (i == 0) throw argument_error("gamma index must be >= 1");
      return WordTree::builtin(Family::gamma, static_cast<int>(i));
    }
    if (keyword("delta") || keyword("d"))
      return WordTree::builtin(Family::delta, static_cast<int>(integer()));
    if (keyword("x")) {
      long i = integer();
      if (i < 1) throw parse_error("indeterminate index must be >= 1", start);
      return WordTree::indeterminate();
    }
    throw parse_error("expected 'x', 'g', 'd' or '['", pos_);
  }
};

std::string bracket_label(const WordTree& t, VertexId v) {
  if (t.is_leaf(v)) return "x" + std::to_string(t.leaf_index(v) + 1);
  return "[" + bracket_label(t, t.at(v).left) + "," + bracket_label(t, t.at(v).right) + "]";
}

}  // namespace

WordTree parse_word(std::string_view text) { return Parser(text).run(); }

std::string render_word(const WordTree& t, RenderMode mode) {
  if (mode == RenderMode::bracket) return bracket_label(t, t.root());

  std::string out;
  for (std::uint32_t i = 0; i < t.vertex_count(); ++i) {
    VertexId v{i};
    out.append(2 * static_cast<std::size_t>(t.depth_of(v)), ' ');
    out += "level " + std::to_string(t.level_of(v)) + ": " + bracket_label(t, v) + "\n";
  }
  return out;
}

}  // namespace ocw
