#ifndef OCW_WORD_PARSER_HPP
#define OCW_WORD_PARSER_HPP

#include <string>
#include <string_view>

#include "ocw/word_tree.hpp"

namespace ocw {

enum class RenderMode { bracket, tree };

/// Parses the word grammar:
///   word    := indet | builtin | '[' word (',' word)+ ']'
///   indet   := 'x' INT            (INT >= 1)
///   builtin := ('g'|'gamma') INT  (INT >= 1)
///            | ('d'|'delta') INT  (INT >= 0)
/// Whitespace is ignored; [a,b,c] is left-normed sugar for [[a,b],c].
/// Indeterminate indices in the input are arbitrary; the result is always in
/// canonical form, with operands renamed disjointly.
WordTree parse_word(std::string_view text);

/// bracket: minimal nested-commutator text with canonical leaf names.
/// tree: one vertex per line, indented by depth, showing level and label.
std::string render_word(const WordTree& t, RenderMode mode = RenderMode::bracket);

}  // namespace ocw

#endif
