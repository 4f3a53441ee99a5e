#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garside/element.hpp"
#include "garside/structure.hpp"

namespace garside::cli {

/// One token of a word: an atom name or "D" with an integer exponent (nonzero except for D^0).
struct WordToken {
  std::string generator;
  long long exponent = 1;
  std::size_t position = 0;
};

/// "braid:<n>", "torus:<N>:<M>" or "product:(<desc>,<desc>)".
StructurePtr parse_structure(std::string_view descriptor);

std::vector<WordToken> tokenize_word(std::string_view text);
/// Whitespace-separated `<name>` or `<name>^<int>` tokens; `D` is Delta.
Element parse_word(const StructurePtr& structure, std::string_view text);

/// Space-separated atom names of a simple.
std::string format_simple(const GarsideStructure& s, const Simple& x);
/// A word that parse_word maps back to g, e.g. "D^-1 a1 a2". Identity is "D^0".
std::string format_word(const Element& g);
/// "D^r · (a1)(a1 a2)", or "D^r · (empty)".
std::string format_normal_form(const Element& g);
/// {"group": ..., "inf": r, "factors": [["a1"], ["a1","a2"]]} as a JSON string.
std::string element_json(const Element& g);

/// Entry point behind the garside executable. Exit codes: 0 computed
/// (including "no solution"), 1 resource limit or unsupported, 2 usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garside::cli
