#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cfsep/grammar.hh"

namespace cfsep {

struct NamedGrammar {
    std::string name;
    Cfg grammar;
};

/// Parses the textual grammar format:
///
///   grammar C3 {
///     start S;
///     S -> "a" S "a" | "a" "c" "a";
///   }
///
/// Terminals are quoted strings, nonterminals bare identifiers, and an
/// empty alternative stands for ε. `#` and `//` start line comments.
/// Throws ParseError (with line and column) on malformed input.
std::vector<NamedGrammar> parse_grammar_file(std::string_view text);

/// Reads and parses a file. Throws InputError if it cannot be read.
std::vector<NamedGrammar> load_grammar_file(const std::string& path);

/// Inverse of parse_grammar_file up to whitespace and alternative grouping.
std::string render_grammar_file(const std::vector<NamedGrammar>& grammars);

} // namespace cfsep
