#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cfsep/nfa.hh"

namespace cfsep {

/// Regular expression tree over letters of some alphabet.
struct Regex {
    enum class Kind { empty, epsilon, letter, concat, alt, star };

    Kind kind = Kind::epsilon;
    Letter letter = 0;
    std::vector<Regex> children;

    static Regex empty() { return {Kind::empty, 0, {}}; }
    static Regex epsilon() { return {Kind::epsilon, 0, {}}; }
    static Regex symbol(Letter x) { return {Kind::letter, x, {}}; }
    static Regex concat(std::vector<Regex> parts);
    static Regex alt(std::vector<Regex> parts);
    static Regex star(Regex inner);

    std::strong_ordering operator<=>(const Regex& other) const;
    bool operator==(const Regex& other) const;
};

/// Thompson construction.
Nfa compile(const Regex& re, const Alphabet& alphabet);

std::string to_string(const Regex& re, const Alphabet& alphabet);

/// Parses the compact notation used in tests and examples: letters of a
/// character-based alphabet, '|', '*', '+', '?', parentheses, "ε" (or '_')
/// for the empty word and "∅" for the empty language.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// parse_regex followed by compile.
Nfa regex_nfa(std::string_view text, const Alphabet& alphabet);

} // namespace cfsep
