#pragma once

#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "cfsep/grammar.hh"
#include "cfsep/nfa.hh"
#include "cfsep/regex.hh"

namespace testing {

using cfsep::Alphabet;
using cfsep::Cfg;
using cfsep::Nfa;
using cfsep::Regex;
using cfsep::Word;

// Grammar from rule text, e.g. `start S; S -> "a" S "b" | ;`.
Cfg grammar(std::string_view rules);
// Word over a character-based alphabet ("" is ε).
Word word(const Alphabet& alphabet, std::string_view text);
std::string show(const Alphabet& alphabet, const Word& w);

// Membership by fixpoint over spans, straight on the given productions.
bool brute_member(const Cfg& g, const Word& w);
std::set<Word> brute_words(const Cfg& g, std::size_t max_len);

// Subset simulation written independently of the library.
bool brute_accepts(const Nfa& a, const Word& w);
std::set<Word> brute_nfa_words(const Nfa& a, std::size_t max_len);

// Right-linear grammar with one variable per state of `a`.
Cfg nfa_grammar(const Nfa& a);

std::vector<Word> all_words(std::size_t letters, std::size_t max_len);

// Seeded generators. Grammars are small (2..4 variables) over {a, b}.
Cfg random_cfg(std::mt19937& rng);
Nfa random_nfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states,
               bool epsilon = true);
Regex random_union_free(std::mt19937& rng, std::size_t letters, std::size_t depth);
Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len);

} // namespace testing
