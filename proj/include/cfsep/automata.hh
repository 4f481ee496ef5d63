#pragma once

#include <optional>
#include <set>
#include <string>

#include "cfsep/nfa.hh"

namespace cfsep {

/// Chain automaton q0 -w1-> q1 ... -wn-> qn accepting exactly {w}.
Nfa word_automaton(const Alphabet& alphabet, const Word& w);

/// Automaton with no accepting state.
Nfa empty_automaton(const Alphabet& alphabet);

/// Product automaton over the merged alphabet; ε-moves are interleaved.
Nfa intersect(const Nfa& a, const Nfa& b);

/// Product of several automata, left to right. Requires at least one.
Nfa intersect_all(const std::vector<Nfa>& automata);

Nfa unite(const Nfa& a, const Nfa& b);

/// Same language, no ε-transitions, same state numbering.
Nfa remove_epsilon(const Nfa& a);

/// Subset construction; the result is complete (has a sink if needed).
Nfa determinize(const Nfa& a);

/// Complement relative to the automaton's own alphabet.
Nfa complement(const Nfa& a);

/// L(a) \ L(b) over the merged alphabet. `b` is determinized on the fly,
/// only as far as the product with `a` reaches.
Nfa difference(const Nfa& a, const Nfa& b);

/// Drops states that are unreachable or cannot reach an accepting state.
Nfa trim(const Nfa& a);

/// Minimal deterministic automaton (complete, possibly with a sink).
Nfa minimize(const Nfa& a);

bool is_empty(const Nfa& a);

/// A shortest accepted word, lexicographically least by letter index among
/// those of minimum length.
std::optional<Word> shortest_witness(const Nfa& a);

/// Language equality over the merged alphabet.
bool equivalent(const Nfa& a, const Nfa& b);

/// L(a) subset of L(b).
bool included(const Nfa& a, const Nfa& b);

/// All accepted words of length at most `max_len`.
std::set<Word> bounded_language(const Nfa& a, std::size_t max_len);

/// Graphviz rendering; accepting states are drawn as double circles.
std::string to_dot(const Nfa& a, const std::string& name = "nfa");

} // namespace cfsep
