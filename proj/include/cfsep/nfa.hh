#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "cfsep/alphabet.hh"

namespace cfsep {

using State = std::uint32_t;

/// Label of an ε-transition.
inline constexpr Letter kEpsilon = std::numeric_limits<Letter>::max();

struct Transition {
    State from = 0;
    Letter label = kEpsilon;
    State to = 0;

    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton with ε-transitions. States are dense
/// integers 0..num_states()-1; state 0 is initial unless changed.
class Nfa {
public:
    struct Edge {
        Letter label;
        State to;
        bool operator==(const Edge&) const = default;
    };

    explicit Nfa(Alphabet alphabet = {}, std::size_t states = 1);

    State add_state();
    /// Adds a transition; duplicates are ignored. Throws InputError for
    /// unknown states or labels outside the alphabet.
    void add_transition(State from, Letter label, State to);
    void add_transition(const Transition& t) { add_transition(t.from, t.label, t.to); }
    void set_initial(State q);
    void set_accepting(State q, bool accepting = true);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return edges_.size(); }
    State initial() const { return initial_; }
    bool is_accepting(State q) const { return accepting_.at(q); }
    std::vector<State> accepting_states() const;
    const std::vector<Edge>& edges(State q) const { return edges_.at(q); }
    std::size_t num_transitions() const;
    /// All transitions, sorted.
    std::vector<Transition> transitions() const;
    bool has_epsilon() const;

    bool accepts(const Word& w) const;

    /// Same automaton over a larger alphabet; letters are remapped by token.
    Nfa with_alphabet(const Alphabet& superset) const;

    /// ε-closure of a set of states, returned sorted.
    std::vector<State> closure(std::vector<State> states) const;

private:
    Alphabet alphabet_;
    std::vector<std::vector<Edge>> edges_;
    std::vector<bool> accepting_;
    State initial_ = 0;
};

} // namespace cfsep
