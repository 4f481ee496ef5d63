#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <unordered_set>
#include <vector>

#include "cfsep/grammar.hh"
#include "cfsep/nfa.hh"

namespace cfsep {

/// Entry (from, symbol, to) of a pre* table.
struct Triple {
    State from;
    Symbol symbol;
    State to;

    auto operator<=>(const Triple&) const = default;
};

/// Saturated pre* automaton: the base automaton plus every transition
/// (q, X, q') such that X derives a word read from q to q'.
struct PrestarTable {
    Alphabet terminals;
    std::vector<std::string> variables;
    std::size_t num_states = 0;
    State initial = 0;
    std::vector<State> accepting;
    std::vector<Triple> triples;  ///< sorted

    bool contains(State from, Symbol symbol, State to) const;
    /// The table as an automaton over terminals followed by "<Var>" tokens.
    Nfa automaton() const;
};

/// Incremental pre* saturation over a fixed set of states. Transitions can
/// be added one at a time and every change can be rolled back exactly.
/// A session is violated once the start symbol spans the initial state to
/// some accepting state, i.e. once the automaton intersects the grammar.
class PrestarSession {
public:
    using Mark = std::size_t;

    /// `g` must be in normal form; throws InputError otherwise.
    PrestarSession(const Cfg& g, const Nfa& base);

    /// Session on the chain automaton of `w`, restricted to the edge shapes
    /// of epsilon-generalizations: forward ε-edges and backward edges
    /// (q_{j-1}, w_j, q_i) with i < j.
    static PrestarSession for_word(const Cfg& g, const Word& w);

    bool violated() const { return violations_ > 0; }

    Mark mark() const { return journal_.size(); }
    void rollback(Mark m);

    /// Adds a transition and saturates to a fixpoint.
    void add(const Transition& t);
    /// Adds a transition unless that makes the session violated; on
    /// rejection the session is left exactly as before the call.
    bool try_add(const Transition& t);
    /// All-or-nothing variant of try_add for a batch of transitions.
    bool try_add_all(std::span<const Transition> ts);

    bool contains(State from, Symbol symbol, State to) const;
    std::size_t table_size() const { return table_count_; }
    std::vector<Triple> triples() const;
    /// Extra transitions added since construction, in insertion order.
    std::vector<Transition> added_transitions() const;
    /// The base automaton plus all added transitions.
    Nfa automaton() const;

    /// Number of rule applications attempted so far.
    std::uint64_t rule_applications() const { return applications_; }
    const Cfg& grammar() const { return g_; }
    std::size_t num_states() const { return num_states_; }

private:
    enum class Entry : std::uint8_t { triple, epsilon, letter };
    struct JournalItem {
        Entry kind;
        State from;
        std::uint32_t label;  ///< grammar symbol index or letter
        State to;
    };
    struct Pair {
        std::uint32_t lhs;
        std::uint32_t other;  ///< the other constituent
    };

    std::uint32_t sym_index(Symbol s) const {
        return s.is_terminal() ? s.id : static_cast<std::uint32_t>(sigma_ + s.id);
    }
    Symbol sym_of(std::uint32_t x) const {
        return x < sigma_ ? Symbol::terminal(x)
                          : Symbol::nonterminal(static_cast<Nonterminal>(x - sigma_));
    }
    std::uint64_t key(State p, std::uint32_t x, State q) const {
        return (static_cast<std::uint64_t>(p) * gamma_ + x) * num_states_ + q;
    }
    std::uint64_t slot(State p, std::uint32_t x) const {
        return static_cast<std::uint64_t>(p) * gamma_ + x;
    }

    bool has(State p, std::uint32_t x, State q) const;
    void derive(State p, std::uint32_t x, State q);
    void insert_edge(const Transition& t);
    void saturate(bool stop_on_violation);
    void validate_word_edge(const Transition& t) const;

    Cfg g_;
    Alphabet alphabet_;
    std::size_t sigma_ = 0;
    std::size_t gamma_ = 0;
    std::size_t num_states_ = 0;
    State initial_ = 0;
    std::vector<bool> accepting_;
    std::uint32_t start_index_ = 0;
    std::optional<Word> word_;

    // Rules indexed by symbol index (terminals, then variables).
    std::vector<std::vector<std::uint32_t>> unary_;  ///< X -> {A : A -> X}
    std::vector<std::vector<Pair>> by_left_;         ///< B -> {(A, C) : A -> BC}
    std::vector<std::vector<Pair>> by_right_;        ///< C -> {(A, B) : A -> BC}
    std::vector<std::uint32_t> nullable_rules_;

    std::vector<bool> dense_;
    std::unordered_set<std::uint64_t> sparse_;
    bool use_dense_ = true;
    std::size_t table_count_ = 0;

    std::vector<std::vector<State>> out_;  ///< slot(p, X) -> q
    std::vector<std::vector<State>> in_;   ///< slot(q, X) -> p
    std::vector<std::vector<State>> eps_succ_, eps_pred_;
    std::vector<std::vector<std::pair<Letter, State>>> letters_;

    std::vector<Transition> base_edges_;
    std::vector<JournalItem> journal_;
    std::deque<Triple> worklist_;
    std::size_t violations_ = 0;
    std::uint64_t applications_ = 0;
};

/// Saturates `a` with the rules of the normal-form grammar `g`.
/// Throws InputError if `g` is not in normal form.
PrestarTable prestar(const Cfg& g, const Nfa& a);

/// L(g) and L(a) share a word. Normalizes `g` internally.
bool intersects(const Cfg& g, const Nfa& a);

} // namespace cfsep
