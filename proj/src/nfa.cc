#include "cfsep/nfa.hh"

#include <algorithm>

#include "cfsep/error.hh"

namespace cfsep {

Nfa::Nfa(Alphabet alphabet, std::size_t states)
    : alphabet_(std::move(alphabet)), edges_(std::max<std::size_t>(states, 1)),
      accepting_(edges_.size(), false) {}

State Nfa::add_state() {
    edges_.emplace_back();
    accepting_.push_back(false);
    return static_cast<State>(edges_.size() - 1);
}

void Nfa::add_transition(State from, Letter label, State to) {
    if (from >= edges_.size() || to >= edges_.size()) {
        throw InputError("transition endpoint is not a state");
    }
    if (label != kEpsilon && label >= alphabet_.size()) {
        throw InputError("transition label is not in the alphabet");
    }
    auto& out = edges_[from];
    Edge e{label, to};
    if (std::find(out.begin(), out.end(), e) == out.end()) {
        out.push_back(e);
    }
}

void Nfa::set_initial(State q) {
    if (q >= edges_.size()) {
        throw InputError("initial state out of range");
    }
    initial_ = q;
}

void Nfa::set_accepting(State q, bool accepting) {
    accepting_.at(q) = accepting;
}

std::vector<State> Nfa::accepting_states() const {
    std::vector<State> out;
    for (State q = 0; q < accepting_.size(); ++q) {
        if (accepting_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

std::size_t Nfa::num_transitions() const {
    std::size_t n = 0;
    for (const auto& out : edges_) {
        n += out.size();
    }
    return n;
}

std::vector<Transition> Nfa::transitions() const {
    std::vector<Transition> all;
    for (State q = 0; q < edges_.size(); ++q) {
        for (const auto& e : edges_[q]) {
            all.push_back({q, e.label, e.to});
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

bool Nfa::has_epsilon() const {
    for (const auto& out : edges_) {
        for (const auto& e : out) {
            if (e.label == kEpsilon) {
                return true;
            }
        }
    }
    return false;
}

std::vector<State> Nfa::closure(std::vector<State> states) const {
    std::vector<bool> seen(edges_.size(), false);
    std::vector<State> todo;
    for (auto q : states) {
        if (!seen[q]) {
            seen[q] = true;
            todo.push_back(q);
        }
    }
    states.clear();
    while (!todo.empty()) {
        auto q = todo.back();
        todo.pop_back();
        states.push_back(q);
        for (const auto& e : edges_[q]) {
            if (e.label == kEpsilon && !seen[e.to]) {
                seen[e.to] = true;
                todo.push_back(e.to);
            }
        }
    }
    std::sort(states.begin(), states.end());
    return states;
}

bool Nfa::accepts(const Word& w) const {
    auto current = closure({initial_});
    for (auto letter : w) {
        std::vector<State> next;
        for (auto q : current) {
            for (const auto& e : edges_[q]) {
                if (e.label == letter) {
                    next.push_back(e.to);
                }
            }
        }
        if (next.empty()) {
            return false;
        }
        current = closure(std::move(next));
    }
    return std::any_of(current.begin(), current.end(),
                       [&](State q) { return accepting_[q]; });
}

Nfa Nfa::with_alphabet(const Alphabet& superset) const {
    if (superset == alphabet_) {
        return *this;
    }
    auto mapping = letter_mapping(alphabet_, superset);
    Nfa out = *this;
    out.alphabet_ = superset;
    for (auto& adj : out.edges_) {
        for (auto& e : adj) {
            if (e.label != kEpsilon) {
                e.label = mapping[e.label];
            }
        }
    }
    return out;
}

} // namespace cfsep
