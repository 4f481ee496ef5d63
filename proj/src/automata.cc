#include "cfsep/automata.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "cfsep/error.hh"

namespace cfsep {

namespace {

std::uint64_t pair_key(State a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Interns state subsets as dense ids.
class SubsetTable {
public:
    std::pair<std::uint32_t, bool> intern(std::vector<State> subset) {
        auto [it, fresh] = ids_.try_emplace(std::move(subset), static_cast<std::uint32_t>(sets_.size()));
        if (fresh) {
            sets_.push_back(&it->first);
        }
        return {it->second, fresh};
    }
    const std::vector<State>& at(std::uint32_t id) const { return *sets_[id]; }
    std::size_t size() const { return sets_.size(); }

private:
    std::map<std::vector<State>, std::uint32_t> ids_;
    std::vector<const std::vector<State>*> sets_;
};

std::vector<State> step(const Nfa& a, const std::vector<State>& from, Letter letter) {
    std::vector<State> next;
    for (auto q : from) {
        for (const auto& e : a.edges(q)) {
            if (e.label == letter) {
                next.push_back(e.to);
            }
        }
    }
    return a.closure(std::move(next));
}

bool any_accepting(const Nfa& a, const std::vector<State>& states) {
    return std::any_of(states.begin(), states.end(),
                       [&](State q) { return a.is_accepting(q); });
}

std::vector<bool> reachable_from_initial(const Nfa& a) {
    std::vector<bool> seen(a.num_states(), false);
    std::vector<State> todo{a.initial()};
    seen[a.initial()] = true;
    while (!todo.empty()) {
        auto q = todo.back();
        todo.pop_back();
        for (const auto& e : a.edges(q)) {
            if (!seen[e.to]) {
                seen[e.to] = true;
                todo.push_back(e.to);
            }
        }
    }
    return seen;
}

/// Length of the shortest word leading from each state to acceptance;
/// SIZE_MAX when no accepting state is reachable.
std::vector<std::size_t> distance_to_accept(const Nfa& a) {
    constexpr auto kInf = static_cast<std::size_t>(-1);
    const auto n = a.num_states();
    std::vector<std::vector<Nfa::Edge>> rev(n);
    for (State q = 0; q < n; ++q) {
        for (const auto& e : a.edges(q)) {
            rev[e.to].push_back({e.label, q});
        }
    }
    std::vector<std::size_t> dist(n, kInf);
    std::deque<State> todo;
    for (State q = 0; q < n; ++q) {
        if (a.is_accepting(q)) {
            dist[q] = 0;
            todo.push_back(q);
        }
    }
    // 0-1 BFS: ε-edges cost nothing.
    while (!todo.empty()) {
        auto q = todo.front();
        todo.pop_front();
        for (const auto& e : rev[q]) {
            const std::size_t cost = e.label == kEpsilon ? 0 : 1;
            if (dist[q] + cost < dist[e.to]) {
                dist[e.to] = dist[q] + cost;
                if (cost == 0) {
                    todo.push_front(e.to);
                } else {
                    todo.push_back(e.to);
                }
            }
        }
    }
    return dist;
}

} // namespace

Nfa word_automaton(const Alphabet& alphabet, const Word& w) {
    Nfa a(alphabet, w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        a.add_transition(static_cast<State>(i), w[i], static_cast<State>(i + 1));
    }
    a.set_accepting(static_cast<State>(w.size()));
    return a;
}

Nfa empty_automaton(const Alphabet& alphabet) {
    return Nfa(alphabet, 1);
}

Nfa intersect(const Nfa& a_in, const Nfa& b_in) {
    const Alphabet merged = Alphabet::merge(a_in.alphabet(), b_in.alphabet());
    const Nfa a = a_in.with_alphabet(merged);
    const Nfa b = b_in.with_alphabet(merged);

    Nfa out(merged, 1);
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, State>> pairs;
    auto lookup = [&](State p, State q) {
        auto [it, fresh] = ids.try_emplace(pair_key(p, q), 0);
        if (fresh) {
            it->second = pairs.empty() ? 0 : out.add_state();
            pairs.emplace_back(p, q);
            out.set_accepting(it->second, a.is_accepting(p) && b.is_accepting(q));
        }
        return it->second;
    };
    lookup(a.initial(), b.initial());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [p, q] = pairs[k];
        const auto src = static_cast<State>(k);
        for (const auto& ea : a.edges(p)) {
            if (ea.label == kEpsilon) {
                out.add_transition(src, kEpsilon, lookup(ea.to, q));
                continue;
            }
            for (const auto& eb : b.edges(q)) {
                if (eb.label == ea.label) {
                    out.add_transition(src, ea.label, lookup(ea.to, eb.to));
                }
            }
        }
        for (const auto& eb : b.edges(q)) {
            if (eb.label == kEpsilon) {
                out.add_transition(src, kEpsilon, lookup(p, eb.to));
            }
        }
    }
    return out;
}

Nfa intersect_all(const std::vector<Nfa>& automata) {
    if (automata.empty()) {
        throw InputError("intersect_all needs at least one automaton");
    }
    Nfa acc = automata.front();
    for (std::size_t k = 1; k < automata.size(); ++k) {
        acc = trim(intersect(acc, automata[k]));
    }
    return acc;
}

Nfa unite(const Nfa& a_in, const Nfa& b_in) {
    const Alphabet merged = Alphabet::merge(a_in.alphabet(), b_in.alphabet());
    const Nfa a = a_in.with_alphabet(merged);
    const Nfa b = b_in.with_alphabet(merged);
    const auto na = static_cast<State>(a.num_states());
    const auto nb = static_cast<State>(b.num_states());
    Nfa out(merged, 1 + na + nb);
    for (const auto& t : a.transitions()) {
        out.add_transition(t.from + 1, t.label, t.to + 1);
    }
    for (const auto& t : b.transitions()) {
        out.add_transition(t.from + 1 + na, t.label, t.to + 1 + na);
    }
    for (State q = 0; q < na; ++q) {
        out.set_accepting(q + 1, a.is_accepting(q));
    }
    for (State q = 0; q < nb; ++q) {
        out.set_accepting(q + 1 + na, b.is_accepting(q));
    }
    out.add_transition(0, kEpsilon, a.initial() + 1);
    out.add_transition(0, kEpsilon, b.initial() + 1 + na);
    return out;
}

Nfa remove_epsilon(const Nfa& a) {
    Nfa out(a.alphabet(), a.num_states());
    out.set_initial(a.initial());
    for (State p = 0; p < a.num_states(); ++p) {
        const auto cl = a.closure({p});
        out.set_accepting(p, any_accepting(a, cl));
        for (auto r : cl) {
            for (const auto& e : a.edges(r)) {
                if (e.label != kEpsilon) {
                    out.add_transition(p, e.label, e.to);
                }
            }
        }
    }
    return out;
}

Nfa determinize(const Nfa& a) {
    const auto sigma = static_cast<Letter>(a.alphabet().size());
    SubsetTable subsets;
    subsets.intern(a.closure({a.initial()}));
    Nfa out(a.alphabet(), 1);
    out.set_accepting(0, any_accepting(a, subsets.at(0)));
    for (std::uint32_t id = 0; id < subsets.size(); ++id) {
        for (Letter x = 0; x < sigma; ++x) {
            auto [target, fresh] = subsets.intern(step(a, subsets.at(id), x));
            if (fresh) {
                out.add_state();
                out.set_accepting(target, any_accepting(a, subsets.at(target)));
            }
            out.add_transition(id, x, target);
        }
    }
    return out;
}

Nfa complement(const Nfa& a) {
    Nfa d = determinize(a);
    for (State q = 0; q < d.num_states(); ++q) {
        d.set_accepting(q, !d.is_accepting(q));
    }
    return d;
}

Nfa difference(const Nfa& a_in, const Nfa& b_in) {
    const Alphabet merged = Alphabet::merge(a_in.alphabet(), b_in.alphabet());
    const Nfa a = a_in.with_alphabet(merged);
    const Nfa b = b_in.with_alphabet(merged);

    SubsetTable subsets;
    std::unordered_map<std::uint64_t, std::uint32_t> step_cache;
    auto subset_step = [&](std::uint32_t id, Letter x) {
        auto [it, fresh] = step_cache.try_emplace(pair_key(id, x), 0);
        if (fresh) {
            it->second = subsets.intern(step(b, subsets.at(id), x)).first;
        }
        return it->second;
    };
    std::vector<bool> subset_accepts;
    auto accepts_subset = [&](std::uint32_t id) {
        while (subset_accepts.size() <= id) {
            subset_accepts.push_back(any_accepting(b, subsets.at(subset_accepts.size())));
        }
        return subset_accepts[id];
    };

    Nfa out(merged, 1);
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, std::uint32_t>> pairs;
    auto lookup = [&](State p, std::uint32_t s) {
        auto [it, fresh] = ids.try_emplace(pair_key(p, s), 0);
        if (fresh) {
            it->second = pairs.empty() ? 0 : out.add_state();
            pairs.emplace_back(p, s);
            out.set_accepting(it->second, a.is_accepting(p) && !accepts_subset(s));
        }
        return it->second;
    };
    lookup(a.initial(), subsets.intern(b.closure({b.initial()})).first);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [p, s] = pairs[k];
        const auto src = static_cast<State>(k);
        for (const auto& e : a.edges(p)) {
            if (e.label == kEpsilon) {
                out.add_transition(src, kEpsilon, lookup(e.to, s));
            } else {
                out.add_transition(src, e.label, lookup(e.to, subset_step(s, e.label)));
            }
        }
    }
    return out;
}

Nfa trim(const Nfa& a) {
    const auto n = a.num_states();
    auto forward = reachable_from_initial(a);
    auto dist = distance_to_accept(a);
    std::vector<State> renumber(n, 0);
    std::vector<State> kept;
    // Initial state first so it stays state 0.
    std::vector<State> order{a.initial()};
    for (State q = 0; q < n; ++q) {
        if (q != a.initial()) {
            order.push_back(q);
        }
    }
    for (auto q : order) {
        if (forward[q] && dist[q] != static_cast<std::size_t>(-1)) {
            renumber[q] = static_cast<State>(kept.size());
            kept.push_back(q);
        }
    }
    if (kept.empty() || kept.front() != a.initial()) {
        return empty_automaton(a.alphabet());
    }
    std::vector<bool> keep(n, false);
    for (auto q : kept) {
        keep[q] = true;
    }
    Nfa out(a.alphabet(), kept.size());
    for (auto q : kept) {
        out.set_accepting(renumber[q], a.is_accepting(q));
        for (const auto& e : a.edges(q)) {
            if (keep[e.to]) {
                out.add_transition(renumber[q], e.label, renumber[e.to]);
            }
        }
    }
    return out;
}

Nfa minimize(const Nfa& a) {
    const Nfa d = determinize(a);
    const auto n = d.num_states();
    const auto sigma = d.alphabet().size();
    std::vector<std::vector<State>> delta(n, std::vector<State>(sigma, 0));
    for (State q = 0; q < n; ++q) {
        for (const auto& e : d.edges(q)) {
            delta[q][e.label] = e.to;
        }
    }
    std::vector<std::size_t> cls(n);
    for (State q = 0; q < n; ++q) {
        cls[q] = d.is_accepting(q) ? 1 : 0;
    }
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> signatures;
        std::vector<std::size_t> next(n);
        // Numbering by first occurrence keeps the initial state in class 0.
        for (State q = 0; q < n; ++q) {
            std::vector<std::size_t> sig{cls[q]};
            for (std::size_t x = 0; x < sigma; ++x) {
                sig.push_back(cls[delta[q][x]]);
            }
            next[q] = signatures.try_emplace(std::move(sig), signatures.size()).first->second;
        }
        const bool stable = signatures.size() == classes;
        classes = signatures.size();
        cls = std::move(next);
        if (stable) {
            break;
        }
    }
    Nfa out(d.alphabet(), classes);
    for (State q = 0; q < n; ++q) {
        const auto c = static_cast<State>(cls[q]);
        out.set_accepting(c, d.is_accepting(q));
        for (std::size_t x = 0; x < sigma; ++x) {
            out.add_transition(c, static_cast<Letter>(x), static_cast<State>(cls[delta[q][x]]));
        }
    }
    out.set_initial(static_cast<State>(cls[d.initial()]));
    return out;
}

bool is_empty(const Nfa& a) {
    auto seen = reachable_from_initial(a);
    for (State q = 0; q < a.num_states(); ++q) {
        if (seen[q] && a.is_accepting(q)) {
            return false;
        }
    }
    return true;
}

std::optional<Word> shortest_witness(const Nfa& a) {
    constexpr auto kInf = static_cast<std::size_t>(-1);
    const auto dist = distance_to_accept(a);
    auto current = a.closure({a.initial()});
    std::size_t remaining = kInf;
    for (auto q : current) {
        remaining = std::min(remaining, dist[q]);
    }
    if (remaining == kInf) {
        return std::nullopt;
    }
    Word w;
    const auto sigma = static_cast<Letter>(a.alphabet().size());
    while (remaining > 0) {
        for (Letter x = 0; x < sigma; ++x) {
            std::vector<State> next;
            for (auto q : current) {
                for (const auto& e : a.edges(q)) {
                    if (e.label == x && dist[e.to] == remaining - 1) {
                        next.push_back(e.to);
                    }
                }
            }
            if (!next.empty()) {
                w.push_back(x);
                current = a.closure(std::move(next));
                --remaining;
                break;
            }
        }
    }
    return w;
}

bool included(const Nfa& a, const Nfa& b) {
    return is_empty(difference(a, b));
}

bool equivalent(const Nfa& a, const Nfa& b) {
    return included(a, b) && included(b, a);
}

std::set<Word> bounded_language(const Nfa& a, std::size_t max_len) {
    std::set<Word> out;
    const auto sigma = static_cast<Letter>(a.alphabet().size());
    Word prefix;
    auto walk = [&](auto&& self, const std::vector<State>& states) -> void {
        if (any_accepting(a, states)) {
            out.insert(prefix);
        }
        if (prefix.size() == max_len) {
            return;
        }
        for (Letter x = 0; x < sigma; ++x) {
            auto next = step(a, states, x);
            if (next.empty()) {
                continue;
            }
            prefix.push_back(x);
            self(self, next);
            prefix.pop_back();
        }
    };
    walk(walk, a.closure({a.initial()}));
    return out;
}

std::string to_dot(const Nfa& a, const std::string& name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    out << "  __start [shape=point];\n";
    for (State q = 0; q < a.num_states(); ++q) {
        out << "  q" << q << " [shape=" << (a.is_accepting(q) ? "doublecircle" : "circle")
            << ", label=\"" << q << "\"];\n";
    }
    out << "  __start -> q" << a.initial() << ";\n";
    std::map<std::pair<State, State>, std::string> labels;
    for (const auto& t : a.transitions()) {
        auto& text = labels[{t.from, t.to}];
        if (!text.empty()) {
            text += ",";
        }
        std::string token = t.label == kEpsilon ? "ε" : a.alphabet().name(t.label);
        for (char c : token) {
            if (c == '"' || c == '\\') {
                text += '\\';
            }
            text += c;
        }
    }
    for (const auto& [edge, text] : labels) {
        out << "  q" << edge.first << " -> q" << edge.second << " [label=\"" << text << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cfsep
