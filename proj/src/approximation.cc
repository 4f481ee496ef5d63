#include "cfsep/approximation.hh"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "cfsep/error.hh"

namespace cfsep {

namespace {

bool in_block(const SccPartition& part, std::size_t block, Symbol s) {
    return s.is_nonterminal() && part.block_of(s.id) == block;
}

std::size_t count_in_block(const SccPartition& part, std::size_t block,
                           std::span<const Symbol> rhs) {
    return static_cast<std::size_t>(std::count_if(
        rhs.begin(), rhs.end(), [&](Symbol s) { return in_block(part, block, s); }));
}

bool left_linear(const SccPartition& part, std::size_t block, const Production& p) {
    const auto n = count_in_block(part, block, p.rhs);
    return n == 0 || (n == 1 && in_block(part, block, p.rhs.front()));
}

bool right_linear(const SccPartition& part, std::size_t block, const Production& p) {
    const auto n = count_in_block(part, block, p.rhs);
    return n == 0 || (n == 1 && in_block(part, block, p.rhs.back()));
}

bool block_uniform(const Cfg& g, const SccPartition& part, std::size_t block) {
    bool all_left = true, all_right = true;
    for (auto v : part.blocks[block]) {
        for (auto k : g.productions_of(v)) {
            const auto& p = g.productions()[k];
            all_left = all_left && left_linear(part, block, p);
            all_right = all_right && right_linear(part, block, p);
        }
    }
    return all_left || all_right;
}

class FaBuilder {
public:
    FaBuilder(const Cfg& g, const SccPartition& part, std::vector<SccClass> classes, Nfa& out)
        : g_(g), part_(part), classes_(std::move(classes)), out_(out) {}

    void sequence(State q0, std::span<const Symbol> alpha, State q1) {
        if (alpha.empty()) {
            out_.add_transition(q0, kEpsilon, q1);
            return;
        }
        while (alpha.size() > 1) {
            const State q = out_.add_state();
            symbol(q0, alpha.front(), q);
            alpha = alpha.subspan(1);
            q0 = q;
        }
        symbol(q0, alpha.front(), q1);
    }

    void symbol(State q0, Symbol x, State q1) {
        if (x.is_terminal()) {
            out_.add_transition(q0, x.id, q1);
            return;
        }
        const auto a = x.id;
        const auto block = part_.block_of(a);
        if (!part_.recursive[block]) {
            for (auto k : g_.productions_of(a)) {
                sequence(q0, g_.productions()[k].rhs, q1);
            }
            return;
        }
        std::map<Nonterminal, State> states;
        auto lookup = [&](Nonterminal c) {
            auto [it, fresh] = states.try_emplace(c, 0);
            if (fresh) {
                it->second = out_.add_state();
            }
            return it->second;
        };
        const bool left = classes_[block] == SccClass::left;
        for (auto c : part_.blocks[block]) {
            for (auto k : g_.productions_of(c)) {
                std::span<const Symbol> rhs = g_.productions()[k].rhs;
                const auto inside = count_in_block(part_, block, rhs);
                if (inside == 0) {
                    if (left) {
                        sequence(q0, rhs, lookup(c));
                    } else {
                        sequence(lookup(c), rhs, q1);
                    }
                } else if (left) {
                    // C -> D X1..Xm
                    sequence(lookup(rhs.front().id), rhs.subspan(1), lookup(c));
                } else {
                    // C -> X1..Xm D
                    sequence(lookup(c), rhs.first(rhs.size() - 1), lookup(rhs.back().id));
                }
            }
        }
        if (left) {
            out_.add_transition(lookup(a), kEpsilon, q1);
        } else {
            out_.add_transition(q0, kEpsilon, lookup(a));
        }
    }

private:
    const Cfg& g_;
    const SccPartition& part_;
    std::vector<SccClass> classes_;
    Nfa& out_;
};

} // namespace

Nfa sigma_star(const Alphabet& alphabet) {
    Nfa a(alphabet, 1);
    for (Letter x = 0; x < alphabet.size(); ++x) {
        a.add_transition(0, x, 0);
    }
    a.set_accepting(0);
    return a;
}

Cfg strongly_regular(const Cfg& g) {
    const auto part = sccs(g);
    auto names = g.variable_names();
    std::unordered_set<std::string> used(names.begin(), names.end());
    std::vector<Production> out;
    std::set<Production> emitted;
    auto emit = [&](Production p) {
        if (emitted.insert(p).second) {
            out.push_back(std::move(p));
        }
    };

    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        const auto& block = part.blocks[b];
        if (!part.recursive[b] || block_uniform(g, part, b)) {
            for (auto v : block) {
                for (auto k : g.productions_of(v)) {
                    emit(g.productions()[k]);
                }
            }
            continue;
        }
        std::map<Nonterminal, Nonterminal> prime;
        for (auto v : block) {
            std::string name = g.variable_name(v) + "'";
            while (!used.insert(name).second) {
                name += "'";
            }
            names.push_back(name);
            prime[v] = static_cast<Nonterminal>(names.size() - 1);
            emit({prime[v], {}});
        }
        for (auto v : block) {
            for (auto k : g.productions_of(v)) {
                const auto& rhs = g.productions()[k].rhs;
                // Split rhs as a0 B1 a1 ... Bm am with Bi in the block.
                Nonterminal lhs = v;
                std::vector<Symbol> segment;
                for (auto s : rhs) {
                    if (in_block(part, b, s)) {
                        segment.push_back(s);
                        emit({lhs, std::move(segment)});
                        segment.clear();
                        lhs = prime[s.id];
                    } else {
                        segment.push_back(s);
                    }
                }
                segment.push_back(Symbol::nonterminal(prime[v]));
                emit({lhs, std::move(segment)});
            }
        }
    }
    return Cfg(g.terminals(), std::move(names), std::move(out), g.start());
}

bool is_strongly_regular(const Cfg& g) {
    const auto part = sccs(g);
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        if (part.recursive[b] && !block_uniform(g, part, b)) {
            return false;
        }
    }
    return true;
}

std::vector<SccClass> classify_blocks(const Cfg& g, const SccPartition& part) {
    std::vector<SccClass> classes(part.blocks.size(), SccClass::cyclic);
    for (std::size_t b = 0; b < part.blocks.size(); ++b) {
        if (!part.recursive[b]) {
            continue;
        }
        bool left_gen = false, right_gen = false;
        for (auto v : part.blocks[b]) {
            for (auto k : g.productions_of(v)) {
                const auto& rhs = g.productions()[k].rhs;
                for (std::size_t i = 0; i < rhs.size(); ++i) {
                    if (in_block(part, b, rhs[i])) {
                        left_gen = left_gen || i > 0;
                        right_gen = right_gen || i + 1 < rhs.size();
                    }
                }
            }
        }
        if (left_gen && right_gen) {
            throw InputError("grammar is not strongly regular: block of '" +
                             g.variable_name(part.blocks[b].front()) +
                             "' is both left and right generating");
        }
        if (right_gen) {
            classes[b] = SccClass::left;
        } else if (left_gen) {
            classes[b] = SccClass::right;
        }
    }
    return classes;
}

Nfa make_fa(const Cfg& g, const SccPartition& part) {
    auto classes = classify_blocks(g, part);
    Nfa out(g.terminals(), 2);
    out.set_accepting(1);
    FaBuilder builder(g, part, std::move(classes), out);
    builder.symbol(0, Symbol::nonterminal(g.start()), 1);
    return out;
}

Nfa nederhof(const Cfg& g) {
    const Cfg sr = strongly_regular(g);
    return make_fa(sr, sccs(sr));
}

} // namespace cfsep
