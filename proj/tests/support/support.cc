#include "support.hh"

#include <string>

#include "cfsep/grammar_file.hh"

namespace testing {

using cfsep::Letter;
using cfsep::Nonterminal;
using cfsep::Production;
using cfsep::State;
using cfsep::Symbol;

Cfg grammar(std::string_view rules) {
    auto parsed = cfsep::parse_grammar_file("grammar G {\n" + std::string(rules) + "\n}\n");
    return parsed.front().grammar;
}

Word word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    for (char c : text) {
        w.push_back(alphabet.at(std::string(1, c)));
    }
    return w;
}

std::string show(const Alphabet& alphabet, const Word& w) {
    return "\"" + alphabet.render(w) + "\"";
}

bool brute_member(const Cfg& g, const Word& w) {
    const auto n = w.size();
    const auto vars = g.num_variables();
    // derives[A][i][j]: A =>* w[i, j)
    std::vector<std::vector<std::vector<bool>>> derives(
        vars, std::vector<std::vector<bool>>(n + 1, std::vector<bool>(n + 1, false)));
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            for (std::size_t i = 0; i <= n; ++i) {
                std::vector<bool> reach(n + 1, false);
                reach[i] = true;
                for (const auto& s : p.rhs) {
                    std::vector<bool> next(n + 1, false);
                    for (std::size_t j = i; j <= n; ++j) {
                        if (!reach[j]) {
                            continue;
                        }
                        if (s.is_terminal()) {
                            if (j < n && w[j] == s.id) {
                                next[j + 1] = true;
                            }
                        } else {
                            for (std::size_t k = j; k <= n; ++k) {
                                if (derives[s.id][j][k]) {
                                    next[k] = true;
                                }
                            }
                        }
                    }
                    reach = std::move(next);
                }
                for (std::size_t j = i; j <= n; ++j) {
                    if (reach[j] && !derives[p.lhs][i][j]) {
                        derives[p.lhs][i][j] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    return derives[g.start()][0][n];
}

std::vector<Word> all_words(std::size_t letters, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (out[k].size() == max_len) {
            continue;
        }
        for (Letter x = 0; x < letters; ++x) {
            Word w = out[k];
            w.push_back(x);
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::set<Word> brute_words(const Cfg& g, std::size_t max_len) {
    std::set<Word> out;
    for (const auto& w : all_words(g.terminals().size(), max_len)) {
        if (brute_member(g, w)) {
            out.insert(w);
        }
    }
    return out;
}

namespace {

std::set<State> eclose(const Nfa& a, std::set<State> s) {
    std::vector<State> stack(s.begin(), s.end());
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (const auto& e : a.edges(q)) {
            if (e.label == cfsep::kEpsilon && s.insert(e.to).second) {
                stack.push_back(e.to);
            }
        }
    }
    return s;
}

} // namespace

bool brute_accepts(const Nfa& a, const Word& w) {
    auto cur = eclose(a, {a.initial()});
    for (auto x : w) {
        std::set<State> next;
        for (auto q : cur) {
            for (const auto& e : a.edges(q)) {
                if (e.label == x) {
                    next.insert(e.to);
                }
            }
        }
        cur = eclose(a, std::move(next));
    }
    for (auto q : cur) {
        if (a.is_accepting(q)) {
            return true;
        }
    }
    return false;
}

std::set<Word> brute_nfa_words(const Nfa& a, std::size_t max_len) {
    std::set<Word> out;
    for (const auto& w : all_words(a.alphabet().size(), max_len)) {
        if (brute_accepts(a, w)) {
            out.insert(w);
        }
    }
    return out;
}

Cfg nfa_grammar(const Nfa& a) {
    std::vector<std::string> names;
    for (State q = 0; q < a.num_states(); ++q) {
        names.push_back("Q" + std::to_string(q));
    }
    std::vector<Production> prods;
    for (State q = 0; q < a.num_states(); ++q) {
        for (const auto& e : a.edges(q)) {
            if (e.label == cfsep::kEpsilon) {
                prods.push_back({q, {Symbol::nonterminal(e.to)}});
            } else {
                prods.push_back({q, {Symbol::terminal(e.label), Symbol::nonterminal(e.to)}});
            }
        }
        if (a.is_accepting(q)) {
            prods.push_back({q, {}});
        }
    }
    return Cfg(a.alphabet(), names, std::move(prods), a.initial());
}

Cfg random_cfg(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> nvars(2, 4);
    const auto vars = nvars(rng);
    std::vector<std::string> names;
    for (std::size_t v = 0; v < vars; ++v) {
        names.push_back("V" + std::to_string(v));
    }
    std::uniform_int_distribution<int> nprod(1, 3), len(0, 3), pick(0, 9);
    std::uniform_int_distribution<Nonterminal> var(0, static_cast<Nonterminal>(vars - 1));
    std::vector<Production> prods;
    for (Nonterminal v = 0; v < vars; ++v) {
        const int count = nprod(rng);
        for (int k = 0; k < count; ++k) {
            Production p{v, {}};
            const int n = len(rng);
            for (int s = 0; s < n; ++s) {
                const int r = pick(rng);
                p.rhs.push_back(r < 6 ? Symbol::terminal(static_cast<Letter>(r % 2))
                                      : Symbol::nonterminal(var(rng)));
            }
            prods.push_back(std::move(p));
        }
    }
    return Cfg(Alphabet{"a", "b"}, names, std::move(prods), 0);
}

Nfa random_nfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t states, bool epsilon) {
    Nfa a(alphabet, states);
    std::uniform_int_distribution<State> st(0, static_cast<State>(states - 1));
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet.size() - 1));
    std::bernoulli_distribution coin(0.35), eps(0.2);
    const std::size_t edges = states * 2;
    for (std::size_t k = 0; k < edges; ++k) {
        a.add_transition(st(rng), epsilon && eps(rng) ? cfsep::kEpsilon : letter(rng), st(rng));
    }
    for (State q = 0; q < states; ++q) {
        a.set_accepting(q, coin(rng));
    }
    return a;
}

Regex random_union_free(std::mt19937& rng, std::size_t letters, std::size_t depth) {
    std::uniform_int_distribution<int> kind(0, depth == 0 ? 1 : 4);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(letters - 1));
    switch (kind(rng)) {
    case 0:
    case 1:
        return Regex::symbol(letter(rng));
    case 2:
    case 3:
        return Regex::concat({random_union_free(rng, letters, depth - 1),
                              random_union_free(rng, letters, depth - 1)});
    default:
        return Regex::star(random_union_free(rng, letters, depth - 1));
    }
}

Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(letters - 1));
    Word w(len(rng));
    for (auto& x : w) {
        x = letter(rng);
    }
    return w;
}

} // namespace testing
