#include "cfsep/grammar.hh"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include "cfsep/error.hh"

namespace cfsep {

Cfg::Cfg(Alphabet terminals, std::vector<std::string> variables,
         std::vector<Production> productions, Nonterminal start)
    : terminals_(std::move(terminals)), variables_(std::move(variables)),
      productions_(std::move(productions)), start_(start) {
    if (start_ >= variables_.size()) {
        throw InputError("start symbol is not a declared variable");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : variables_) {
        if (name.empty()) {
            throw InputError("variable names must be non-empty");
        }
        if (!seen.insert(name).second) {
            throw InputError("duplicate variable '" + name + "'");
        }
    }
    by_lhs_.resize(variables_.size());
    for (std::size_t k = 0; k < productions_.size(); ++k) {
        const auto& p = productions_[k];
        if (p.lhs >= variables_.size()) {
            throw InputError("production with undeclared left-hand side");
        }
        for (auto sym : p.rhs) {
            if (sym.is_terminal() ? sym.id >= terminals_.size() : sym.id >= variables_.size()) {
                throw InputError("production for '" + variables_[p.lhs] +
                                 "' refers to an undeclared symbol");
            }
        }
        by_lhs_[p.lhs].push_back(k);
    }
}

std::optional<Nonterminal> Cfg::find_variable(std::string_view name) const {
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        if (variables_[v] == name) {
            return static_cast<Nonterminal>(v);
        }
    }
    return std::nullopt;
}

Cfg Cfg::with_alphabet(const Alphabet& superset) const {
    auto mapping = letter_mapping(terminals_, superset);
    auto prods = productions_;
    for (auto& p : prods) {
        for (auto& sym : p.rhs) {
            if (sym.is_terminal()) {
                sym.id = mapping[sym.id];
            }
        }
    }
    return Cfg(superset, variables_, std::move(prods), start_);
}

std::string Cfg::to_string() const {
    std::ostringstream out;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        out << variables_[v] << " ->";
        const auto& idx = by_lhs_[v];
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k > 0) {
                out << " |";
            }
            const auto& rhs = productions_[idx[k]].rhs;
            if (rhs.empty()) {
                out << " ε";
            }
            for (auto sym : rhs) {
                out << ' '
                    << (sym.is_terminal() ? "\"" + terminals_.name(sym.id) + "\""
                                          : variables_[sym.id]);
            }
        }
        out << '\n';
    }
    return out.str();
}

bool is_normal_form(const Cfg& g) {
    for (const auto& p : g.productions()) {
        if (p.rhs.size() > 2) {
            return false;
        }
        if (p.rhs.size() == 2 && (p.rhs[0].is_terminal() || p.rhs[1].is_terminal())) {
            return false;
        }
    }
    return true;
}

namespace {

class FreshNames {
public:
    explicit FreshNames(const std::vector<std::string>& names)
        : used_(names.begin(), names.end()) {}

    std::string next(const std::string& origin) {
        auto& counter = counters_[origin];
        for (;;) {
            std::string name = origin + "." + std::to_string(++counter);
            if (used_.insert(name).second) {
                return name;
            }
        }
    }

private:
    std::unordered_set<std::string> used_;
    std::map<std::string, std::size_t> counters_;
};

} // namespace

Cfg normalize(const Cfg& g) {
    auto names = g.variable_names();
    FreshNames fresh(names);
    std::vector<Production> out;
    std::vector<std::optional<Nonterminal>> wrapper(g.terminals().size());

    auto add_variable = [&](const std::string& origin) {
        names.push_back(fresh.next(origin));
        return static_cast<Nonterminal>(names.size() - 1);
    };

    for (const auto& p : g.productions()) {
        const bool normal =
            p.rhs.size() <= 1 ||
            (p.rhs.size() == 2 && p.rhs[0].is_nonterminal() && p.rhs[1].is_nonterminal());
        if (normal) {
            out.push_back(p);
            continue;
        }
        const auto& origin = g.variable_name(p.lhs);
        std::vector<Symbol> rhs = p.rhs;
        for (auto& sym : rhs) {
            if (sym.is_nonterminal()) {
                continue;
            }
            auto& w = wrapper[sym.id];
            if (!w) {
                w = add_variable(origin);
                out.push_back({*w, {sym}});
            }
            sym = Symbol::nonterminal(*w);
        }
        Nonterminal lhs = p.lhs;
        while (rhs.size() > 2) {
            auto rest = add_variable(origin);
            out.push_back({lhs, {rhs.front(), Symbol::nonterminal(rest)}});
            rhs.erase(rhs.begin());
            lhs = rest;
        }
        out.push_back({lhs, std::move(rhs)});
    }
    return Cfg(g.terminals(), std::move(names), std::move(out), g.start());
}

SccPartition sccs(const Cfg& g) {
    const std::size_t n = g.num_variables();
    std::vector<std::vector<Nonterminal>> succ(n);
    std::vector<bool> self_loop(n, false);
    for (const auto& p : g.productions()) {
        for (auto sym : p.rhs) {
            if (sym.is_nonterminal()) {
                succ[p.lhs].push_back(sym.id);
                if (sym.id == p.lhs) {
                    self_loop[p.lhs] = true;
                }
            }
        }
    }

    // Iterative Tarjan; components come out callees first.
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Nonterminal> stack;
    std::vector<std::vector<Nonterminal>> found;
    std::size_t counter = 0;

    struct Frame {
        Nonterminal v;
        std::size_t next;
    };
    for (Nonterminal root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.next < succ[f.v].size()) {
                Nonterminal w = succ[f.v][f.next++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            Nonterminal v = f.v;
            frames.pop_back();
            if (!frames.empty()) {
                low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
            if (low[v] == index[v]) {
                std::vector<Nonterminal> block;
                Nonterminal w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    block.push_back(w);
                } while (w != v);
                std::sort(block.begin(), block.end());
                found.push_back(std::move(block));
            }
        }
    }

    SccPartition part;
    part.index.assign(n, 0);
    for (auto it = found.rbegin(); it != found.rend(); ++it) {
        const std::size_t id = part.blocks.size();
        for (auto v : *it) {
            part.index[v] = id;
        }
        part.recursive.push_back(it->size() > 1 || self_loop[it->front()]);
        part.blocks.push_back(std::move(*it));
    }
    return part;
}

std::vector<bool> nullable_variables(const Cfg& g) {
    std::vector<bool> nullable(g.num_variables(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (nullable[p.lhs]) {
                continue;
            }
            bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](Symbol s) {
                return s.is_nonterminal() && nullable[s.id];
            });
            if (all) {
                nullable[p.lhs] = true;
                changed = true;
            }
        }
    }
    return nullable;
}

std::vector<bool> productive_variables(const Cfg& g) {
    std::vector<bool> productive(g.num_variables(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions()) {
            if (productive[p.lhs]) {
                continue;
            }
            bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](Symbol s) {
                return s.is_terminal() || productive[s.id];
            });
            if (all) {
                productive[p.lhs] = true;
                changed = true;
            }
        }
    }
    return productive;
}

Cfg prune(const Cfg& g) {
    auto productive = productive_variables(g);
    productive[g.start()] = true;

    std::vector<bool> reachable(g.num_variables(), false);
    std::vector<Nonterminal> todo{g.start()};
    reachable[g.start()] = true;
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (auto k : g.productions_of(v)) {
            const auto& rhs = g.productions()[k].rhs;
            bool usable = std::all_of(rhs.begin(), rhs.end(), [&](Symbol s) {
                return s.is_terminal() || productive[s.id];
            });
            if (!usable) {
                continue;
            }
            for (auto s : rhs) {
                if (s.is_nonterminal() && !reachable[s.id]) {
                    reachable[s.id] = true;
                    todo.push_back(s.id);
                }
            }
        }
    }

    std::vector<Nonterminal> renumber(g.num_variables(), 0);
    std::vector<std::string> names;
    for (Nonterminal v = 0; v < g.num_variables(); ++v) {
        if (reachable[v] && productive[v]) {
            renumber[v] = static_cast<Nonterminal>(names.size());
            names.push_back(g.variable_name(v));
        }
    }
    std::vector<Production> prods;
    for (const auto& p : g.productions()) {
        if (!reachable[p.lhs] || !productive[p.lhs]) {
            continue;
        }
        Production q{renumber[p.lhs], {}};
        bool keep = true;
        for (auto s : p.rhs) {
            if (s.is_nonterminal()) {
                if (!reachable[s.id] || !productive[s.id]) {
                    keep = false;
                    break;
                }
                s.id = renumber[s.id];
            }
            q.rhs.push_back(s);
        }
        if (keep) {
            prods.push_back(std::move(q));
        }
    }
    return Cfg(g.terminals(), std::move(names), std::move(prods), renumber[g.start()]);
}

Recognizer::Recognizer(const Cfg& g) : normal_(normalize(g)) {
    nullable_ = nullable_variables(normal_);
    by_letter_.resize(normal_.terminals().size());
    unit_parents_.resize(normal_.num_variables());
    for (const auto& p : normal_.productions()) {
        if (p.rhs.size() == 1) {
            if (p.rhs[0].is_terminal()) {
                by_letter_[p.rhs[0].id].push_back(p.lhs);
            } else {
                unit_parents_[p.rhs[0].id].push_back(p.lhs);
            }
        } else if (p.rhs.size() == 2) {
            Nonterminal b = p.rhs[0].id, c = p.rhs[1].id;
            binary_.push_back({p.lhs, b, c});
            // A -> BC with a nullable side behaves like a unit rule on the other.
            if (nullable_[b]) {
                unit_parents_[c].push_back(p.lhs);
            }
            if (nullable_[c]) {
                unit_parents_[b].push_back(p.lhs);
            }
        }
    }
}

bool Recognizer::accepts(const Word& w) const {
    for (auto letter : w) {
        if (letter >= normal_.terminals().size()) {
            throw InputError("word contains a symbol outside the grammar's alphabet");
        }
    }
    const std::size_t n = w.size();
    if (n == 0) {
        return nullable_[normal_.start()];
    }
    const std::size_t vars = normal_.num_variables();
    // chart[i][len-1] holds the variables deriving w[i, i+len).
    std::vector<std::vector<std::vector<char>>> chart(
        n, std::vector<std::vector<char>>());
    for (std::size_t i = 0; i < n; ++i) {
        chart[i].assign(n - i, std::vector<char>(vars, 0));
    }
    std::vector<Nonterminal> todo;
    auto close = [&](std::vector<char>& cell) {
        while (!todo.empty()) {
            auto b = todo.back();
            todo.pop_back();
            for (auto a : unit_parents_[b]) {
                if (!cell[a]) {
                    cell[a] = 1;
                    todo.push_back(a);
                }
            }
        }
    };
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            auto& cell = chart[i][len - 1];
            if (len == 1) {
                for (auto a : by_letter_[w[i]]) {
                    cell[a] = 1;
                }
            }
            for (std::size_t k = 1; k < len; ++k) {
                const auto& left = chart[i][k - 1];
                const auto& right = chart[i + k][len - k - 1];
                for (const auto& r : binary_) {
                    if (!cell[r.lhs] && left[r.left] && right[r.right]) {
                        cell[r.lhs] = 1;
                    }
                }
            }
            for (Nonterminal a = 0; a < vars; ++a) {
                if (cell[a]) {
                    todo.push_back(a);
                }
            }
            close(cell);
        }
    }
    return chart[0][n - 1][normal_.start()] != 0;
}

bool member(const Cfg& g, const Word& w) {
    return Recognizer(g).accepts(w);
}

std::set<Word> enumerate_words(const Cfg& g, std::size_t max_len) {
    const Cfg ng = normalize(g);
    const std::size_t vars = ng.num_variables();
    // words[v][len] = words of length len derivable from v
    std::vector<std::vector<std::set<Word>>> words(
        vars, std::vector<std::set<Word>>(max_len + 1));
    auto nullable = nullable_variables(ng);
    for (Nonterminal v = 0; v < vars; ++v) {
        if (nullable[v]) {
            words[v][0].insert(Word{});
        }
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& p : ng.productions()) {
                auto& target = words[p.lhs][len];
                const auto before = target.size();
                if (p.rhs.size() == 1) {
                    if (p.rhs[0].is_terminal()) {
                        if (len == 1) {
                            target.insert(Word{p.rhs[0].id});
                        }
                    } else {
                        const auto& src = words[p.rhs[0].id][len];
                        target.insert(src.begin(), src.end());
                    }
                } else if (p.rhs.size() == 2) {
                    for (std::size_t k = 0; k <= len; ++k) {
                        for (const auto& u : words[p.rhs[0].id][k]) {
                            for (const auto& v : words[p.rhs[1].id][len - k]) {
                                Word uv = u;
                                uv.insert(uv.end(), v.begin(), v.end());
                                target.insert(std::move(uv));
                            }
                        }
                    }
                }
                changed = changed || target.size() != before;
            }
        }
    }
    std::set<Word> result;
    for (const auto& bucket : words[ng.start()]) {
        result.insert(bucket.begin(), bucket.end());
    }
    return result;
}

} // namespace cfsep
