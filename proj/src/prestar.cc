#include "cfsep/prestar.hh"

#include <algorithm>

#include "cfsep/automata.hh"
#include "cfsep/error.hh"

namespace cfsep {

namespace {

// Above this many bits the table switches to a hash set.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;

} // namespace

bool PrestarTable::contains(State from, Symbol symbol, State to) const {
    return std::binary_search(triples.begin(), triples.end(), Triple{from, symbol, to});
}

Nfa PrestarTable::automaton() const {
    Alphabet gamma = terminals;
    std::vector<Letter> var_letter;
    for (const auto& v : variables) {
        var_letter.push_back(gamma.add("<" + v + ">"));
    }
    Nfa a(gamma, num_states);
    a.set_initial(initial);
    for (auto q : accepting) {
        a.set_accepting(q);
    }
    for (const auto& t : triples) {
        a.add_transition(t.from, t.symbol.is_terminal() ? t.symbol.id : var_letter[t.symbol.id],
                         t.to);
    }
    return a;
}

PrestarSession::PrestarSession(const Cfg& g, const Nfa& base_in)
    : g_(g), alphabet_(Alphabet::merge(g.terminals(), base_in.alphabet())) {
    if (!is_normal_form(g)) {
        throw InputError("pre* needs a grammar in normal form");
    }
    g_ = g.with_alphabet(alphabet_);
    const Nfa base = base_in.with_alphabet(alphabet_);
    sigma_ = alphabet_.size();
    gamma_ = sigma_ + g_.num_variables();
    num_states_ = base.num_states();
    initial_ = base.initial();
    accepting_.resize(num_states_);
    for (State q = 0; q < num_states_; ++q) {
        accepting_[q] = base.is_accepting(q);
    }
    start_index_ = sym_index(Symbol::nonterminal(g_.start()));

    unary_.resize(gamma_);
    by_left_.resize(gamma_);
    by_right_.resize(gamma_);
    for (const auto& p : g_.productions()) {
        const auto a = sym_index(Symbol::nonterminal(p.lhs));
        switch (p.rhs.size()) {
        case 0:
            nullable_rules_.push_back(a);
            break;
        case 1:
            unary_[sym_index(p.rhs[0])].push_back(a);
            break;
        default: {
            const auto b = sym_index(p.rhs[0]);
            const auto c = sym_index(p.rhs[1]);
            by_left_[b].push_back({a, c});
            by_right_[c].push_back({a, b});
        }
        }
    }

    const std::uint64_t cells = static_cast<std::uint64_t>(gamma_) * num_states_ * num_states_;
    use_dense_ = cells <= kDenseLimit;
    if (use_dense_) {
        dense_.assign(cells, false);
    }
    out_.resize(static_cast<std::size_t>(gamma_) * num_states_);
    in_.resize(out_.size());
    eps_succ_.resize(num_states_);
    eps_pred_.resize(num_states_);
    letters_.resize(num_states_);

    for (auto a : nullable_rules_) {
        for (State q = 0; q < num_states_; ++q) {
            derive(q, a, q);
        }
    }
    for (const auto& t : base.transitions()) {
        base_edges_.push_back(t);
        insert_edge(t);
    }
    saturate(false);
    journal_.clear();
}

PrestarSession PrestarSession::for_word(const Cfg& g, const Word& w) {
    PrestarSession s(g, word_automaton(g.terminals(), w));
    s.word_ = w;
    return s;
}

bool PrestarSession::has(State p, std::uint32_t x, State q) const {
    const auto k = key(p, x, q);
    return use_dense_ ? static_cast<bool>(dense_[k]) : sparse_.count(k) > 0;
}

bool PrestarSession::contains(State from, Symbol symbol, State to) const {
    if (from >= num_states_ || to >= num_states_) {
        return false;
    }
    if (symbol.is_terminal() ? symbol.id >= sigma_ : symbol.id >= g_.num_variables()) {
        return false;
    }
    return has(from, sym_index(symbol), to);
}

void PrestarSession::derive(State p, std::uint32_t x, State q) {
    ++applications_;
    const auto k = key(p, x, q);
    if (use_dense_) {
        if (dense_[k]) {
            return;
        }
        dense_[k] = true;
    } else if (!sparse_.insert(k).second) {
        return;
    }
    ++table_count_;
    out_[slot(p, x)].push_back(q);
    in_[slot(q, x)].push_back(p);
    journal_.push_back({Entry::triple, p, x, q});
    worklist_.push_back({p, sym_of(x), q});
    if (x == start_index_ && p == initial_ && accepting_[q]) {
        ++violations_;
    }
}

void PrestarSession::insert_edge(const Transition& t) {
    if (t.from >= num_states_ || t.to >= num_states_) {
        throw InputError("transition endpoint is not a state of the session");
    }
    if (t.label == kEpsilon) {
        auto& succ = eps_succ_[t.from];
        if (t.from == t.to || std::find(succ.begin(), succ.end(), t.to) != succ.end()) {
            return;
        }
        succ.push_back(t.to);
        eps_pred_[t.to].push_back(t.from);
        journal_.push_back({Entry::epsilon, t.from, kEpsilon, t.to});
        for (std::uint32_t x = 0; x < gamma_; ++x) {
            const auto from_to = slot(t.to, x);
            for (std::size_t i = 0; i < out_[from_to].size(); ++i) {
                derive(t.from, x, out_[from_to][i]);
            }
            const auto into_from = slot(t.from, x);
            for (std::size_t i = 0; i < in_[into_from].size(); ++i) {
                derive(in_[into_from][i], x, t.to);
            }
        }
        return;
    }
    if (t.label >= sigma_) {
        throw InputError("transition label is not in the alphabet");
    }
    auto& out = letters_[t.from];
    std::pair<Letter, State> edge{t.label, t.to};
    if (std::find(out.begin(), out.end(), edge) != out.end()) {
        return;
    }
    out.push_back(edge);
    journal_.push_back({Entry::letter, t.from, t.label, t.to});
    derive(t.from, t.label, t.to);
}

void PrestarSession::saturate(bool stop_on_violation) {
    while (!worklist_.empty()) {
        if (stop_on_violation && violated()) {
            return;
        }
        const Triple tr = worklist_.front();
        worklist_.pop_front();
        const State p = tr.from, q = tr.to;
        const auto x = sym_index(tr.symbol);
        for (auto a : unary_[x]) {
            derive(p, a, q);
        }
        for (const auto& rule : by_left_[x]) {
            const auto s = slot(q, rule.other);
            for (std::size_t i = 0; i < out_[s].size(); ++i) {
                derive(p, rule.lhs, out_[s][i]);
            }
        }
        for (const auto& rule : by_right_[x]) {
            const auto s = slot(p, rule.other);
            for (std::size_t i = 0; i < in_[s].size(); ++i) {
                derive(in_[s][i], rule.lhs, q);
            }
        }
        for (std::size_t i = 0; i < eps_pred_[p].size(); ++i) {
            derive(eps_pred_[p][i], x, q);
        }
        for (std::size_t i = 0; i < eps_succ_[q].size(); ++i) {
            derive(p, x, eps_succ_[q][i]);
        }
    }
}

void PrestarSession::rollback(Mark m) {
    worklist_.clear();
    while (journal_.size() > m) {
        const auto item = journal_.back();
        journal_.pop_back();
        switch (item.kind) {
        case Entry::triple: {
            const auto k = key(item.from, item.label, item.to);
            if (use_dense_) {
                dense_[k] = false;
            } else {
                sparse_.erase(k);
            }
            --table_count_;
            out_[slot(item.from, item.label)].pop_back();
            in_[slot(item.to, item.label)].pop_back();
            if (item.label == start_index_ && item.from == initial_ && accepting_[item.to]) {
                --violations_;
            }
            break;
        }
        case Entry::epsilon:
            eps_succ_[item.from].pop_back();
            eps_pred_[item.to].pop_back();
            break;
        case Entry::letter:
            letters_[item.from].pop_back();
            break;
        }
    }
}

void PrestarSession::validate_word_edge(const Transition& t) const {
    const auto& w = *word_;
    if (t.label == kEpsilon) {
        if (!(t.from < t.to && t.to <= w.size())) {
            throw InputError("epsilon edges of a generalization must point forward");
        }
        return;
    }
    if (!(t.to <= t.from && t.from < w.size() && t.label == w[t.from])) {
        throw InputError("backward edges of a generalization must repeat the letter read "
                         "from their source state");
    }
}

void PrestarSession::add(const Transition& t) {
    if (word_) {
        validate_word_edge(t);
    }
    insert_edge(t);
    saturate(false);
}

bool PrestarSession::try_add(const Transition& t) {
    if (word_) {
        validate_word_edge(t);
    }
    const auto m = mark();
    insert_edge(t);
    saturate(true);
    if (violated()) {
        rollback(m);
        return false;
    }
    return true;
}

bool PrestarSession::try_add_all(std::span<const Transition> ts) {
    if (word_) {
        for (const auto& t : ts) {
            validate_word_edge(t);
        }
    }
    const auto m = mark();
    for (const auto& t : ts) {
        insert_edge(t);
    }
    saturate(true);
    if (violated()) {
        rollback(m);
        return false;
    }
    return true;
}

std::vector<Triple> PrestarSession::triples() const {
    std::vector<Triple> all;
    all.reserve(table_count_);
    for (State p = 0; p < num_states_; ++p) {
        for (std::uint32_t x = 0; x < gamma_; ++x) {
            for (auto q : out_[slot(p, x)]) {
                all.push_back({p, sym_of(x), q});
            }
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<Transition> PrestarSession::added_transitions() const {
    std::vector<Transition> out;
    for (const auto& item : journal_) {
        if (item.kind == Entry::epsilon) {
            out.push_back({item.from, kEpsilon, item.to});
        } else if (item.kind == Entry::letter) {
            out.push_back({item.from, item.label, item.to});
        }
    }
    return out;
}

Nfa PrestarSession::automaton() const {
    Nfa a(alphabet_, num_states_);
    a.set_initial(initial_);
    for (State q = 0; q < num_states_; ++q) {
        a.set_accepting(q, accepting_[q]);
    }
    for (const auto& t : base_edges_) {
        a.add_transition(t);
    }
    for (const auto& t : added_transitions()) {
        a.add_transition(t);
    }
    return a;
}

PrestarTable prestar(const Cfg& g, const Nfa& a) {
    PrestarSession s(g, a);
    PrestarTable table;
    table.terminals = Alphabet::merge(g.terminals(), a.alphabet());
    table.variables = g.variable_names();
    table.num_states = a.num_states();
    table.initial = a.initial();
    table.accepting = a.accepting_states();
    table.triples = s.triples();
    return table;
}

bool intersects(const Cfg& g, const Nfa& a) {
    const Nfa t = trim(a);
    if (is_empty(t)) {
        return false;
    }
    return PrestarSession(normalize(g), t).violated();
}

} // namespace cfsep
