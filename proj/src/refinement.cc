#include "cfsep/refinement.hh"

#include <algorithm>
#include <set>

#include "cfsep/automata.hh"
#include "cfsep/error.hh"
#include "cfsep/prestar.hh"

namespace cfsep {

namespace {

// Ranges must be sorted by (i ascending, j descending) so that every range
// precedes the ranges nested inside it.
Regex build_segment(const Word& w, std::size_t lo, std::size_t hi,
                    const std::vector<Range>& ranges, std::size_t& next) {
    std::vector<Regex> parts;
    std::size_t pos = lo;
    while (next < ranges.size() && ranges[next].j <= hi && ranges[next].i >= lo) {
        const Range r = ranges[next++];
        for (; pos < r.i; ++pos) {
            parts.push_back(Regex::symbol(w[pos]));
        }
        parts.push_back(Regex::star(build_segment(w, r.i, r.j, ranges, next)));
        pos = r.j;
    }
    for (; pos < hi; ++pos) {
        parts.push_back(Regex::symbol(w[pos]));
    }
    return Regex::concat(std::move(parts));
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Keeps only the sets not strictly contained in another one.
std::vector<std::vector<std::size_t>> maximal_sets(std::vector<std::vector<std::size_t>> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < sets.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < sets.size() && !dominated; ++b) {
            dominated = a != b && sets[b].size() > sets[a].size() && is_subset(sets[a], sets[b]);
        }
        if (!dominated) {
            out.push_back(sets[a]);
        }
    }
    return out;
}

Nfa union_of(std::vector<Nfa> parts, const Alphabet& alphabet) {
    if (parts.empty()) {
        return empty_automaton(alphabet);
    }
    Nfa acc = std::move(parts.front());
    for (std::size_t k = 1; k < parts.size(); ++k) {
        acc = unite(acc, parts[k]);
    }
    return trim(acc);
}

} // namespace

void check_well_formed(const StarGeneralization& sg) {
    const auto n = sg.word.size();
    for (std::size_t a = 0; a < sg.ranges.size(); ++a) {
        const auto r = sg.ranges[a];
        if (!(r.i < r.j && r.j <= n)) {
            throw InputError("star range (" + std::to_string(r.i) + "," + std::to_string(r.j) +
                             ") is out of bounds");
        }
        for (std::size_t b = 0; b < a; ++b) {
            if (sg.ranges[b] == r) {
                throw InputError("duplicate star range");
            }
            if (crossing(sg.ranges[b], r)) {
                throw InputError("star ranges cross each other");
            }
        }
    }
}

Regex gen_regex(const StarGeneralization& sg) {
    check_well_formed(sg);
    auto ranges = sg.ranges;
    std::sort(ranges.begin(), ranges.end(), [](Range a, Range b) {
        return a.i != b.i ? a.i < b.i : a.j > b.j;
    });
    std::size_t next = 0;
    return build_segment(sg.word, 0, sg.word.size(), ranges, next);
}

Nfa gen_language(const StarGeneralization& sg, const Alphabet& alphabet) {
    return compile(gen_regex(sg), alphabet);
}

std::vector<Range> star_candidates(std::size_t n) {
    std::vector<Range> out;
    for (std::size_t span = 1; span <= n; ++span) {
        for (std::size_t i = 0; i + span <= n; ++i) {
            out.push_back({i, i + span});
        }
    }
    return out;
}

std::vector<Transition> eps_candidates(const Word& w, EpsOrder order) {
    const auto n = w.size();
    std::vector<Transition> forward, backward;
    for (std::size_t span = 1; span <= n; ++span) {
        for (std::size_t i = 0; i + span <= n; ++i) {
            forward.push_back({static_cast<State>(i), kEpsilon, static_cast<State>(i + span)});
        }
        for (std::size_t j = span; j <= n; ++j) {
            backward.push_back({static_cast<State>(j - 1), w[j - 1], static_cast<State>(j - span)});
        }
    }
    if (order == EpsOrder::backward_first) {
        std::swap(forward, backward);
    }
    forward.insert(forward.end(), backward.begin(), backward.end());
    return forward;
}

Generalizer::Generalizer(const Cfg& g, EpsOrder order) : normal_(normalize(g)), order_(order) {}

void Generalizer::require_outside(const Word& w) {
    if (PrestarSession::for_word(normal_, w).violated()) {
        throw PreconditionError("cannot generalize a word of the grammar's language");
    }
}

bool Generalizer::disjoint(const StarGeneralization& sg) {
    ++tests_;
    const Nfa a = trim(gen_language(sg, normal_.terminals()));
    if (is_empty(a)) {
        return true;
    }
    return !PrestarSession(normal_, a).violated();
}

StarGeneralization Generalizer::star(const Word& w, std::optional<std::size_t> limit) {
    tests_ = 0;
    require_outside(w);
    StarGeneralization sg{w, {}};
    auto pending = star_candidates(w.size());
    std::size_t examined = 0;
    while (!pending.empty() && (!limit || examined < *limit)) {
        const Range r = pending.front();
        pending.erase(pending.begin());
        ++examined;
        StarGeneralization next = sg;
        next.ranges.insert(std::upper_bound(next.ranges.begin(), next.ranges.end(), r), r);
        if (disjoint(next)) {
            sg = std::move(next);
            std::erase_if(pending, [&](Range c) { return crossing(c, r); });
        }
    }
    return sg;
}

Nfa Generalizer::eps(const Word& w, std::optional<std::size_t> limit) {
    tests_ = 0;
    auto session = PrestarSession::for_word(normal_, w);
    if (session.violated()) {
        throw PreconditionError("cannot generalize a word of the grammar's language");
    }
    const auto candidates = eps_candidates(w, order_);
    const auto count = limit ? std::min(*limit, candidates.size()) : candidates.size();
    for (std::size_t k = 0; k < count; ++k) {
        ++tests_;
        session.try_add(candidates[k]);
    }
    return session.automaton();
}

Nfa Generalizer::max_star(const Word& w, std::size_t budget) {
    tests_ = 0;
    require_outside(w);
    const auto candidates = star_candidates(w.size());
    std::vector<std::vector<std::size_t>> leaves;
    std::vector<std::size_t> chosen;
    std::size_t calls = 0;

    auto ranges_of = [&](const std::vector<std::size_t>& idx) {
        StarGeneralization sg{w, {}};
        for (auto k : idx) {
            sg.ranges.push_back(candidates[k]);
        }
        std::sort(sg.ranges.begin(), sg.ranges.end());
        return sg;
    };
    auto fits = [&](std::size_t k) {
        return std::none_of(chosen.begin(), chosen.end(),
                            [&](std::size_t c) { return crossing(candidates[c], candidates[k]); });
    };

    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (++calls > budget) {
            throw BudgetExceeded(budget);
        }
        while (k < candidates.size() && !fits(k)) {
            ++k;
        }
        if (k == candidates.size()) {
            leaves.push_back(chosen);
            return;
        }
        // If the remaining candidates are compatible with each other and
        // safe all together, every leaf below is contained in that one.
        std::vector<std::size_t> rest;
        for (auto c = k; c < candidates.size(); ++c) {
            if (fits(c)) {
                rest.push_back(c);
            }
        }
        bool compatible = true;
        for (std::size_t a = 0; a < rest.size() && compatible; ++a) {
            for (std::size_t b = a + 1; b < rest.size() && compatible; ++b) {
                compatible = !crossing(candidates[rest[a]], candidates[rest[b]]);
            }
        }
        if (compatible) {
            auto all = chosen;
            all.insert(all.end(), rest.begin(), rest.end());
            if (disjoint(ranges_of(all))) {
                std::sort(all.begin(), all.end());
                leaves.push_back(std::move(all));
                return;
            }
        }
        chosen.push_back(k);
        if (disjoint(ranges_of(chosen))) {
            self(self, k + 1);
        }
        chosen.pop_back();
        self(self, k + 1);
    };
    recurse(recurse, 0);

    std::vector<Nfa> parts;
    for (const auto& leaf : maximal_sets(std::move(leaves))) {
        parts.push_back(gen_language(ranges_of(leaf), normal_.terminals()));
    }
    return union_of(std::move(parts), normal_.terminals());
}

Nfa Generalizer::max_eps(const Word& w, std::size_t budget) {
    tests_ = 0;
    auto session = PrestarSession::for_word(normal_, w);
    if (session.violated()) {
        throw PreconditionError("cannot generalize a word of the grammar's language");
    }
    const auto candidates = eps_candidates(w, order_);
    std::vector<std::vector<std::size_t>> leaves;
    std::vector<std::size_t> chosen;
    std::size_t calls = 0;

    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (++calls > budget) {
            throw BudgetExceeded(budget);
        }
        if (k == candidates.size()) {
            leaves.push_back(chosen);
            return;
        }
        const auto m = session.mark();
        ++tests_;
        if (session.try_add_all(std::span(candidates).subspan(k))) {
            auto all = chosen;
            for (auto c = k; c < candidates.size(); ++c) {
                all.push_back(c);
            }
            leaves.push_back(std::move(all));
            session.rollback(m);
            return;
        }
        ++tests_;
        if (session.try_add(candidates[k])) {
            chosen.push_back(k);
            self(self, k + 1);
            chosen.pop_back();
            session.rollback(m);
        }
        self(self, k + 1);
    };
    recurse(recurse, 0);

    std::vector<Nfa> parts;
    for (const auto& leaf : maximal_sets(std::move(leaves))) {
        Nfa a = word_automaton(normal_.terminals(), w);
        for (auto k : leaf) {
            a.add_transition(candidates[k]);
        }
        parts.push_back(std::move(a));
    }
    return union_of(std::move(parts), normal_.terminals());
}

StarGeneralization star_generalize(const Word& w, const Cfg& g) {
    return Generalizer(g).star(w);
}

Nfa eps_generalize(const Word& w, const Cfg& g) {
    return Generalizer(g).eps(w);
}

Nfa max_star_generalize(const Cfg& g, const Word& w, std::size_t budget) {
    return Generalizer(g).max_star(w, budget);
}

Nfa max_eps_generalize(const Cfg& g, const Word& w, std::size_t budget) {
    return Generalizer(g).max_eps(w, budget);
}

Nfa refine_approx(const Nfa& a, const Nfa& gen) {
    return trim(difference(a, gen));
}

} // namespace cfsep
