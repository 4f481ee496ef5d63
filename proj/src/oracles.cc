#include "cfsep/oracles.hh"

#include <algorithm>
#include <map>

#include "cfsep/error.hh"

namespace cfsep::oracles {

namespace {

// Subsets of a starred subterm's contractions are enumerated explicitly.
constexpr std::size_t kMaxStarredContractions = 16;

using Kind = Regex::Kind;

RegexSet normalize_set(RegexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Regex star_of(Regex inner) {
    if (inner.kind == Kind::empty || inner.kind == Kind::epsilon) {
        return Regex::epsilon();
    }
    if (inner.kind == Kind::star) {
        return inner;
    }
    return Regex::star(std::move(inner));
}

BoundedLanguage concat(const BoundedLanguage& a, const BoundedLanguage& b, std::size_t bound) {
    BoundedLanguage out;
    for (const auto& u : a) {
        for (const auto& v : b) {
            if (u.size() + v.size() <= bound) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                out.insert(std::move(w));
            }
        }
    }
    return out;
}

BoundedLanguage closure(const BoundedLanguage& a, std::size_t bound) {
    BoundedLanguage out{Word{}};
    BoundedLanguage frontier{Word{}};
    while (!frontier.empty()) {
        BoundedLanguage next;
        for (const auto& w : concat(frontier, a, bound)) {
            if (out.insert(w).second) {
                next.insert(w);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

BoundedLanguage word_language(const Word& w, std::size_t bound) {
    return w.size() <= bound ? BoundedLanguage{w} : BoundedLanguage{};
}

template <class F>
void for_each_subset(std::size_t n, F f) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        f(mask);
    }
}

} // namespace

bool is_union_free(const Regex& e) {
    switch (e.kind) {
    case Kind::empty:
    case Kind::alt:
        return false;
    case Kind::epsilon:
    case Kind::letter:
        return true;
    case Kind::concat:
    case Kind::star:
        return std::all_of(e.children.begin(), e.children.end(), is_union_free);
    }
    return false;
}

Regex join(const Regex& a, const Regex& b) {
    std::vector<Regex> parts;
    for (const Regex* r : {&a, &b}) {
        if (r->kind == Kind::concat) {
            parts.insert(parts.end(), r->children.begin(), r->children.end());
        } else if (r->kind != Kind::epsilon) {
            parts.push_back(*r);
        }
    }
    return Regex::concat(std::move(parts));
}

RegexSet kappa(const Regex& e) {
    switch (e.kind) {
    case Kind::empty:
    case Kind::alt:
        throw InputError("star-contraction needs a union-free expression");
    case Kind::epsilon:
    case Kind::letter:
        return {e};
    case Kind::concat: {
        RegexSet acc{Regex::epsilon()};
        for (const auto& child : e.children) {
            const auto parts = kappa(child);
            RegexSet next;
            for (const auto& x : acc) {
                for (const auto& y : parts) {
                    next.push_back(join(x, y));
                }
            }
            acc = normalize_set(std::move(next));
        }
        return acc;
    }
    case Kind::star: {
        const auto inner = kappa(e.children.front());
        if (inner.size() > kMaxStarredContractions) {
            throw InputError("too many contractions under a star to enumerate");
        }
        RegexSet out;
        for_each_subset(inner.size(), [&](std::uint64_t mask) {
            std::vector<Regex> chosen;
            for (std::size_t k = 0; k < inner.size(); ++k) {
                if (mask >> k & 1) {
                    chosen.push_back(inner[k]);
                }
            }
            out.push_back(star_of(Regex::alt(std::move(chosen))));
        });
        return normalize_set(std::move(out));
    }
    }
    return {};
}

RegexSet xi(const Word& w, std::size_t max_word) {
    if (w.size() > max_word) {
        throw InputError("word too long for enumerating star-generalizations");
    }
    if (w.empty()) {
        return {Regex::epsilon()};
    }
    const auto n = w.size();
    std::map<std::pair<std::size_t, std::size_t>, RegexSet> memo;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> const RegexSet& {
        const auto key = std::make_pair(i, j);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        std::vector<Regex> letters;
        for (auto k = i; k < j; ++k) {
            letters.push_back(Regex::symbol(w[k]));
        }
        const Regex whole = Regex::concat(std::move(letters));
        RegexSet out{whole, star_of(whole)};
        for (auto m = i + 1; m < j; ++m) {
            const RegexSet left = self(self, i, m);
            const RegexSet& right = self(self, m, j);
            for (const auto& e1 : left) {
                for (const auto& e2 : right) {
                    Regex both = join(e1, e2);
                    out.push_back(star_of(both));
                    out.push_back(std::move(both));
                }
            }
        }
        return memo[key] = normalize_set(std::move(out));
    };
    return rec(rec, 0, n);
}

BoundedLanguage bounded(const Regex& e, std::size_t bound) {
    switch (e.kind) {
    case Kind::empty:
        return {};
    case Kind::epsilon:
        return {Word{}};
    case Kind::letter:
        return bound >= 1 ? BoundedLanguage{Word{e.letter}} : BoundedLanguage{};
    case Kind::concat: {
        BoundedLanguage acc{Word{}};
        for (const auto& child : e.children) {
            acc = concat(acc, bounded(child, bound), bound);
        }
        return acc;
    }
    case Kind::alt: {
        BoundedLanguage acc;
        for (const auto& child : e.children) {
            acc.merge(bounded(child, bound));
        }
        return acc;
    }
    case Kind::star:
        return closure(bounded(e.children.front(), bound), bound);
    }
    return {};
}

RegexSet dedup_by_language(const RegexSet& set, std::size_t bound) {
    std::set<BoundedLanguage> seen;
    RegexSet out;
    for (const auto& e : set) {
        if (seen.insert(bounded(e, bound)).second) {
            out.push_back(e);
        }
    }
    return out;
}

std::set<BoundedLanguage> kappa_languages(const Regex& e, std::size_t bound) {
    switch (e.kind) {
    case Kind::empty:
    case Kind::alt:
        throw InputError("star-contraction needs a union-free expression");
    case Kind::epsilon:
    case Kind::letter:
        return {bounded(e, bound)};
    case Kind::concat: {
        std::set<BoundedLanguage> acc{{Word{}}};
        for (const auto& child : e.children) {
            const auto parts = kappa_languages(child, bound);
            std::set<BoundedLanguage> next;
            for (const auto& x : acc) {
                for (const auto& y : parts) {
                    next.insert(concat(x, y, bound));
                }
            }
            acc = std::move(next);
        }
        return acc;
    }
    case Kind::star: {
        const auto inner_set = kappa_languages(e.children.front(), bound);
        if (inner_set.size() > kMaxStarredContractions) {
            throw InputError("too many contractions under a star to enumerate");
        }
        const std::vector<BoundedLanguage> inner(inner_set.begin(), inner_set.end());
        std::set<BoundedLanguage> out;
        for_each_subset(inner.size(), [&](std::uint64_t mask) {
            BoundedLanguage u;
            for (std::size_t k = 0; k < inner.size(); ++k) {
                if (mask >> k & 1) {
                    u.insert(inner[k].begin(), inner[k].end());
                }
            }
            out.insert(closure(u, bound));
        });
        return out;
    }
    }
    return {};
}

std::set<BoundedLanguage> xi_languages(const Word& w, std::size_t bound) {
    if (w.empty()) {
        return {{Word{}}};
    }
    std::map<std::pair<std::size_t, std::size_t>, std::set<BoundedLanguage>> memo;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> std::set<BoundedLanguage> {
        const auto key = std::make_pair(i, j);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        const auto whole = word_language(Word(w.begin() + i, w.begin() + j), bound);
        std::set<BoundedLanguage> out{whole, closure(whole, bound)};
        for (auto m = i + 1; m < j; ++m) {
            const auto left = self(self, i, m);
            const auto right = self(self, m, j);
            for (const auto& l1 : left) {
                for (const auto& l2 : right) {
                    auto both = concat(l1, l2, bound);
                    out.insert(closure(both, bound));
                    out.insert(std::move(both));
                }
            }
        }
        return memo[key] = std::move(out);
    };
    return rec(rec, 0, w.size());
}

bool reconstruct_check(const Regex& e, const Word& w, std::size_t bound) {
    if (bounded(e, w.size()).count(w) == 0) {
        throw PreconditionError("reconstruct_check needs a word of L(e)");
    }
    const auto contractions = kappa_languages(e, bound);
    for (const auto& lang : xi_languages(w, bound)) {
        if (contractions.count(lang) > 0) {
            return true;
        }
    }
    return false;
}

} // namespace cfsep::oracles
