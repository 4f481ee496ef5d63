#include <catch_amalgamated.hpp>

#include <algorithm>

#include "cfsep/error.hh"
#include "cfsep/oracles.hh"
#include "cfsep/regex.hh"
#include "support.hh"

using namespace cfsep;
using namespace cfsep::oracles;

namespace {

const Alphabet kAbc{"a", "b", "c"};

Regex re(std::string_view text) {
    return parse_regex(text, kAbc);
}

std::set<BoundedLanguage> languages(const RegexSet& set, std::size_t bound = kDefaultBound) {
    std::set<BoundedLanguage> out;
    for (const auto& e : set) {
        out.insert(bounded(e, bound));
    }
    return out;
}

std::set<BoundedLanguage> languages(std::initializer_list<const char*> texts) {
    std::set<BoundedLanguage> out;
    for (const char* t : texts) {
        out.insert(bounded(re(t)));
    }
    return out;
}

// A random word of L(e), by walking the expression.
Word sample(std::mt19937& rng, const Regex& e) {
    switch (e.kind) {
    case Regex::Kind::letter:
        return {e.letter};
    case Regex::Kind::concat: {
        Word out;
        for (const auto& c : e.children) {
            const auto part = sample(rng, c);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    case Regex::Kind::star: {
        Word out;
        const int reps = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int r = 0; r < reps; ++r) {
            const auto part = sample(rng, e.children.front());
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    default:
        return {};
    }
}

} // namespace

TEST_CASE("union-free detection") {
    CHECK(is_union_free(re("ab*c*")));
    CHECK(is_union_free(re("(ab*)*")));
    CHECK_FALSE(is_union_free(re("a|b")));
    CHECK_FALSE(is_union_free(re("∅")));
    CHECK_THROWS_AS(kappa(re("a|b")), InputError);
}

TEST_CASE("star-contraction examples") {
    CHECK(kappa(re("a")) == RegexSet{re("a")});
    CHECK(languages(kappa(re("ab*c*"))) == languages({"a", "ab*", "ac*", "ab*c*"}));
    const auto starred = dedup_by_language(kappa(re("(ab*c*)*")));
    CHECK(starred.size() == 6);
    CHECK(languages(starred) ==
          languages({"ε", "a*", "(ab*)*", "(ac*)*", "(ab*|ac*)*", "(ab*c*)*"}));
    CHECK(kappa_languages(re("(ab*c*)*")) == languages(starred));
}

TEST_CASE("star-generalization examples") {
    CHECK(xi(Word{}) == RegexSet{Regex::epsilon()});
    CHECK(languages(xi(Word{0})) == languages({"a", "a*"}));
    const auto ab = languages(xi(Word{0, 1}));
    for (const char* e : {"ab", "(ab)*", "a*b", "ab*", "a*b*", "(a*b)*", "(ab*)*", "(a*b*)*"}) {
        CHECK(ab.count(bounded(re(e))) == 1);
    }
    CHECK(ab.size() == 8);
    CHECK(xi_languages(Word{0, 1}) == ab);
    CHECK_THROWS_AS(xi(Word(6, 0)), InputError);
}

TEST_CASE("bounded languages agree with compiled automata") {
    std::mt19937 rng(31);
    for (int k = 0; k < 150; ++k) {
        const auto e = testing::random_union_free(rng, 3, 3);
        CHECK(bounded(e, 5) == testing::brute_nfa_words(compile(e, kAbc), 5));
    }
    const auto with_alt = re("(a|bc)*c?");
    CHECK(bounded(with_alt, 5) == testing::brute_nfa_words(compile(with_alt, kAbc), 5));
}

TEST_CASE("star-contraction properties on random expressions") {
    std::mt19937 rng(7);
    for (int k = 0; k < 150; ++k) {
        const auto e = testing::random_union_free(rng, 2, 3);
        const auto whole = bounded(e);
        const auto parts = kappa_languages(e);
        CHECK_FALSE(parts.empty());
        BoundedLanguage covered;
        for (const auto& p : parts) {
            CHECK(std::includes(whole.begin(), whole.end(), p.begin(), p.end()));
            covered.insert(p.begin(), p.end());
        }
        CHECK(covered == whole);
    }
}

TEST_CASE("structural and language-level contractions agree") {
    std::mt19937 rng(13);
    for (int k = 0; k < 80; ++k) {
        const auto e = testing::random_union_free(rng, 2, 2);
        CHECK(languages(kappa(e)) == kappa_languages(e));
    }
}

TEST_CASE("star-generalizations contain their word and {w} is the least one") {
    std::mt19937 rng(19);
    for (int k = 0; k < 60; ++k) {
        const auto w = testing::random_word(rng, 2, 4);
        const auto set = xi(w);
        CHECK(languages(set) == xi_languages(w));
        const BoundedLanguage just{w};
        CHECK(std::find(set.begin(), set.end(), Regex::concat([&] {
                            std::vector<Regex> parts;
                            for (auto x : w) {
                                parts.push_back(Regex::symbol(x));
                            }
                            return parts;
                        }())) != set.end());
        for (const auto& e : set) {
            const auto lang = bounded(e);
            CHECK(lang.count(w) == 1);
            CHECK(std::includes(lang.begin(), lang.end(), just.begin(), just.end()));
        }
    }
}

TEST_CASE("reconstruct examples") {
    CHECK(reconstruct_check(re("a*"), Word{0, 0}));
    CHECK(reconstruct_check(re("(ab*c*)*"), Word{0, 1, 2}));
    CHECK_THROWS_AS(reconstruct_check(re("a*"), Word{1}), PreconditionError);
}

TEST_CASE("reconstruct holds for random union-free expressions") {
    std::mt19937 rng(101);
    int checked = 0;
    for (int k = 0; k < 2000 && checked < 200; ++k) {
        const auto e = testing::random_union_free(rng, 2, 3);
        const auto w = sample(rng, e);
        if (w.size() > 5) {
            continue;
        }
        ++checked;
        CHECK(reconstruct_check(e, w));
    }
    CHECK(checked == 200);
}
