#include <catch_amalgamated.hpp>

#include <algorithm>

#include "cfsep/automata.hh"
#include "cfsep/error.hh"
#include "cfsep/regex.hh"
#include "support.hh"

using namespace cfsep;
using testing::brute_nfa_words;
using testing::word;

namespace {

const Alphabet kAb{"a", "b"};

std::set<Word> filter(const std::set<Word>& a, const std::set<Word>& b, bool keep_common) {
    std::set<Word> out;
    for (const auto& w : a) {
        if ((b.count(w) > 0) == keep_common) {
            out.insert(w);
        }
    }
    return out;
}

} // namespace

TEST_CASE("add_transition validates states and labels") {
    Nfa a(kAb, 2);
    CHECK_THROWS_AS(a.add_transition(0, 0, 5), InputError);
    CHECK_THROWS_AS(a.add_transition(0, 7, 1), InputError);
    a.add_transition(0, 0, 1);
    a.add_transition(0, 0, 1);
    CHECK(a.num_transitions() == 1);
}

TEST_CASE("word automaton accepts exactly its word") {
    const auto w = word(kAb, "aab");
    const auto a = word_automaton(kAb, w);
    CHECK(brute_nfa_words(a, 4) == std::set<Word>{w});
    CHECK(a.num_states() == 4);
}

TEST_CASE("boolean operations agree with word-set semantics") {
    std::mt19937 rng(3);
    for (int k = 0; k < 120; ++k) {
        const auto a = testing::random_nfa(rng, kAb, 4);
        const auto b = testing::random_nfa(rng, kAb, 3);
        const auto la = brute_nfa_words(a, 5), lb = brute_nfa_words(b, 5);
        CHECK(brute_nfa_words(intersect(a, b), 5) == filter(la, lb, true));
        auto both = la;
        both.insert(lb.begin(), lb.end());
        CHECK(brute_nfa_words(unite(a, b), 5) == both);
        CHECK(brute_nfa_words(difference(a, b), 5) == filter(la, lb, false));
        CHECK(brute_nfa_words(remove_epsilon(a), 5) == la);
        CHECK(brute_nfa_words(determinize(a), 5) == la);
        CHECK(brute_nfa_words(minimize(a), 5) == la);
        CHECK(brute_nfa_words(trim(a), 5) == la);
        CHECK(bounded_language(a, 5) == la);
        CHECK(filter(testing::brute_nfa_words(complement(a), 5), la, true).empty());
        CHECK(is_empty(a) == la.empty());
    }
}

TEST_CASE("shortest witness is shortest then least") {
    std::mt19937 rng(17);
    for (int k = 0; k < 150; ++k) {
        const auto a = testing::random_nfa(rng, kAb, 4);
        const auto la = brute_nfa_words(a, 6);
        const auto w = shortest_witness(a);
        if (la.empty()) {
            // could still accept longer words only
            if (w) {
                CHECK(w->size() > 6);
            }
            continue;
        }
        REQUIRE(w);
        const auto best = *std::min_element(la.begin(), la.end(), [](const Word& x, const Word& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        CHECK(*w == best);
    }
}

TEST_CASE("regex compilation and equivalence") {
    CHECK(equivalent(regex_nfa("(a|b)*", kAb), regex_nfa("(a*b*)*", kAb)));
    CHECK(included(regex_nfa("a*b", kAb), regex_nfa("(a|b)*b", kAb)));
    CHECK_FALSE(included(regex_nfa("(a|b)*b", kAb), regex_nfa("a*b", kAb)));
    CHECK(brute_nfa_words(regex_nfa("∅", kAb), 3).empty());
    CHECK(brute_nfa_words(regex_nfa("ε", kAb), 3) == std::set<Word>{Word{}});
    CHECK(brute_nfa_words(regex_nfa("ab?", kAb), 3) ==
          std::set<Word>{word(kAb, "a"), word(kAb, "ab")});
}

TEST_CASE("difference merges alphabets") {
    const Alphabet a_only{"a"};
    const Alphabet ab{"a", "b"};
    const auto d = difference(regex_nfa("(a|b)*", ab), regex_nfa("a*", a_only));
    CHECK(d.alphabet().size() == 2);
    CHECK_FALSE(d.accepts(word(ab, "aa")));
    CHECK(d.accepts(word(ab, "ab")));
}

TEST_CASE("trim of a dead automaton is empty") {
    Nfa a(kAb, 3);
    a.add_transition(0, 0, 1);
    a.set_accepting(2);
    const auto t = trim(a);
    CHECK(is_empty(t));
    CHECK_FALSE(shortest_witness(t));
}

TEST_CASE("to_dot marks accepting states") {
    auto a = regex_nfa("ab", kAb);
    const auto dot = to_dot(trim(remove_epsilon(a)), "x");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
}
