#include <catch_amalgamated.hpp>

#include "cfsep/error.hh"
#include "cfsep/grammar.hh"
#include "support.hh"

using namespace cfsep;
using testing::grammar;
using testing::word;

TEST_CASE("constructor rejects undeclared symbols") {
    const Alphabet ab{"a", "b"};
    CHECK_THROWS_AS(Cfg(ab, {"S"}, {{0, {Symbol::nonterminal(1)}}}, 0), InputError);
    CHECK_THROWS_AS(Cfg(ab, {"S"}, {{0, {Symbol::terminal(2)}}}, 0), InputError);
    CHECK_THROWS_AS(Cfg(ab, {"S"}, {}, 1), InputError);
    CHECK_THROWS_AS(Cfg(ab, {"S", "S"}, {}, 0), InputError);
}

TEST_CASE("normal form detection") {
    CHECK(is_normal_form(grammar(R"(start S; S -> A B | "a" | A | ; A -> "a"; B -> "b";)")));
    CHECK_FALSE(is_normal_form(grammar(R"(start S; S -> "a" S "b" | ;)")));
    CHECK_FALSE(is_normal_form(grammar(R"(start S; S -> "a" S;)")));
}

TEST_CASE("normalize keeps the language of the palindrome grammar") {
    const auto g = grammar(R"(start A; A -> "a" A "a" | "b" A "b" | "a" | "b" | ;)");
    const auto n = normalize(g);
    REQUIRE(is_normal_form(n));
    CHECK(n.variable_name(n.start()) == "A");
    CHECK(testing::brute_words(n, 6) == testing::brute_words(g, 6));
    for (const char* w : {"", "a", "abba", "babab", "aa"}) {
        CHECK(member(g, word(g.terminals(), w)));
    }
    for (const char* w : {"ab", "abb", "aab"}) {
        CHECK_FALSE(member(g, word(g.terminals(), w)));
    }
}

TEST_CASE("normalize preserves random grammars") {
    std::mt19937 rng(11);
    for (int k = 0; k < 150; ++k) {
        const auto g = testing::random_cfg(rng);
        const auto n = normalize(g);
        REQUIRE(is_normal_form(n));
        CHECK(testing::brute_words(n, 5) == testing::brute_words(g, 5));
    }
}

TEST_CASE("member and enumerate_words agree with the fixpoint oracle") {
    std::mt19937 rng(5);
    for (int k = 0; k < 200; ++k) {
        const auto g = testing::random_cfg(rng);
        const auto expected = testing::brute_words(g, 5);
        CHECK(enumerate_words(g, 5) == expected);
        const Recognizer r(g);
        for (const auto& w : testing::all_words(2, 5)) {
            CHECK(r.accepts(w) == (expected.count(w) > 0));
        }
    }
}

TEST_CASE("member rejects letters outside the alphabet") {
    const auto g = grammar(R"(start S; S -> "a";)");
    CHECK_THROWS_AS(member(g, Word{3}), InputError);
}

TEST_CASE("sccs groups mutually recursive variables callers first") {
    const auto g = grammar(R"(
        start S;
        S -> A "x" | B;
        A -> "a" B | "a";
        B -> A "b";
        C -> "c" C;
        D -> "d";
    )");
    const auto part = sccs(g);
    const auto s = *g.find_variable("S"), a = *g.find_variable("A"), b = *g.find_variable("B"),
               c = *g.find_variable("C"), d = *g.find_variable("D");
    CHECK(part.block_of(a) == part.block_of(b));
    CHECK(part.block_of(s) != part.block_of(a));
    CHECK(part.block_of(s) < part.block_of(a));
    CHECK(part.recursive[part.block_of(a)]);
    CHECK(part.recursive[part.block_of(c)]);
    CHECK_FALSE(part.recursive[part.block_of(s)]);
    CHECK_FALSE(part.recursive[part.block_of(d)]);
    std::size_t total = 0;
    for (const auto& block : part.blocks) {
        total += block.size();
    }
    CHECK(total == g.num_variables());
}

TEST_CASE("nullable and productive variables") {
    const auto g = grammar(R"(
        start S;
        S -> A B | L;
        A -> ;
        B -> A A | "b";
        L -> L "a";
    )");
    const auto nullable = nullable_variables(g);
    const auto productive = productive_variables(g);
    CHECK(nullable[*g.find_variable("S")]);
    CHECK(nullable[*g.find_variable("B")]);
    CHECK_FALSE(nullable[*g.find_variable("L")]);
    CHECK_FALSE(productive[*g.find_variable("L")]);
    CHECK(productive[*g.find_variable("S")]);
}

TEST_CASE("prune drops useless variables but not the language") {
    const auto g = grammar(R"(
        start S;
        S -> "a" S | U | ;
        U -> U "b";
        R -> "r";
    )");
    const auto p = prune(g);
    CHECK(p.num_variables() == 1);
    CHECK(p.terminals() == g.terminals());
    CHECK(testing::brute_words(p, 5) == testing::brute_words(g, 5));
}

TEST_CASE("with_alphabet remaps terminals by token") {
    const auto g = grammar(R"(start S; S -> "b" S | "a";)");
    const Alphabet bigger{"c", "a", "b"};
    const auto h = g.with_alphabet(bigger);
    CHECK(member(h, word(bigger, "bba")));
    CHECK_FALSE(member(h, word(bigger, "c")));
}
