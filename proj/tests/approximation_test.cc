#include <catch_amalgamated.hpp>

#include <algorithm>

#include "cfsep/approximation.hh"
#include "cfsep/automata.hh"
#include "cfsep/error.hh"
#include "cfsep/regex.hh"
#include "support.hh"

using namespace cfsep;
using testing::grammar;

namespace {

std::set<std::string> rules(const Cfg& g) {
    std::set<std::string> out;
    for (const auto& p : g.productions()) {
        std::string line = g.variable_name(p.lhs) + " ->";
        for (auto s : p.rhs) {
            line += " " + (s.is_terminal() ? g.terminals().name(s.id) : g.variable_name(s.id));
        }
        out.insert(line);
    }
    return out;
}

bool subset(const std::set<Word>& a, const std::set<Word>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_CASE("strongly regular transform of a^n c b^n") {
    const auto g = grammar(R"(start A; A -> "a" A "b" | "c";)");
    CHECK_FALSE(is_strongly_regular(g));
    const auto sr = strongly_regular(g);
    CHECK(is_strongly_regular(sr));
    CHECK(rules(sr) == std::set<std::string>{"A -> a A", "A -> c A'", "A' ->", "A' -> b A'"});
}

TEST_CASE("nederhof of a^n c b^n is a*cb*") {
    const auto g = grammar(R"(start A; A -> "a" A "b" | "c";)");
    const auto a = nederhof(g);
    CHECK(equivalent(a, regex_nfa("a*cb*", g.terminals())));
}

TEST_CASE("strongly regular grammars are approximated exactly") {
    const auto left = grammar(R"(start S; S -> S "a" | S "b" "b" | "b";)");
    const auto right = grammar(R"(start S; S -> "a" T | ; T -> "b" S | "b";)");
    for (const auto& g : {left, right}) {
        CHECK(is_strongly_regular(g));
        CHECK(strongly_regular(g).num_variables() == g.num_variables());
        CHECK(testing::brute_nfa_words(nederhof(g), 6) == testing::brute_words(g, 6));
    }
}

TEST_CASE("block classification") {
    const auto g = grammar(R"(
        start S;
        S -> L R;
        L -> L "a" | "b";
        R -> "a" R | "b";
    )");
    const auto part = sccs(g);
    const auto cls = classify_blocks(g, part);
    CHECK(cls[part.block_of(*g.find_variable("L"))] == SccClass::left);
    CHECK(cls[part.block_of(*g.find_variable("R"))] == SccClass::right);
    CHECK(cls[part.block_of(*g.find_variable("S"))] == SccClass::cyclic);

    const auto both = grammar(R"(start S; S -> "a" S "b" | ;)");
    CHECK_THROWS_AS(classify_blocks(both, sccs(both)), InputError);
    CHECK_THROWS_AS(make_fa(both, sccs(both)), InputError);
}

TEST_CASE("mutually recursive blocks") {
    const auto g = grammar(R"(
        start S;
        S -> "a" T | "c";
        T -> S "b";
    )");
    const auto a = nederhof(g);
    CHECK(subset(testing::brute_words(g, 7), testing::brute_nfa_words(a, 7)));
    CHECK(equivalent(a, regex_nfa("a*cb*", g.terminals())));
}

TEST_CASE("nederhof over-approximates random grammars") {
    std::mt19937 rng(23);
    for (int k = 0; k < 200; ++k) {
        const auto g = testing::random_cfg(rng);
        const auto a = nederhof(g);
        INFO(g.to_string());
        CHECK(subset(testing::brute_words(g, 5), testing::brute_nfa_words(a, 5)));
        if (is_strongly_regular(g)) {
            CHECK(testing::brute_nfa_words(a, 5) == testing::brute_words(g, 5));
        }
    }
}

TEST_CASE("sigma star accepts everything") {
    const Alphabet abc{"a", "b", "c"};
    CHECK(testing::brute_nfa_words(sigma_star(abc), 3).size() == 40);
}
