#include <catch_amalgamated.hpp>

#include <filesystem>

#include "cfsep/error.hh"
#include "cfsep/grammar_file.hh"
#include "support.hh"

using namespace cfsep;

namespace {

ParseError parse_error(std::string_view text) {
    try {
        parse_grammar_file(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    return ParseError(0, 0, "");
}

// Words up to length 5 as strings, independent of letter numbering.
std::set<std::string> rendered(const Cfg& g) {
    std::set<std::string> out;
    for (const auto& w : testing::brute_words(g, 5)) {
        out.insert(g.terminals().render(w));
    }
    return out;
}

} // namespace

TEST_CASE("parses grammars with comments and epsilon alternatives") {
    const auto gs = parse_grammar_file(R"(
        # two grammars
        grammar Even {
            start S;   // trailing comment
            S -> "a" S "a" | ;
        }
        grammar Tok {
            start E;
            E -> "id" | E "+" "id";
        }
    )");
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].name == "Even");
    const auto& even = gs[0].grammar;
    CHECK(even.terminals() == Alphabet{"a"});
    CHECK(member(even, Word{0, 0}));
    CHECK(member(even, Word{}));
    CHECK_FALSE(member(even, Word{0}));
    const auto& tok = gs[1].grammar;
    CHECK(tok.terminals() == Alphabet{"id", "+"});
    CHECK(member(tok, tok.terminals().parse_word("id + id")));
}

TEST_CASE("variables and terminals keep first appearance order") {
    const auto gs = parse_grammar_file(R"(grammar G { start S; B -> "y"; S -> B "x" | A; A -> "x"; })");
    const auto& g = gs.at(0).grammar;
    CHECK(g.variable_name(0) == "B");
    CHECK(g.variable_name(1) == "S");
    CHECK(g.variable_name(g.start()) == "S");
    CHECK(g.terminals() == Alphabet{"y", "x"});
}

TEST_CASE("escapes and primes") {
    const auto gs = parse_grammar_file(R"(grammar G { start S'; S' -> "\"" "\\" X.1; X.1 -> ; })");
    const auto& g = gs.at(0).grammar;
    CHECK(g.terminals() == Alphabet{"\"", "\\"});
    CHECK(g.find_variable("X.1"));
}

TEST_CASE("error positions") {
    struct Case {
        const char* text;
        std::size_t line, column;
        const char* message;
    };
    const std::vector<Case> cases{
        {"", 1, 1, "no grammars"},
        {"grammar G { start S; S -> T; }", 1, 27, "undeclared nonterminal 'T'"},
        {"grammar G {\n  S -> \"a\";\n}", 3, 1, "has no start declaration"},
        {"grammar G { start S; start S; S -> ; }", 1, 22, "start symbol declared twice"},
        {"grammar G { start S; S -> \"\"; }", 1, 27, "empty terminal"},
        {"grammar G { start S; S -> \"a; }", 1, 27, "unterminated string"},
        {"grammar G { start S; S -> \"a\" @; }", 1, 31, "unexpected character '@'"},
        {"grammar G { start S; S -> ; }\ngrammar G { start S; S -> ; }", 2, 9,
         "duplicate grammar name"},
        {"gramar G {}", 1, 1, "expected 'grammar'"},
        {"grammar G { start S; S -> \"a\" }", 1, 31, "expected"},
        {"grammar G { start T; S -> ; }", 1, 19, "start symbol"},
    };
    for (const auto& c : cases) {
        INFO(c.text);
        const auto e = parse_error(c.text);
        CHECK(e.line() == c.line);
        CHECK(e.column() == c.column);
        CHECK_THAT(e.message(), Catch::Matchers::ContainsSubstring(c.message));
    }
}

TEST_CASE("columns count characters, not bytes") {
    const auto e = parse_error("grammar G { start S; S -> \"ε\" @; }");
    CHECK(e.column() == 31);
}

TEST_CASE("render round-trips") {
    std::mt19937 rng(9);
    for (int k = 0; k < 40; ++k) {
        const auto g = testing::random_cfg(rng);
        const auto text = render_grammar_file({{"R" + std::to_string(k), g}});
        const auto back = parse_grammar_file(text);
        REQUIRE(back.size() == 1);
        CHECK(back[0].name == "R" + std::to_string(k));
        CHECK(rendered(back[0].grammar) == rendered(g));
    }
}

TEST_CASE("all fixtures load") {
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(CFSEP_FIXTURES_DIR)) {
        INFO(entry.path().string());
        const auto gs = load_grammar_file(entry.path().string());
        CHECK_FALSE(gs.empty());
        ++files;
    }
    CHECK(files >= 20);
    CHECK_THROWS_AS(load_grammar_file("/nonexistent/file.cfg"), InputError);
}
