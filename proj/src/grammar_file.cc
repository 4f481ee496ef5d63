#include "cfsep/grammar_file.hh"

#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "cfsep/error.hh"

namespace cfsep {

namespace {

enum class Tok { ident, string, lbrace, rbrace, semi, arrow, bar, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'' || c == '.';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        const auto line = line_, col = col_;
        if (pos_ >= text_.size()) {
            return {Tok::end, "", line, col};
        }
        const char c = text_[pos_];
        if (ident_start(c)) {
            const auto begin = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) {
                advance();
            }
            return {Tok::ident, std::string(text_.substr(begin, pos_ - begin)), line, col};
        }
        if (c == '"') {
            return string_literal(line, col);
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            advance();
            advance();
            return {Tok::arrow, "->", line, col};
        }
        advance();
        switch (c) {
        case '{': return {Tok::lbrace, "{", line, col};
        case '}': return {Tok::rbrace, "}", line, col};
        case ';': return {Tok::semi, ";", line, col};
        case '|': return {Tok::bar, "|", line, col};
        default: break;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    Token string_literal(std::size_t line, std::size_t col) {
        advance();
        std::string out;
        while (true) {
            if (pos_ >= text_.size() || text_[pos_] == '\n') {
                throw ParseError(line, col, "unterminated string");
            }
            char c = text_[pos_];
            advance();
            if (c == '"') {
                break;
            }
            if (c == '\\') {
                if (pos_ >= text_.size() || (text_[pos_] != '"' && text_[pos_] != '\\')) {
                    throw ParseError(line_, col_, "unknown escape in string");
                }
                c = text_[pos_];
                advance();
            }
            out.push_back(c);
        }
        if (out.empty()) {
            throw ParseError(line, col, "empty terminal; write ε as an empty alternative");
        }
        return {Tok::string, std::move(out), line, col};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// Right-hand side symbol before variable resolution.
struct RawSymbol {
    bool terminal;
    std::string text;
    std::size_t line, column;
};

struct RawRule {
    std::string lhs;
    std::vector<RawSymbol> rhs;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) { shift(); shift(); }

    std::vector<NamedGrammar> file() {
        std::vector<NamedGrammar> out;
        std::unordered_set<std::string> names;
        while (cur_.kind != Tok::end) {
            const Token kw = expect(Tok::ident, "'grammar'");
            if (kw.text != "grammar") {
                throw ParseError(kw.line, kw.column, "expected 'grammar', found '" + kw.text + "'");
            }
            const Token name = expect(Tok::ident, "grammar name");
            if (!names.insert(name.text).second) {
                throw ParseError(name.line, name.column,
                                 "duplicate grammar name '" + name.text + "'");
            }
            out.push_back({name.text, body(name)});
        }
        if (out.empty()) {
            throw ParseError(cur_.line, cur_.column, "no grammars");
        }
        return out;
    }

private:
    void shift() {
        cur_ = std::move(peek_);
        peek_ = lex_.next();
    }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) {
            const auto found = cur_.kind == Tok::end ? std::string("end of input")
                                                     : "'" + cur_.text + "'";
            throw ParseError(cur_.line, cur_.column, "expected " + what + ", found " + found);
        }
        Token t = cur_;
        shift();
        return t;
    }

    Cfg body(const Token& name) {
        expect(Tok::lbrace, "'{'");
        std::optional<Token> start;
        std::vector<RawRule> rules;
        std::vector<std::string> order;
        std::map<std::string, std::size_t> index;
        while (cur_.kind != Tok::rbrace) {
            const Token head = expect(Tok::ident, "a rule or 'start'");
            if (head.text == "start" && cur_.kind == Tok::ident) {
                if (start) {
                    throw ParseError(head.line, head.column, "start symbol declared twice");
                }
                start = expect(Tok::ident, "start symbol");
                expect(Tok::semi, "';'");
                continue;
            }
            expect(Tok::arrow, "'->'");
            if (index.try_emplace(head.text, order.size()).second) {
                order.push_back(head.text);
            }
            while (true) {
                RawRule rule{head.text, {}};
                while (cur_.kind == Tok::ident || cur_.kind == Tok::string) {
                    rule.rhs.push_back({cur_.kind == Tok::string, cur_.text, cur_.line, cur_.column});
                    shift();
                }
                rules.push_back(std::move(rule));
                if (cur_.kind == Tok::bar) {
                    shift();
                    continue;
                }
                expect(Tok::semi, "'|' or ';'");
                break;
            }
        }
        const Token close = expect(Tok::rbrace, "'}'");
        if (!start) {
            throw ParseError(close.line, close.column,
                             "grammar '" + name.text + "' has no start declaration");
        }
        const auto s = index.find(start->text);
        if (s == index.end()) {
            throw ParseError(start->line, start->column,
                             "start symbol '" + start->text + "' has no rules");
        }

        Alphabet terminals;
        for (const auto& r : rules) {
            for (const auto& x : r.rhs) {
                if (x.terminal) {
                    terminals.add(x.text);
                }
            }
        }
        std::vector<Production> productions;
        for (const auto& r : rules) {
            Production p{static_cast<Nonterminal>(index.at(r.lhs)), {}};
            for (const auto& x : r.rhs) {
                if (x.terminal) {
                    p.rhs.push_back(Symbol::terminal(terminals.at(x.text)));
                    continue;
                }
                const auto it = index.find(x.text);
                if (it == index.end()) {
                    throw ParseError(x.line, x.column, "undeclared nonterminal '" + x.text + "'");
                }
                p.rhs.push_back(Symbol::nonterminal(static_cast<Nonterminal>(it->second)));
            }
            productions.push_back(std::move(p));
        }
        return Cfg(std::move(terminals), std::move(order), std::move(productions),
                   static_cast<Nonterminal>(s->second));
    }

    Lexer lex_;
    Token cur_{Tok::end, "", 1, 1};
    Token peek_{Tok::end, "", 1, 1};
};

std::string quote(const std::string& token) {
    std::string out = "\"";
    for (char c : token) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out + "\"";
}

bool plain_identifier(const std::string& name) {
    if (name.empty() || !ident_start(name.front())) {
        return false;
    }
    for (char c : name) {
        if (!ident_char(c)) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<NamedGrammar> parse_grammar_file(std::string_view text) {
    return Parser(text).file();
}

std::vector<NamedGrammar> load_grammar_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_grammar_file(buf.str());
}

std::string render_grammar_file(const std::vector<NamedGrammar>& grammars) {
    std::ostringstream out;
    for (std::size_t k = 0; k < grammars.size(); ++k) {
        const auto& [name, g] = grammars[k];
        if (k > 0) {
            out << "\n";
        }
        for (const auto& v : g.variable_names()) {
            if (!plain_identifier(v)) {
                throw InputError("variable name '" + v + "' cannot be written to a grammar file");
            }
        }
        out << "grammar " << name << " {\n";
        out << "  start " << g.variable_name(g.start()) << ";\n";
        for (Nonterminal v = 0; v < g.num_variables(); ++v) {
            const auto prods = g.productions_of(v);
            if (prods.empty()) {
                continue;
            }
            out << "  " << g.variable_name(v) << " ->";
            for (std::size_t i = 0; i < prods.size(); ++i) {
                if (i > 0) {
                    out << " |";
                }
                for (auto s : g.productions()[prods[i]].rhs) {
                    out << " "
                        << (s.is_terminal() ? quote(g.terminals().name(s.id))
                                            : g.variable_name(s.id));
                }
            }
            out << ";\n";
        }
        out << "}\n";
    }
    return out.str();
}

} // namespace cfsep
