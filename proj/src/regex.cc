#include "cfsep/regex.hh"

#include <algorithm>

#include "cfsep/error.hh"

namespace cfsep {

Regex Regex::concat(std::vector<Regex> parts) {
    if (parts.empty()) {
        return epsilon();
    }
    if (parts.size() == 1) {
        return std::move(parts.front());
    }
    return {Kind::concat, 0, std::move(parts)};
}

Regex Regex::alt(std::vector<Regex> parts) {
    if (parts.empty()) {
        return empty();
    }
    if (parts.size() == 1) {
        return std::move(parts.front());
    }
    return {Kind::alt, 0, std::move(parts)};
}

Regex Regex::star(Regex inner) {
    return {Kind::star, 0, {std::move(inner)}};
}

std::strong_ordering Regex::operator<=>(const Regex& other) const {
    if (auto c = kind <=> other.kind; c != 0) {
        return c;
    }
    if (auto c = letter <=> other.letter; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(children.begin(), children.end(),
                                                  other.children.begin(), other.children.end());
}

bool Regex::operator==(const Regex& other) const {
    return (*this <=> other) == 0;
}

namespace {

struct Fragment {
    State in, out;
};

Fragment build(const Regex& re, Nfa& a) {
    const State in = a.add_state();
    const State out = a.add_state();
    switch (re.kind) {
    case Regex::Kind::empty:
        break;
    case Regex::Kind::epsilon:
        a.add_transition(in, kEpsilon, out);
        break;
    case Regex::Kind::letter:
        a.add_transition(in, re.letter, out);
        break;
    case Regex::Kind::concat: {
        State cur = in;
        for (const auto& child : re.children) {
            auto f = build(child, a);
            a.add_transition(cur, kEpsilon, f.in);
            cur = f.out;
        }
        a.add_transition(cur, kEpsilon, out);
        break;
    }
    case Regex::Kind::alt:
        for (const auto& child : re.children) {
            auto f = build(child, a);
            a.add_transition(in, kEpsilon, f.in);
            a.add_transition(f.out, kEpsilon, out);
        }
        break;
    case Regex::Kind::star: {
        auto f = build(re.children.front(), a);
        a.add_transition(in, kEpsilon, out);
        a.add_transition(in, kEpsilon, f.in);
        a.add_transition(f.out, kEpsilon, f.in);
        a.add_transition(f.out, kEpsilon, out);
        break;
    }
    }
    return {in, out};
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    Regex parse() {
        Regex re = alternation();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return re;
    }

private:
    Regex alternation() {
        std::vector<Regex> parts{sequence()};
        while (eat('|')) {
            parts.push_back(sequence());
        }
        return Regex::alt(std::move(parts));
    }

    Regex sequence() {
        std::vector<Regex> parts;
        for (;;) {
            skip_space();
            if (pos_ == text_.size() || text_[pos_] == '|' || text_[pos_] == ')') {
                break;
            }
            parts.push_back(postfix());
        }
        return Regex::concat(std::move(parts));
    }

    Regex postfix() {
        Regex re = atom();
        for (;;) {
            if (eat('*')) {
                re = Regex::star(std::move(re));
            } else if (eat('+')) {
                re = Regex::concat({re, Regex::star(re)});
            } else if (eat('?')) {
                re = Regex::alt({std::move(re), Regex::epsilon()});
            } else {
                return re;
            }
        }
    }

    Regex atom() {
        if (eat('(')) {
            Regex re = alternation();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return re;
        }
        if (eat_text("ε") || eat('_')) {
            return Regex::epsilon();
        }
        if (eat_text("∅")) {
            return Regex::empty();
        }
        auto letter = alphabet_.find(text_.substr(pos_, 1));
        if (!letter) {
            fail("unknown symbol '" + std::string(1, text_[pos_]) + "'");
        }
        ++pos_;
        return Regex::symbol(*letter);
    }

    void skip_space() {
        while (pos_ < text_.size() && text_[pos_] == ' ') {
            ++pos_;
        }
    }
    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat_text(std::string_view s) {
        if (text_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("regex '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

void print(const Regex& re, const Alphabet& alphabet, int context, std::string& out) {
    // context: 0 = alternation, 1 = sequence, 2 = operand of a star
    switch (re.kind) {
    case Regex::Kind::empty:
        out += "∅";
        return;
    case Regex::Kind::epsilon:
        out += "ε";
        return;
    case Regex::Kind::letter:
        out += alphabet.name(re.letter);
        return;
    case Regex::Kind::star:
        print(re.children.front(), alphabet, 2, out);
        out += '*';
        return;
    case Regex::Kind::concat:
    case Regex::Kind::alt: {
        const bool alt = re.kind == Regex::Kind::alt;
        const bool paren = alt ? context > 0 : context > 1;
        if (paren) {
            out += '(';
        }
        for (std::size_t k = 0; k < re.children.size(); ++k) {
            if (alt && k > 0) {
                out += '|';
            }
            print(re.children[k], alphabet, alt ? 0 : 1, out);
        }
        if (paren) {
            out += ')';
        }
        return;
    }
    }
}

} // namespace

Nfa compile(const Regex& re, const Alphabet& alphabet) {
    Nfa a(alphabet, 1);
    auto f = build(re, a);
    a.add_transition(0, kEpsilon, f.in);
    a.set_accepting(f.out);
    return a;
}

std::string to_string(const Regex& re, const Alphabet& alphabet) {
    std::string out;
    print(re, alphabet, 0, out);
    return out;
}

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
    return Parser(text, alphabet).parse();
}

Nfa regex_nfa(std::string_view text, const Alphabet& alphabet) {
    return compile(parse_regex(text, alphabet), alphabet);
}

} // namespace cfsep
