#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfsep/alphabet.hh"

namespace cfsep {

using Nonterminal = std::uint32_t;

/// A grammar symbol: either a terminal (letter of the grammar's alphabet) or
/// a nonterminal (dense index into the grammar's variable table).
struct Symbol {
    enum class Kind : std::uint8_t { terminal, nonterminal };

    Kind kind = Kind::terminal;
    std::uint32_t id = 0;

    static constexpr Symbol terminal(Letter letter) { return {Kind::terminal, letter}; }
    static constexpr Symbol nonterminal(Nonterminal var) { return {Kind::nonterminal, var}; }

    constexpr bool is_terminal() const { return kind == Kind::terminal; }
    constexpr bool is_nonterminal() const { return kind == Kind::nonterminal; }

    auto operator<=>(const Symbol&) const = default;
};

struct Production {
    Nonterminal lhs = 0;
    std::vector<Symbol> rhs;

    auto operator<=>(const Production&) const = default;
};

/// Context-free grammar <V, Sigma, P, S>. Immutable once constructed; the
/// constructor rejects productions referring to undeclared symbols.
/// Unreachable or unproductive variables are kept as given.
class Cfg {
public:
    Cfg(Alphabet terminals, std::vector<std::string> variables,
        std::vector<Production> productions, Nonterminal start);

    const Alphabet& terminals() const { return terminals_; }
    std::size_t num_variables() const { return variables_.size(); }
    const std::string& variable_name(Nonterminal var) const { return variables_.at(var); }
    const std::vector<std::string>& variable_names() const { return variables_; }
    std::span<const Production> productions() const { return productions_; }
    Nonterminal start() const { return start_; }

    /// Indices into productions(), grouped by left-hand side.
    std::span<const std::size_t> productions_of(Nonterminal var) const {
        return by_lhs_.at(var);
    }

    /// Variable with the given name, if declared.
    std::optional<Nonterminal> find_variable(std::string_view name) const;

    /// Same grammar over a larger alphabet; terminal letters are remapped.
    Cfg with_alphabet(const Alphabet& superset) const;

    /// Human-readable listing, one line per variable.
    std::string to_string() const;

private:
    Alphabet terminals_;
    std::vector<std::string> variables_;
    std::vector<Production> productions_;
    Nonterminal start_;
    std::vector<std::vector<std::size_t>> by_lhs_;
};

/// Partition of the variables into mutually recursive classes.
struct SccPartition {
    std::vector<std::vector<Nonterminal>> blocks;
    std::vector<std::size_t> index;      ///< variable -> block id
    std::vector<bool> recursive;         ///< block has a cycle (size > 1 or self-reference)

    std::size_t block_of(Nonterminal var) const { return index.at(var); }
};

/// True if every production has one of the shapes A->BC, A->a, A->B, A->eps.
bool is_normal_form(const Cfg& g);

/// Rewrites `g` into normal form (A->BC | a | B | eps). Productions already in
/// normal form are kept verbatim; terminals inside longer right-hand sides
/// are wrapped in one fresh variable per terminal and long right-hand sides
/// are split right-recursively. Fresh variables are named "<origin>.<k>".
Cfg normalize(const Cfg& g);

/// Mutually recursive classes of the variable reference graph, in
/// topological order of the condensation (callers before callees).
SccPartition sccs(const Cfg& g);

/// Variables deriving the empty word.
std::vector<bool> nullable_variables(const Cfg& g);

/// Variables deriving at least one terminal word.
std::vector<bool> productive_variables(const Cfg& g);

/// Optional pass dropping variables that are unreachable from the start
/// symbol or unproductive. The start symbol is always kept.
Cfg prune(const Cfg& g);

/// Chart-based membership test. Throws InputError if `w` uses letters
/// outside the grammar's alphabet.
bool member(const Cfg& g, const Word& w);

/// Membership test with the normalization done once up front.
class Recognizer {
public:
    explicit Recognizer(const Cfg& g);

    bool accepts(const Word& w) const;
    const Cfg& grammar() const { return normal_; }

private:
    struct Binary {
        Nonterminal lhs, left, right;
    };

    Cfg normal_;
    std::vector<bool> nullable_;
    std::vector<std::vector<Nonterminal>> by_letter_;   ///< letter -> A with A->a
    std::vector<std::vector<Nonterminal>> unit_parents_; ///< B -> A with A =>1 B
    std::vector<Binary> binary_;
};

/// All words of L(g) of length at most `max_len`.
std::set<Word> enumerate_words(const Cfg& g, std::size_t max_len);

} // namespace cfsep
