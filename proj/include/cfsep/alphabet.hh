#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cfsep {

/// Index of a terminal token inside an Alphabet.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Ordered set of terminal tokens. Tokens are arbitrary non-empty strings;
/// declaration order defines the letter order used for tie-breaking.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(const std::vector<std::string>& tokens);
    Alphabet(std::initializer_list<std::string_view> tokens);

    /// Returns the letter of `token`, appending it if absent.
    Letter add(std::string_view token);

    std::optional<Letter> find(std::string_view token) const;
    /// Like find(), but throws InputError for unknown tokens.
    Letter at(std::string_view token) const;
    bool contains(std::string_view token) const { return find(token).has_value(); }

    const std::string& name(Letter letter) const { return tokens_.at(letter); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }

    /// True when every token is exactly one character long.
    bool is_character_based() const;

    /// Renders a word: tokens concatenated when the alphabet is character
    /// based, otherwise separated by single spaces.
    std::string render(const Word& word) const;
    /// Inverse of render().
    Word parse_word(std::string_view text) const;

    /// Tokens of `a` followed by the tokens of `b` not already in `a`.
    static Alphabet merge(const Alphabet& a, const Alphabet& b);
    /// True if every token of this alphabet occurs in `other`.
    bool is_subset_of(const Alphabet& other) const;

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Letter> index_;
};

/// Maps letters of `from` to the letters with the same token in `to`.
/// Every token of `from` must occur in `to`.
std::vector<Letter> letter_mapping(const Alphabet& from, const Alphabet& to);

} // namespace cfsep
