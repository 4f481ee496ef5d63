#include "cfsep/alphabet.hh"

#include <algorithm>
#include <cctype>

#include "cfsep/error.hh"

namespace cfsep {

Alphabet::Alphabet(const std::vector<std::string>& tokens) {
    for (const auto& token : tokens) {
        if (contains(token)) {
            throw InputError("duplicate token '" + token + "' in alphabet");
        }
        add(token);
    }
}

Alphabet::Alphabet(std::initializer_list<std::string_view> tokens) {
    for (auto token : tokens) {
        if (contains(token)) {
            throw InputError("duplicate token '" + std::string(token) + "' in alphabet");
        }
        add(token);
    }
}

Letter Alphabet::add(std::string_view token) {
    if (token.empty()) {
        throw InputError("alphabet tokens must be non-empty");
    }
    if (auto found = find(token)) {
        return *found;
    }
    auto letter = static_cast<Letter>(tokens_.size());
    tokens_.emplace_back(token);
    index_.emplace(tokens_.back(), letter);
    return letter;
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Letter Alphabet::at(std::string_view token) const {
    if (auto found = find(token)) {
        return *found;
    }
    throw InputError("symbol '" + std::string(token) + "' is not in the alphabet");
}

bool Alphabet::is_character_based() const {
    return std::all_of(tokens_.begin(), tokens_.end(),
                       [](const std::string& t) { return t.size() == 1; });
}

std::string Alphabet::render(const Word& word) const {
    std::string out;
    const bool compact = is_character_based();
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (!compact && k > 0) {
            out += ' ';
        }
        out += name(word[k]);
    }
    return out;
}

Word Alphabet::parse_word(std::string_view text) const {
    Word word;
    if (is_character_based()) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                continue;
            }
            word.push_back(at(std::string_view(&c, 1)));
        }
        return word;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            ++end;
        }
        if (end > pos) {
            word.push_back(at(text.substr(pos, end - pos)));
        }
        pos = end;
    }
    return word;
}

Alphabet Alphabet::merge(const Alphabet& a, const Alphabet& b) {
    Alphabet merged = a;
    for (const auto& token : b.tokens()) {
        merged.add(token);
    }
    return merged;
}

bool Alphabet::is_subset_of(const Alphabet& other) const {
    return std::all_of(tokens_.begin(), tokens_.end(),
                       [&](const std::string& t) { return other.contains(t); });
}

std::vector<Letter> letter_mapping(const Alphabet& from, const Alphabet& to) {
    std::vector<Letter> mapping;
    mapping.reserve(from.size());
    for (const auto& token : from.tokens()) {
        mapping.push_back(to.at(token));
    }
    return mapping;
}

} // namespace cfsep
