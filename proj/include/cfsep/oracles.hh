#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "cfsep/alphabet.hh"
#include "cfsep/regex.hh"

// Brute-force reference constructions for star-contraction and
// star-generalization sets. Everything here is exponential and meant for
// words and expressions of a handful of symbols.
namespace cfsep::oracles {

/// Finite set of expressions, sorted and structurally deduplicated.
using RegexSet = std::vector<Regex>;
/// The words of a language up to some length.
using BoundedLanguage = std::set<Word>;

inline constexpr std::size_t kDefaultBound = 6;
/// Longest word accepted by xi().
inline constexpr std::size_t kMaxXiWord = 5;

/// Literals, concatenation and star only.
bool is_union_free(const Regex& e);

/// Concatenation that flattens nested concatenations and drops ε factors.
Regex join(const Regex& a, const Regex& b);

/// Star-contraction. Throws InputError if `e` is not union-free or a
/// starred subterm has too many contractions to enumerate its subsets.
RegexSet kappa(const Regex& e);

/// Star-generalizations of `w`. Throws InputError if |w| > max_word.
RegexSet xi(const Word& w, std::size_t max_word = kMaxXiWord);

/// Words of L(e) up to length `bound`, computed directly on word sets.
BoundedLanguage bounded(const Regex& e, std::size_t bound = kDefaultBound);

/// Keeps the first expression of each bounded language.
RegexSet dedup_by_language(const RegexSet& set, std::size_t bound = kDefaultBound);

/// Bounded languages of kappa(e), deduplicated at every level so that
/// nested stars stay enumerable.
std::set<BoundedLanguage> kappa_languages(const Regex& e, std::size_t bound = kDefaultBound);

/// Bounded languages of xi(w), deduplicated at every level.
std::set<BoundedLanguage> xi_languages(const Word& w, std::size_t bound = kDefaultBound);

/// Some member of kappa(e) has the same bounded language as some member
/// of xi(w). Throws PreconditionError if w is not in L(e).
bool reconstruct_check(const Regex& e, const Word& w, std::size_t bound = kDefaultBound);

} // namespace cfsep::oracles
