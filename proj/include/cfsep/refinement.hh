#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "cfsep/grammar.hh"
#include "cfsep/nfa.hh"
#include "cfsep/regex.hh"

namespace cfsep {

/// Star range (i, j): the segment w[i, j) may repeat unboundedly.
struct Range {
    std::size_t i = 0;
    std::size_t j = 0;

    auto operator<=>(const Range&) const = default;
};

/// Ranges overlap without one containing the other.
inline bool crossing(Range a, Range b) {
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

/// Word plus a set of pairwise nested-or-disjoint star ranges.
struct StarGeneralization {
    Word word;
    std::vector<Range> ranges;  ///< kept sorted
};

/// Throws InputError if some range is out of bounds, empty, or crosses another.
void check_well_formed(const StarGeneralization& sg);

Regex gen_regex(const StarGeneralization& sg);
/// Automaton for L(<w, S>); nested ranges star the already starred segment.
Nfa gen_language(const StarGeneralization& sg, const Alphabet& alphabet);

/// All ranges (i, j) with 0 <= i < j <= n, by span j - i, then by i.
std::vector<Range> star_candidates(std::size_t n);
/// Which family of epsilon-generalization edges is tried first.
enum class EpsOrder { forward_first, backward_first };

/// Forward ε-edges (q_i, q_j), i < j, by (span, i), and backward edges
/// (q_{j-1}, w_j, q_i), i < j, by (span, j); families ordered by `order`.
std::vector<Transition> eps_candidates(const Word& w,
                                       EpsOrder order = EpsOrder::forward_first);

/// Default cap on recursive calls of the maximum generalizations.
inline constexpr std::size_t kDefaultMaxgenBudget = 1'000'000;

/// Counterexample generalization against one grammar. The grammar is
/// normalized once; every disjointness test runs pre* on the normalized
/// grammar. Calls that generalize a word of L(g) throw PreconditionError.
class Generalizer {
public:
    explicit Generalizer(const Cfg& g, EpsOrder order = EpsOrder::forward_first);

    /// Greedy star-generalization. `limit` caps the number of candidates
    /// examined (the loop may stop early and stay sound).
    StarGeneralization star(const Word& w, std::optional<std::size_t> limit = {});
    /// Greedy epsilon-generalization.
    Nfa eps(const Word& w, std::optional<std::size_t> limit = {});
    /// Union of all valid star-generalizations. Throws BudgetExceeded.
    Nfa max_star(const Word& w, std::size_t budget = kDefaultMaxgenBudget);
    /// Union of all valid epsilon-generalizations. Throws BudgetExceeded.
    Nfa max_eps(const Word& w, std::size_t budget = kDefaultMaxgenBudget);

    /// True if L(<w, S>) avoids L(g).
    bool disjoint(const StarGeneralization& sg);

    /// Disjointness tests performed by the most recent call.
    std::size_t tests() const { return tests_; }
    const Cfg& grammar() const { return normal_; }

private:
    void require_outside(const Word& w);

    Cfg normal_;
    EpsOrder order_;
    std::size_t tests_ = 0;
};

StarGeneralization star_generalize(const Word& w, const Cfg& g);
Nfa eps_generalize(const Word& w, const Cfg& g);
Nfa max_star_generalize(const Cfg& g, const Word& w,
                        std::size_t budget = kDefaultMaxgenBudget);
Nfa max_eps_generalize(const Cfg& g, const Word& w,
                       std::size_t budget = kDefaultMaxgenBudget);

/// L(a) \ L(gen), trimmed.
Nfa refine_approx(const Nfa& a, const Nfa& gen);

} // namespace cfsep
