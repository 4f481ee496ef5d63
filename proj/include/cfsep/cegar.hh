#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfsep/grammar.hh"
#include "cfsep/nfa.hh"
#include "cfsep/refinement.hh"

namespace cfsep {

enum class Abstraction { sigma_star, nederhof };
enum class Strategy { greedy_star, greedy_eps, max_star, max_eps };

std::string_view to_string(Abstraction a);
std::string_view to_string(Strategy s);
std::optional<Abstraction> parse_abstraction(std::string_view text);
std::optional<Strategy> parse_strategy(std::string_view text);

struct Config {
    Abstraction abstraction = Abstraction::nederhof;
    Strategy strategy = Strategy::greedy_eps;
    EpsOrder eps_order = EpsOrder::forward_first;
    std::size_t max_refinements = 100;
    std::size_t maxgen_budget = kDefaultMaxgenBudget;
    /// Run the generalizations of one iteration on separate threads.
    bool parallel = false;
};

/// State of the loop after an iteration, handed to Observer.
struct IterationInfo {
    std::size_t iteration = 0;  ///< refinements done so far
    const std::vector<Nfa>* approximations = nullptr;
    std::optional<Word> witness;  ///< empty once the product is empty
};

/// Called after the approximations are built and after every refinement.
/// Returning false stops the loop with Unknown{timeout}.
using Observer = std::function<bool(const IterationInfo&)>;

struct Verdict {
    enum class Kind { separable, overlap, unknown };
    enum class Reason { iterations, budget, timeout };

    Kind kind = Kind::unknown;
    Reason reason = Reason::iterations;  ///< meaningful for unknown only
    std::size_t iterations = 0;           ///< refinement steps performed
    std::vector<Nfa> approximations;      ///< final approximations, one per grammar
    std::optional<Word> witness;          ///< set for overlap
    Alphabet alphabet;                    ///< shared alphabet of the query
};

std::string_view to_string(Verdict::Reason r);

/// Grammars remapped onto the union of their alphabets.
std::vector<Cfg> share_alphabet(const std::vector<Cfg>& grammars);

/// Initial over-approximation of `g` over its own alphabet.
Nfa initial_approximation(const Cfg& g, Abstraction abstraction);

/// Regular separability by abstraction refinement. Throws InputError for
/// fewer than two grammars or max_refinements == 0.
Verdict check_disjoint(const std::vector<Cfg>& grammars, const Config& config,
                       const Observer& observer = {});

/// Component i tells whether w is in L(grammars[i]).
std::vector<bool> classify_witness(const Word& w, const std::vector<Cfg>& grammars);

/// Re-checks a verdict from scratch: a separable verdict needs an empty
/// product and approximations containing their grammars, an overlap needs
/// the witness in every grammar. Unknown verdicts pass trivially. Returns
/// a description of the first failure.
std::optional<std::string> validate_verdict(const Verdict& v, const std::vector<Cfg>& grammars);

} // namespace cfsep
