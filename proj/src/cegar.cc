#include "cfsep/cegar.hh"

#include <array>
#include <future>

#include "cfsep/approximation.hh"
#include "cfsep/automata.hh"
#include "cfsep/error.hh"
#include "cfsep/prestar.hh"

namespace cfsep {

namespace {

constexpr std::array<std::string_view, 2> kAbstractionNames{"sigma-star", "nederhof"};
constexpr std::array<std::string_view, 4> kStrategyNames{"greedy-star", "greedy-eps",
                                                         "max-star", "max-eps"};

Nfa generalize(Generalizer& gen, Strategy s, const Word& w, std::size_t budget) {
    switch (s) {
    case Strategy::greedy_star:
        return gen_language(gen.star(w), gen.grammar().terminals());
    case Strategy::greedy_eps:
        return gen.eps(w);
    case Strategy::max_star:
        return gen.max_star(w, budget);
    case Strategy::max_eps:
        return gen.max_eps(w, budget);
    }
    return gen.eps(w);
}

} // namespace

std::string_view to_string(Abstraction a) {
    return kAbstractionNames[static_cast<std::size_t>(a)];
}

std::string_view to_string(Strategy s) {
    return kStrategyNames[static_cast<std::size_t>(s)];
}

std::optional<Abstraction> parse_abstraction(std::string_view text) {
    for (std::size_t k = 0; k < kAbstractionNames.size(); ++k) {
        if (kAbstractionNames[k] == text) {
            return static_cast<Abstraction>(k);
        }
    }
    return std::nullopt;
}

std::optional<Strategy> parse_strategy(std::string_view text) {
    for (std::size_t k = 0; k < kStrategyNames.size(); ++k) {
        if (kStrategyNames[k] == text) {
            return static_cast<Strategy>(k);
        }
    }
    return std::nullopt;
}

std::string_view to_string(Verdict::Reason r) {
    switch (r) {
    case Verdict::Reason::iterations: return "iterations";
    case Verdict::Reason::budget: return "budget";
    case Verdict::Reason::timeout: return "timeout";
    }
    return "iterations";
}

std::vector<Cfg> share_alphabet(const std::vector<Cfg>& grammars) {
    Alphabet shared;
    for (const auto& g : grammars) {
        shared = Alphabet::merge(shared, g.terminals());
    }
    std::vector<Cfg> out;
    out.reserve(grammars.size());
    for (const auto& g : grammars) {
        out.push_back(g.with_alphabet(shared));
    }
    return out;
}

Nfa initial_approximation(const Cfg& g, Abstraction abstraction) {
    if (abstraction == Abstraction::sigma_star) {
        return sigma_star(g.terminals());
    }
    return trim(remove_epsilon(nederhof(g)));
}

Verdict check_disjoint(const std::vector<Cfg>& input, const Config& config,
                       const Observer& observer) {
    if (input.size() < 2) {
        throw InputError("a separability query needs at least two grammars");
    }
    if (config.max_refinements == 0) {
        throw InputError("max_refinements must be at least 1");
    }
    const auto grammars = share_alphabet(input);
    const auto k = grammars.size();

    Verdict v;
    v.alphabet = grammars.front().terminals();
    std::vector<Recognizer> recognizers;
    std::vector<Generalizer> generalizers;
    for (const auto& g : grammars) {
        recognizers.emplace_back(g);
        generalizers.emplace_back(g, config.eps_order);
        v.approximations.push_back(initial_approximation(g, config.abstraction));
    }

    while (true) {
        v.witness = shortest_witness(intersect_all(v.approximations));
        if (observer) {
            IterationInfo info{v.iterations, &v.approximations, v.witness};
            if (!observer(info) && v.witness) {
                v.kind = Verdict::Kind::unknown;
                v.reason = Verdict::Reason::timeout;
                return v;
            }
        }
        if (!v.witness) {
            v.kind = Verdict::Kind::separable;
            return v;
        }
        const Word& w = *v.witness;
        std::vector<std::size_t> outside;
        for (std::size_t i = 0; i < k; ++i) {
            if (!recognizers[i].accepts(w)) {
                outside.push_back(i);
            }
        }
        if (outside.empty()) {
            v.kind = Verdict::Kind::overlap;
            return v;
        }
        if (v.iterations == config.max_refinements) {
            v.kind = Verdict::Kind::unknown;
            v.reason = Verdict::Reason::iterations;
            return v;
        }

        std::vector<Nfa> refined(outside.size(), empty_automaton(v.alphabet));
        try {
            auto refine = [&](std::size_t slot) {
                const auto i = outside[slot];
                const Nfa gen = generalize(generalizers[i], config.strategy, w, config.maxgen_budget);
                refined[slot] = refine_approx(v.approximations[i], gen);
            };
            if (config.parallel && outside.size() > 1) {
                std::vector<std::future<void>> jobs;
                for (std::size_t s = 0; s < outside.size(); ++s) {
                    jobs.push_back(std::async(std::launch::async, refine, s));
                }
                for (auto& job : jobs) {
                    job.wait();
                }
                for (auto& job : jobs) {
                    job.get();
                }
            } else {
                for (std::size_t s = 0; s < outside.size(); ++s) {
                    refine(s);
                }
            }
        } catch (const BudgetExceeded&) {
            v.kind = Verdict::Kind::unknown;
            v.reason = Verdict::Reason::budget;
            return v;
        }
        for (std::size_t s = 0; s < outside.size(); ++s) {
            v.approximations[outside[s]] = std::move(refined[s]);
        }
        ++v.iterations;
    }
}

std::vector<bool> classify_witness(const Word& w, const std::vector<Cfg>& grammars) {
    std::vector<bool> out;
    out.reserve(grammars.size());
    for (const auto& g : grammars) {
        bool in = false;
        try {
            in = member(g, w);
        } catch (const InputError&) {
            in = false;  // uses a letter the grammar never mentions
        }
        out.push_back(in);
    }
    return out;
}

std::optional<std::string> validate_verdict(const Verdict& v, const std::vector<Cfg>& input) {
    const auto grammars = share_alphabet(input);
    switch (v.kind) {
    case Verdict::Kind::unknown:
        return std::nullopt;
    case Verdict::Kind::overlap: {
        if (!v.witness) {
            return "overlap verdict without a witness";
        }
        const auto in = classify_witness(*v.witness, grammars);
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (!in[i]) {
                return "witness is not a word of grammar " + std::to_string(i);
            }
        }
        return std::nullopt;
    }
    case Verdict::Kind::separable:
        break;
    }
    if (v.approximations.size() != grammars.size()) {
        return "separable verdict has the wrong number of approximations";
    }
    if (!is_empty(intersect_all(v.approximations))) {
        return "approximations still intersect";
    }
    for (std::size_t i = 0; i < grammars.size(); ++i) {
        const Nfa a = v.approximations[i].with_alphabet(grammars[i].terminals());
        if (intersects(grammars[i], complement(a))) {
            return "approximation " + std::to_string(i) + " misses words of its grammar";
        }
    }
    return std::nullopt;
}

} // namespace cfsep
