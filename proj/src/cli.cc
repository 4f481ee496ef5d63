#include "cfsep/cli.hh"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>

#include "cfsep/automata.hh"
#include "cfsep/cegar.hh"
#include "cfsep/error.hh"
#include "cfsep/grammar_file.hh"

namespace cfsep {

namespace {

struct RunOptions {
    std::string file;
    std::string abstraction = "nederhof";
    std::string strategy = "greedy-eps";
    std::string eps_order = "forward-first";
    std::size_t max_refinements = 100;
    double timeout = 60;
    std::string dump_dir;
    bool validate = false;
};

void dump(const std::filesystem::path& dir, const IterationInfo& info,
          const std::vector<NamedGrammar>& grammars) {
    for (std::size_t i = 0; i < grammars.size(); ++i) {
        const auto file = dir / ("iter" + std::to_string(info.iteration) + "_" +
                                 grammars[i].name + ".dot");
        std::ofstream out(file);
        if (!out) {
            throw InputError("cannot write '" + file.string() + "'");
        }
        out << to_dot((*info.approximations)[i], grammars[i].name);
    }
}

int run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    Config config;
    const auto abstraction = parse_abstraction(opts.abstraction);
    const auto strategy = parse_strategy(opts.strategy);
    if (!abstraction || !strategy) {
        err << "error: unknown " << (abstraction ? "refinement" : "abstraction") << " '"
            << (abstraction ? opts.strategy : opts.abstraction) << "'\n";
        return kExitUsage;
    }
    config.abstraction = *abstraction;
    config.strategy = *strategy;
    config.max_refinements = opts.max_refinements;
    config.eps_order =
        opts.eps_order == "backward-first" ? EpsOrder::backward_first : EpsOrder::forward_first;

    std::vector<NamedGrammar> named;
    try {
        named = load_grammar_file(opts.file);
    } catch (const ParseError& e) {
        err << opts.file << ":" << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (named.size() < 2) {
        err << opts.file << ": a separability query needs at least two grammars\n";
        return kExitUsage;
    }
    std::vector<Cfg> grammars;
    for (const auto& n : named) {
        grammars.push_back(n.grammar);
    }

    if (!opts.dump_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(opts.dump_dir, ec);
        if (ec) {
            err << "error: cannot create '" << opts.dump_dir << "': " << ec.message() << "\n";
            return kExitUsage;
        }
    }

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(opts.timeout));
    Observer observer = [&](const IterationInfo& info) {
        if (!opts.dump_dir.empty()) {
            dump(opts.dump_dir, info, named);
        }
        return std::chrono::steady_clock::now() < deadline;
    };

    Verdict v;
    try {
        v = check_disjoint(grammars, config, observer);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (opts.validate) {
        if (const auto problem = validate_verdict(v, grammars)) {
            err << "internal error: verdict failed validation: " << *problem << "\n";
            return kExitValidation;
        }
    }

    switch (v.kind) {
    case Verdict::Kind::separable:
        out << "VERDICT: SEPARABLE\n";
        break;
    case Verdict::Kind::overlap:
        out << "VERDICT: OVERLAP witness=\"" << v.alphabet.render(*v.witness) << "\"\n";
        break;
    case Verdict::Kind::unknown:
        out << "VERDICT: UNKNOWN reason=" << to_string(v.reason) << "\n";
        break;
    }
    out << "iterations=" << v.iterations << "\n";
    switch (v.kind) {
    case Verdict::Kind::separable: return kExitSeparable;
    case Verdict::Kind::overlap: return kExitOverlap;
    case Verdict::Kind::unknown: break;
    }
    return kExitUnknown;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regular separability of context-free languages", "cfsep"};
    app.require_subcommand(1);
    RunOptions opts;
    auto* cmd = app.add_subcommand("run", "Decide whether the grammars of FILE are separable");
    cmd->add_option("file", opts.file, "Grammar file")->required();
    cmd->add_option("--abstraction", opts.abstraction, "sigma-star or nederhof")
        ->check(CLI::IsMember({"sigma-star", "nederhof"}));
    cmd->add_option("--refine", opts.strategy, "greedy-star, greedy-eps, max-star or max-eps")
        ->check(CLI::IsMember({"greedy-star", "greedy-eps", "max-star", "max-eps"}));
    cmd->add_option("--eps-order", opts.eps_order,
                    "Edge family tried first by epsilon refinement")
        ->check(CLI::IsMember({"forward-first", "backward-first"}));
    cmd->add_option("--max-refinements", opts.max_refinements, "Refinement cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--timeout", opts.timeout, "Wall-clock budget in seconds")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--dump-approx", opts.dump_dir, "Write DOT files of each iteration here");
    cmd->add_flag("--validate", opts.validate, "Re-check the verdict independently");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return run(opts, out, err);
}

} // namespace cfsep
