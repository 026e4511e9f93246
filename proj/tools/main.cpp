#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using prefasp::cli::RunConfig;

    RunConfig cfg;
    CLI::App  app{"Answer sets and preferred answer sets of prioritized logic programs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--limit-rules", cfg.limit_rules, "Largest program for which all total orders are enumerated")
        ->check(CLI::PositiveNumber);
    app.add_option("--timeout", cfg.timeout, "Solver time limit in seconds")->check(CLI::PositiveNumber);
    app.add_flag("--explain", cfg.explain, "Print the FULL-ORDER rounds or the fixpoint stages");

    auto input = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "Program file, - for stdin"); };

    auto* solve = app.add_subcommand("solve", "Answer sets, or optimal answer sets if weak constraints are present");
    input(solve);

    auto* preferred = app.add_subcommand("preferred", "B-, W- or D-preferred answer sets");
    preferred->add_option("--semantics", cfg.semantics)->required()->check(CLI::IsMember({"b", "w", "d"}));
    input(preferred);

    auto* weak = app.add_subcommand("weak", "Weakly preferred answer sets with their preference violation degree");
    input(weak);

    auto* facts = app.add_subcommand("emit-facts", "Write the program as meta-level facts");
    input(facts);

    auto* meta = app.add_subcommand("meta", "Solve through the meta-interpreter");
    meta->add_option("--semantics", cfg.semantics)
        ->required()
        ->check(CLI::IsMember({"plain", "b", "bgraph", "w", "d", "weak"}));
    meta->add_flag("--raw", cfg.raw, "Also print the unprojected meta answer sets");
    meta->add_flag("--drop-redundant", cfg.drop_redundant, "Drop :- in_AS(X), not in_CP(X). from the B encoding");
    meta->add_option("--asset", cfg.assets, "Replace an embedded meta-program: NAME=PATH")->allow_extra_args(false);
    input(meta);

    auto* validate = app.add_subcommand("validate", "Compare native and meta results for all semantics");
    validate->add_option("--random", cfg.random, "Check N random programs instead of an input");
    validate->add_option("--seed", cfg.seed, "Seed for --random");
    validate->add_flag("--drop-redundant", cfg.drop_redundant);
    validate->add_option("--asset", cfg.assets, "Replace an embedded meta-program: NAME=PATH")->allow_extra_args(false);
    validate->add_option("input", cfg.input, "Program file or directory of .lp files, - for stdin");

    auto* grnd = app.add_subcommand("ground", "Instantiate a program with variables");
    input(grnd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : prefasp::cli::kInputError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return prefasp::cli::execute(cfg, std::cout, std::cerr);
}
