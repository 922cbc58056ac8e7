#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torb/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"invariants, splitting, and equivalence decisions for "
                 "4-dimensional toric orbifold models"};
    app.require_subcommand(1);
    app.fallthrough();

    torb::cli::Options opt;
    std::int64_t budget = 1000000;
    app.add_option("--depth", opt.depth, "word-length bound for the GL(n,Z) search ball")
        ->capture_default_str();
    app.add_option("--budget", budget, "candidate cap for oracle searches")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed (reserved for randomized tooling)")
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string fan_path;
    std::string split_path;
    std::string equiv_a, equiv_b;
    std::string oracle_kind;
    std::vector<std::string> oracle_files;

    CLI::App* analyze = app.add_subcommand("analyze", "report the invariants of a fan");
    analyze->add_option("fan", fan_path, "fan JSON file")->required();

    CLI::App* split = app.add_subcommand(
        "split", "decide the odd-torsion Moore-summand splitting of a triple");
    split->add_option("triple", split_path, "triple JSON file")->required();

    CLI::App* equiv = app.add_subcommand(
        "equiv", "decide cohomology-ring equivalence of two triples");
    equiv->add_option("first", equiv_a, "triple JSON file")->required();
    equiv->add_option("second", equiv_b, "triple JSON file")->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "exhaustive cross-check of split or equiv");
    oracle->add_option("kind", oracle_kind, "split or equiv")
        ->required()
        ->check(CLI::IsMember({"split", "equiv"}));
    oracle->add_option("files", oracle_files, "triple JSON files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }
    opt.budget = torb::Int(budget);

    if (analyze->parsed())
        return torb::cli::cmd_analyze(fan_path, opt, std::cout, std::cerr);
    if (split->parsed())
        return torb::cli::cmd_split(split_path, opt, std::cout, std::cerr);
    if (equiv->parsed())
        return torb::cli::cmd_equiv(equiv_a, equiv_b, opt, std::cout, std::cerr);
    return torb::cli::cmd_oracle(oracle_kind, oracle_files, opt, std::cout, std::cerr);
}
