#include "credal/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>

using namespace credal::cli;

int main(int argc, char** argv) {
    CLI::App app{"Optimal decisions under lower previsions"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "print elapsed time on stderr");

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
    const std::map<std::string, Side> sides{{"lower", Side::Lower}, {"upper", Side::Upper}, {"both", Side::Both}};

    std::string file;
    Format format = Format::Text;

    auto* check = app.add_subcommand("check", "check for sure loss and report coherence gaps");
    check->add_option("file", file, "problem file")->required();
    check->add_option("--format", format, "text|json")->transform(CLI::CheckedTransformer(formats));

    std::string gamble;
    Side side = Side::Both;
    auto* extend = app.add_subcommand("extend", "natural extension of one gamble");
    extend->add_option("file", file, "problem file")->required();
    extend->add_option("--gamble", gamble, "JSON object mapping states to numbers")->required();
    extend->add_option("--side", side, "lower|upper|both")->transform(CLI::CheckedTransformer(sides));
    extend->add_option("--format", format, "text|json")->transform(CLI::CheckedTransformer(formats));

    OptimalOptions opts;
    std::string mu;
    auto* optimal = app.add_subcommand("optimal", "optimal decision sets");
    optimal->add_option("file", file, "problem file")->required();
    optimal->add_option("--criterion", opts.criterion,
                        "admissible|meu|maximin|maximax|maximality|intervaldominance|eadmissibility|all")
        ->required();
    optimal->add_option("--mu", mu, "probability vector (JSON object or array)");
    optimal->add_flag("--prefilter", opts.prefilter, "drop interval-dominated decisions first");
    optimal->add_flag("--witness", opts.witness, "print certificates");
    optimal->add_option("--format", opts.format, "text|json")->transform(CLI::CheckedTransformer(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_code::flag_misuse;
    }

    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    if (*check) {
        result = cmd_check(file, format);
    } else if (*extend) {
        result = cmd_extend(file, gamble, side, format);
    } else {
        if (optimal->count("--mu") > 0) opts.mu_json = mu;
        result = cmd_optimal(file, opts);
    }
    std::cout << result.out;
    std::cerr << result.err;
    if (timing) {
        const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << "elapsed: " << us.count() / 1000.0 << " ms\n";
    }
    return result.exit_code;
}
