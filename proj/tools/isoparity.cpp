#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "isoparity/corpus.hpp"
#include "isoparity/errors.hpp"
#include "isoparity/run.hpp"

namespace {

std::optional<isoparity::Int> parse_int(const std::string& s) {
    try {
        return isoparity::Int(s);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace isoparity;

    CLI::App app{"place-by-place parity identities for rational p-isogenies"};
    app.require_subcommand(1);

    std::string corpus_path, label, curve, prime_s, d_s;
    std::string format = "table";
    long good_sample = 5;
    long pmax = 0;
    unsigned long long seed = 0;

    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "check w = symbol * sigma at every place for each corpus entry");
    verify->add_option("--corpus", corpus_path, "JSONL corpus file")->required();
    format_opt(verify);
    verify->add_option("--good-sample", good_sample, "extra good places per entry");
    verify->add_option("--seed", seed, "seed for the good-place sample");

    CLI::App* local = app.add_subcommand(
        "local", "reduction data and local root number of one curve at one prime");
    local->add_option("--curve", curve, "a-invariants a1,a2,a3,a4,a6")->required();
    local->add_option("--prime", prime_s, "rational prime")->required();
    format_opt(local);

    CLI::App* character = app.add_subcommand(
        "character", "reconstruct the kernel character of one corpus entry");
    character->add_option("--corpus", corpus_path, "JSONL corpus file")->required();
    character->add_option("--label", label, "entry label")->required();
    format_opt(character);

    CLI::App* twist = app.add_subcommand(
        "twist", "re-verify one corpus entry after a quadratic twist");
    twist->add_option("--corpus", corpus_path, "JSONL corpus file")->required();
    twist->add_option("--label", label, "entry label")->required();
    twist->add_option("--d", d_s, "twist parameter (nonzero nonsquare integer)")->required();
    format_opt(twist);

    CLI::App* grid = app.add_subcommand(
        "case-grid", "verify the symbolic local-case identities for all p <= pmax");
    grid->add_option("--pmax", pmax, "largest prime to include")->required();
    format_opt(grid);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    RunConfig cfg;
    cfg.format = format;
    cfg.good_place_sample = good_sample;
    cfg.seed = seed;

    try {
        if (verify->parsed()) {
            return cmd_verify(load_corpus(corpus_path), cfg, std::cout);
        }
        if (local->parsed()) {
            std::optional<Int> ell = parse_int(prime_s);
            if (!ell) {
                std::cerr << "error: --prime: not an integer: " << prime_s << "\n";
                return 2;
            }
            return cmd_local(curve, *ell, cfg, std::cout);
        }
        if (character->parsed()) {
            return cmd_character(load_corpus(corpus_path), label, cfg, std::cout);
        }
        if (twist->parsed()) {
            std::optional<Int> d = parse_int(d_s);
            if (!d) {
                std::cerr << "error: --d: not an integer: " << d_s << "\n";
                return 2;
            }
            return cmd_twist(load_corpus(corpus_path), label, *d, cfg, std::cout);
        }
        if (grid->parsed()) {
            return cmd_case_grid(pmax, cfg, std::cout);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
