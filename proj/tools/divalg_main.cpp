#include <CLI11.hpp>

#include <iostream>

#include "divalg/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact crossed-product division algebras: classifier, embeddings, involutions"};
    app.require_subcommand(1);
    app.fallthrough();

    divalg::CliOptions options;
    app.add_option("--format", options.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--seed", options.seed, "Seed for the randomized suites")
        ->capture_default_str();
    app.add_option("--precision", options.precision, "Decimal digits for numeric embeddings")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    app.add_option("--samples", options.samples, "Randomized-suite size for verify")
        ->check(CLI::Range(1, 10000))
        ->capture_default_str();

    long p_max = 100, m_max = 6, alpha_max = 4;
    CLI::App* cmd_classify = app.add_subcommand("classify", "Realizability classifier table");
    cmd_classify->add_option("--p-max", p_max)->capture_default_str();
    cmd_classify->add_option("--m-max", m_max)->capture_default_str();
    cmd_classify->add_option("--alpha-max", alpha_max)->capture_default_str();

    long p = 5, m = 1, alpha = 1;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Embedding and involution suite");
    cmd_verify->add_option("--p", p)->required();
    cmd_verify->add_option("--m", m)->capture_default_str();
    cmd_verify->add_option("--alpha", alpha)->capture_default_str();
    cmd_verify->add_flag("--emit-tables", options.emit_tables,
                         "Include multiplication tables in the JSON results");

    long pp = 5, pm = 1, palpha = 1;
    CLI::App* cmd_profile = app.add_subcommand("profile", "Local invariant profile");
    cmd_profile->add_option("--p", pp)->required();
    cmd_profile->add_option("--m", pm)->capture_default_str();
    cmd_profile->add_option("--alpha", palpha)->capture_default_str();

    long hp = 5;
    CLI::App* cmd_hermitian = app.add_subcommand("hermitian", "Reference-form invariants");
    cmd_hermitian->add_option("--p", hp)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        divalg::Envelope env;
        if (cmd_classify->parsed())
            env = divalg::run_classify(p_max, m_max, alpha_max, options);
        else if (cmd_verify->parsed())
            env = divalg::run_verify(p, m, alpha, options);
        else if (cmd_profile->parsed())
            env = divalg::run_profile(pp, pm, palpha, options);
        else
            env = divalg::run_hermitian(hp, options);
        std::cout << env.rendered;
        return env.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
