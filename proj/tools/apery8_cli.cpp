// Command line front end: `apery8 verify` re-runs the full derivation checks,
// `apery8 show` prints the underlying objects. Exit codes: 0 all checks pass,
// 1 a check failed or a computation broke down, 2 bad usage.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "apery8/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"independent checker for the level-8 Apery limit derivation"};
    app.set_version_flag("--version", "apery8 1.0.0");
    app.require_subcommand(1);

    apery8::RunConfig cfg;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "run the identity and limit checks");
    verify->add_option("--order", cfg.order, "q-expansion truncation order")
        ->capture_default_str();
    verify->add_option("--prec", cfg.prec, "working precision, decimal digits")
        ->capture_default_str();
    verify->add_option("--nmax", cfg.n_max, "sequence and continuant depth")
        ->capture_default_str();
    verify->add_option("--suite", cfg.suites, "restrict to a suite, repeatable")
        ->check(CLI::IsMember({"exact", "numeric", "limit", "pcf"}));
    verify->add_flag("--json", verify_json, "machine-readable report");

    apery8::ShowRequest req;
    CLI::App* show = app.add_subcommand("show", "print series, sequences, ratios or constants");
    show->add_option("what", req.what, "qexp | sequence | ratio | constants")->required();
    show->add_option("args", req.args, "target-specific arguments");
    show->add_option("--prec", req.prec, "decimal digits for numeric output")
        ->capture_default_str();
    show->add_flag("--json", req.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help, --version
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            apery8::Report rep = apery8::run_verification(cfg);
            std::cout << (verify_json ? rep.to_json() : rep.to_text());
            return rep.pass ? 0 : 1;
        }
        std::cout << apery8::run_show(req);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
