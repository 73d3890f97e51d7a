#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qap/cli.h"

int main(int argc, char **argv) {
    using qap::cli::Format;
    CLI::App app{"Quotient algebra partitions of su(2^p)"};
    app.require_subcommand(1);
    app.fallthrough();

    qap::cli::RunConfig cfg;
    std::string out_path;
    std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--p", cfg.p, "Number of qubits");
    app.add_option("--format", cfg.format, "text|json|csv")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--seed", cfg.seed, "Seed for randomized audits");
    app.add_option("--out", out_path, "Write output to this file");
    app.add_option("--n", cfg.n, "Trials for randomized audits");

    struct Sub {
        const char *name;
        const char *help;
        bool label;
    };
    const Sub subs[] = {
        {"count", "Cartan subalgebra counts by kind", false},
        {"enumerate", "Export the atlas as JSON lines", false},
        {"table", "Quotient algebra table for a label", true},
        {"qap", "Labeled cells and closure report", true},
        {"coqa", "Co-quotient re-pairing around a cell", true},
        {"verify", "Closure check over the atlas", false},
        {"oracle", "Exact matrix oracle self-test", false},
        {"classify", "Local equivalence classes", false},
        {"connect", "Randomized Q = E P R audit", false},
        {"lift", "Local lift of a label to kind p", true},
    };
    for (const auto &s : subs) {
        auto *sc = app.add_subcommand(s.name, s.help);
        if (s.label) {
            sc->add_option("label", cfg.label, "Cartan label, e.g. C^{110}_{[001,100]}")->required();
        }
        if (std::string(s.name) == "coqa") {
            sc->add_option("--cell", cfg.cell, "Center cell B:<index>/eps:<0|1>");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    auto res = qap::cli::run(command, cfg);
    if (!out_path.empty() && res.exit_code != 2) {
        std::ofstream f(out_path);
        f << res.output;
    } else {
        (res.exit_code == 2 ? std::cerr : std::cout) << res.output;
    }
    return res.exit_code;
}
