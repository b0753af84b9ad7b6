#include <fstream>

#include <CLI11.hpp>

#include "qks/cli.hpp"

int main(int argc, char** argv) {
    qks::RunConfig cfg;
    std::string output;

    CLI::App app{"Exact verification suites for quantum-curve basis constructions"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("-f,--format", cfg.format, "Output format: json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("-o,--output", output, "Write the report to a file instead of stdout");
    };

    CLI::App* verify = app.add_subcommand("verify", "Run the operator-pair suite for one model");
    verify->add_option("-m,--model", cfg.model, "Model selector, e.g. hurwitz, mv:r=1, coni:a=0")
        ->required();
    verify->add_option("-N,--order", cfg.N, "Certified tail order of the series window");
    verify->add_option("--jmax", cfg.j_max, "Highest basis index exercised");
    verify->add_option("--kmax", cfg.k_max, "Highest power of the first operator");
    verify->add_option("--lmax", cfg.l_max, "Highest power of the second operator");
    add_format(verify);

    CLI::App* tau = app.add_subcommand("tau", "Print tau-function coefficients by partition");
    tau->add_option("-m,--model", cfg.model, "Model selector");
    tau->add_option("--dmax", cfg.d_max, "Highest grade");
    add_format(tau);

    CLI::App* wave = app.add_subcommand("wave", "Print the wave function at zero times");
    wave->add_option("-m,--model", cfg.model, "Model selector");
    auto* wave_order = wave->add_option("-N,--order", cfg.N, "Series order (default 8)");
    add_format(wave);

    CLI::App* oracle = app.add_subcommand("oracle", "Compare tau coefficients with direct counts");
    oracle->add_option("--dmax", cfg.d_max, "Highest partition size");
    oracle->add_option("--bmax", cfg.b_max, "Highest transposition count");
    add_format(oracle);

    CLI::App* bf = app.add_subcommand("bf-check", "Cross-check the fermionic dictionary");
    bf->add_option("--dmax", cfg.d_max, "Highest state grade");
    add_format(bf);

    CLI::App* ids = app.add_subcommand("identities", "Verify the product expansion identities");
    add_format(ids);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (CLI::App* sub : {verify, tau, wave, oracle, bf, ids})
        if (app.got_subcommand(sub)) cfg.command = sub->get_name();
    if (app.got_subcommand(wave) && wave_order->count() == 0) cfg.N = 8;

    if (!output.empty()) {
        std::ofstream file(output);
        if (!file) {
            std::cerr << "error: cannot open " << output << "\n";
            return 2;
        }
        return qks::run(cfg, file);
    }
    return qks::run(cfg, std::cout);
}
