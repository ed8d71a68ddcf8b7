#include <CLI11.hpp>
#include <iostream>

#include "ldpcopt/cli.hpp"

using ldpcopt::RunConfig;

int main(int argc, char** argv) {
    CLI::App app{"Irregular LDPC degree-distribution design for the binary erasure channel:\n"
                 "exact density-evolution constraints via sum-of-squares certificates and a\n"
                 "dense interior-point conic solver, with independent DE verification."};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    std::string convention = "poly-degree";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "output format: json, text, csv")
            ->check(CLI::IsMember({"json", "text", "csv"}));
    };
    auto add_problem = [&](CLI::App* sub) {
        sub->add_option("--mode", cfg.mode, "max-threshold, max-rate, or min-check-avg")
            ->check(CLI::IsMember({"max-threshold", "max-rate", "min-check-avg"}));
        sub->add_option("--rho", cfg.rho_spec, "check-side polynomial, e.g. \"x^5\"");
        sub->add_option("--lambda", cfg.lambda_spec, "variable-side polynomial");
        sub->add_option("--dv-max", cfg.dv_max, "maximum variable node degree");
        sub->add_option("--dc-max", cfg.dc_max, "maximum check node degree");
        sub->add_option("--epsilon", [&cfg](const std::vector<std::string>& v) {
            cfg.epsilon = std::stod(v.back());
            return true;
        }, "channel erasure probability (fixed-epsilon modes)");
        sub->add_option("--grid", cfg.grid, "grid size: solve the discretized-LP baseline");
        sub->add_option("--gap-tol", cfg.gap_tol, "solver duality-gap tolerance");
        sub->add_option("--feas-tol", cfg.feas_tol, "solver feasibility tolerance");
        sub->add_option("--max-iter", cfg.max_iter, "solver iteration limit");
        sub->add_flag("--emit-curves", cfg.emit_curves, "write Q(x) and DE trajectories as CSV");
        sub->add_option("--convention", convention, "degree columns: poly-degree or node-degree")
            ->check(CLI::IsMember({"poly-degree", "node-degree"}));
    };

    CLI::App* optimize = app.add_subcommand("optimize", "solve a design problem");
    add_problem(optimize);
    add_common(optimize);

    CLI::App* verify = app.add_subcommand("verify", "re-verify a stored result file");
    verify->add_option("--in", cfg.input_path, "result JSON produced by optimize")->required();
    add_common(verify);

    CLI::App* threshold = app.add_subcommand("threshold", "density-evolution threshold of an ensemble");
    threshold->add_option("--lambda", cfg.lambda_spec, "variable-side polynomial")->required();
    threshold->add_option("--rho", cfg.rho_spec, "check-side polynomial")->required();
    add_common(threshold);

    CLI::App* table = app.add_subcommand("table", "comparison table against published designs");
    table->add_option("--columns", cfg.columns,
                      "comma list of this-work,type-a,type-b,amu,ru-3.63; or none");
    add_problem(table);
    add_common(table);

    CLI::App* examples = app.add_subcommand("examples", "run the bundled literature presets");
    add_common(examples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    if (optimize->parsed()) cfg.command = ldpcopt::Command::Optimize;
    if (verify->parsed()) cfg.command = ldpcopt::Command::Verify;
    if (threshold->parsed()) cfg.command = ldpcopt::Command::Threshold;
    if (table->parsed()) cfg.command = ldpcopt::Command::Table;
    if (examples->parsed()) cfg.command = ldpcopt::Command::Examples;
    cfg.format = format == "json"   ? ldpcopt::OutputFormat::Json
                 : format == "csv"  ? ldpcopt::OutputFormat::Csv
                                    : ldpcopt::OutputFormat::Text;
    cfg.convention = convention == "node-degree" ? ldpcopt::DegreeConvention::NodeDegree
                                                 : ldpcopt::DegreeConvention::PolyDegree;

    try {
        return ldpcopt::run_command(cfg, std::cout, std::cerr);
    } catch (const ldpcopt::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
