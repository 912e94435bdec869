// Command-line front end: `ttpedo run` evolves a diverse population,
// `ttpedo robustness` scores a stored population, `ttpedo pack` solves the
// packing sub-problem for a fixed tour.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ttpedo/commands.hpp"
#include "ttpedo/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structurally diverse solution sets for the Traveling Thief Problem"};
    app.set_version_flag("--version", ttpedo::kVersion);
    app.require_subcommand(1);

    ttpedo::RunOptions run_opts;
    std::string run_fitness = "h";
    std::string run_kp = "dp";
    std::string run_denominator = "2nmu";
    auto* run = app.add_subcommand("run", "Evolve a diverse population of TTP solutions");
    run->add_option("--instance", run_opts.instance_path, "TTP benchmark file")
        ->required();
    run->add_option("--z-star", run_opts.cfg.z_star,
                    "best-known objective value for the instance")
        ->required();
    run->add_option("--seed-solution", run_opts.seed_solution_path,
                    "snapshot JSON of a solution meeting the quality threshold")
        ->required();
    run->add_option("--alpha", run_opts.cfg.alpha, "quality slack in [0,1)")
        ->capture_default_str();
    run->add_option("--mu", run_opts.cfg.mu, "population size")->capture_default_str();
    run->add_option("--iterations", run_opts.cfg.iterations, "offspring attempts")
        ->capture_default_str();
    run->add_option("--fitness", run_fitness, "entropy guiding survivor selection")
        ->check(CLI::IsMember({"h", "he", "hi"}))
        ->capture_default_str();
    run->add_option("--kp", run_kp, "packing operator")
        ->check(CLI::IsMember({"dp", "ea"}))
        ->capture_default_str();
    run->add_option("--ea-budget", run_opts.cfg.ea_budget,
                    "(1+1)EA evaluations per offspring; 0 means 2m")
        ->capture_default_str();
    run->add_option("--edge-denominator", run_denominator,
                    "edge-entropy normalisation")
        ->check(CLI::IsMember({"2nmu", "nmu"}))
        ->capture_default_str();
    run->add_option("--seed", run_opts.cfg.seed, "RNG seed")->capture_default_str();
    run->add_option("--out", run_opts.out_dir, "output directory for artifacts")
        ->required();

    ttpedo::RobustnessOptions rob_opts;
    auto* rob = app.add_subcommand("robustness",
                                   "Score how well a population covers alternatives "
                                   "to its best solution");
    rob->add_option("--instance", rob_opts.instance_path, "TTP benchmark file")
        ->required();
    rob->add_option("--population", rob_opts.population_path, "population JSONL file")
        ->required();

    ttpedo::PackOptions pack_opts;
    std::string pack_method = "dp";
    auto* pack = app.add_subcommand("pack", "Compute a packing list for a fixed tour");
    pack->add_option("--instance", pack_opts.instance_path, "TTP benchmark file")
        ->required();
    pack->add_option("--tour", pack_opts.tour_path,
                     "tour file: whitespace-separated city indices starting at 1")
        ->required();
    pack->add_option("--method", pack_method, "dp (exact) or ea ((1+1)EA)")
        ->check(CLI::IsMember({"dp", "ea"}))
        ->capture_default_str();
    pack->add_option("--ea-budget", pack_opts.ea_budget, "EA evaluations; 0 means 2m")
        ->capture_default_str();
    pack->add_option("--seed", pack_opts.seed, "RNG seed for the EA method")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            run_opts.cfg.fitness = ttpedo::fitness_mode_from_string(run_fitness);
            run_opts.cfg.kp = ttpedo::kp_operator_from_string(run_kp);
            run_opts.cfg.edge_denominator =
                ttpedo::edge_denominator_from_string(run_denominator);
            ttpedo::cmd_run(run_opts, std::cout);
        } else if (rob->parsed()) {
            ttpedo::cmd_robustness(rob_opts, std::cout);
        } else if (pack->parsed()) {
            pack_opts.method = ttpedo::kp_operator_from_string(pack_method);
            ttpedo::cmd_pack(pack_opts, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
