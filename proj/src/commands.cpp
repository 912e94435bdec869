#include "ttpedo/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ttpedo/robustness.hpp"
#include "ttpedo/snapshot.hpp"
#include "ttpedo/version.hpp"

namespace ttpedo {

namespace {

namespace fs = std::filesystem;

std::string format_entropy(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::string trajectory_to_csv(const Trajectory& trajectory) {
    std::string csv = "iteration,H,He,Hi,accepted\n";
    for (const TrajectoryPoint& p : trajectory) {
        csv += std::to_string(p.iteration);
        csv += ',';
        csv += format_entropy(p.h);
        csv += ',';
        csv += format_entropy(p.he);
        csv += ',';
        csv += format_entropy(p.hi);
        csv += ',';
        csv += p.accepted ? '1' : '0';
        csv += '\n';
    }
    return csv;
}

nlohmann::ordered_json config_to_json(const EdoConfig& cfg) {
    nlohmann::ordered_json j;
    j["alpha"] = cfg.alpha;
    j["mu"] = cfg.mu;
    j["iterations"] = cfg.iterations;
    j["fitness"] = to_string(cfg.fitness);
    j["kp"] = to_string(cfg.kp);
    j["ea_budget"] = cfg.ea_budget;
    j["edge_denominator"] = to_string(cfg.edge_denominator);
    j["seed"] = cfg.seed;
    j["z_star"] = cfg.z_star;
    j["z_min"] = quality_threshold(cfg);
    return j;
}

}  // namespace

void cmd_run(const RunOptions& opts, std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();

    const Instance inst = parse_instance_file(opts.instance_path);
    const TtpSolution seed_solution = read_solution_file(inst, opts.seed_solution_path);

    Rng rng(opts.cfg.seed);
    const EdoResult result = run_edo(inst, opts.cfg, seed_solution, rng);

    const std::vector<TtpSolution>& members = result.population.members();
    double z_lo = members.front().z;
    double z_hi = members.front().z;
    for (const TtpSolution& sol : members) {
        z_lo = std::min(z_lo, sol.z);
        z_hi = std::max(z_hi, sol.z);
    }
    const DiversityIndex& idx = result.population.index();

    nlohmann::ordered_json summary;
    summary["H"] = idx.total_entropy();
    summary["He"] = idx.edge_entropy();
    summary["Hi"] = idx.item_entropy();
    summary["min_z"] = z_lo;
    summary["max_z"] = z_hi;

    const RobustnessReport robustness = compute_robustness(members);

    const double wall_clock =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const fs::path out_dir(opts.out_dir);
    fs::create_directories(out_dir);
    const fs::path trajectory_path = out_dir / "trajectory.csv";
    const fs::path population_path = out_dir / "population.jsonl";
    const fs::path summary_path = out_dir / "summary.json";
    const fs::path robustness_path = out_dir / "robustness.json";
    const fs::path manifest_path = out_dir / "manifest.json";

    nlohmann::ordered_json manifest;
    manifest["instance"] = opts.instance_path;
    manifest["config"] = config_to_json(opts.cfg);
    manifest["artifacts"]["trajectory"] = trajectory_path.string();
    manifest["artifacts"]["population"] = population_path.string();
    manifest["artifacts"]["summary"] = summary_path.string();
    manifest["artifacts"]["robustness"] = robustness_path.string();
    manifest["wall_clock_seconds"] = wall_clock;
    manifest["version"] = kVersion;

    write_file_atomic(trajectory_path, trajectory_to_csv(result.trajectory));
    write_file_atomic(population_path, population_to_jsonl(members));
    write_file_atomic(summary_path, summary.dump(2) + "\n");
    write_file_atomic(robustness_path, robustness_to_json(robustness) + "\n");
    write_file_atomic(manifest_path, manifest.dump(2) + "\n");

    log << "population " << members.size() << ", H = " << format_entropy(idx.total_entropy())
        << ", He = " << format_entropy(idx.edge_entropy())
        << ", Hi = " << format_entropy(idx.item_entropy()) << ", z in ["
        << format_entropy(z_lo) << ", " << format_entropy(z_hi) << "]\n"
        << "artifacts in " << out_dir.string() << "\n";
}

void cmd_robustness(const RobustnessOptions& opts, std::ostream& out) {
    const Instance inst = parse_instance_file(opts.instance_path);
    const std::vector<TtpSolution> population = read_population_file(inst, opts.population_path);
    if (population.empty()) {
        throw ValidationError("population file holds no solutions");
    }
    out << robustness_to_json(compute_robustness(population)) << "\n";
}

Tour read_tour_file(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open tour file: " + path);
    }
    Tour tour;
    int city = 0;
    while (in >> city) {
        tour.order.push_back(city);
    }
    if (!in.eof()) {
        throw ValidationError("tour file must hold whitespace-separated city indices");
    }
    validate_tour(tour, inst.num_cities());
    return tour;
}

void cmd_pack(const PackOptions& opts, std::ostream& out) {
    const Instance inst = parse_instance_file(opts.instance_path);
    const Tour tour = read_tour_file(inst, opts.tour_path);

    PackingList packing(inst.num_items());
    if (opts.method == KpOperator::Dp) {
        packing = dp_pack(inst, tour);
    } else {
        const long long budget =
            opts.ea_budget > 0 ? opts.ea_budget : 2LL * inst.num_items();
        Rng rng(opts.seed);
        packing = one_plus_one_ea(inst, tour, PackingList(inst.num_items()),
                                  PackingBudget{budget}, rng);
    }

    nlohmann::ordered_json j;
    j["packing"] = packing.selected_items();
    j["z"] = evaluate(inst, tour, packing);
    out << j.dump() << "\n";
}

}  // namespace ttpedo
