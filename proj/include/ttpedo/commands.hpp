#pragma once

#include <iosfwd>
#include <string>

#include "ttpedo/edo.hpp"

namespace ttpedo {

struct RunOptions {
    std::string instance_path;
    std::string seed_solution_path;
    std::string out_dir;
    EdoConfig cfg;
};

/// Run the diversity EA and write trajectory.csv, population.jsonl,
/// summary.json, robustness.json and manifest.json under out_dir. Artifacts
/// are staged to temporary files and renamed only after the run succeeds.
void cmd_run(const RunOptions& opts, std::ostream& log);

struct RobustnessOptions {
    std::string instance_path;
    std::string population_path;
};

/// Print the robustness report of a stored population as JSON.
void cmd_robustness(const RobustnessOptions& opts, std::ostream& out);

struct PackOptions {
    std::string instance_path;
    std::string tour_path;
    KpOperator method = KpOperator::Dp;
    long long ea_budget = 0;  // 0 means 2m
    std::uint64_t seed = 0;
};

/// Compute a packing for a fixed tour and print it with its objective.
void cmd_pack(const PackOptions& opts, std::ostream& out);

/// Whitespace-separated city indices; must be a permutation starting at 1.
Tour read_tour_file(const Instance& inst, const std::string& path);

}  // namespace ttpedo
