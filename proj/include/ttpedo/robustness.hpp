#pragma once

#include <span>
#include <string>

#include "ttpedo/solution.hpp"

namespace ttpedo {

/// How well a population covers alternatives to its best member: the share
/// of the best tour's edges some other member avoids, and the share of items
/// on which some member makes the opposite inclusion choice.
struct RobustnessReport {
    double edge_coverage = 0.0;  // percent of best-tour edges with an alternative
    double item_coverage = 0.0;  // percent of items with an opposite choice
    double best_z = 0.0;
};

/// Percentage of the best solution's tour edges avoided by at least one
/// population member. Best = highest z, ties to the smallest index.
double edge_robustness(std::span<const TtpSolution> population);

/// Percentage of items where some member's inclusion bit differs from the
/// best solution's. All m items count, whether or not the best packs them.
double item_robustness(std::span<const TtpSolution> population);

RobustnessReport compute_robustness(std::span<const TtpSolution> population);

std::string robustness_to_json(const RobustnessReport& report);

}  // namespace ttpedo
