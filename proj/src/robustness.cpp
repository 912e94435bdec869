#include "ttpedo/robustness.hpp"

#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "ttpedo/tour_ops.hpp"

namespace ttpedo {

namespace {

std::size_t best_index(std::span<const TtpSolution> population) {
    if (population.empty()) {
        throw std::invalid_argument("robustness needs a non-empty population");
    }
    std::size_t best = 0;
    for (std::size_t q = 1; q < population.size(); ++q) {
        if (population[q].z > population[best].z) {
            best = q;
        }
    }
    return best;
}

}  // namespace

double edge_robustness(std::span<const TtpSolution> population) {
    const std::size_t best = best_index(population);
    const Tour& best_tour = population[best].tour;
    const int n = best_tour.size();

    std::vector<std::unordered_set<Edge, EdgeHash>> member_edges;
    member_edges.reserve(population.size());
    for (const TtpSolution& sol : population) {
        const std::vector<Edge> edges = tour_edges(sol.tour);
        member_edges.emplace_back(edges.begin(), edges.end());
    }

    int covered = 0;
    for (const Edge& e : tour_edges(best_tour)) {
        for (std::size_t q = 0; q < population.size(); ++q) {
            if (q != best && !member_edges[q].contains(e)) {
                ++covered;
                break;
            }
        }
    }
    return 100.0 * static_cast<double>(covered) / static_cast<double>(n);
}

double item_robustness(std::span<const TtpSolution> population) {
    const std::size_t best = best_index(population);
    const PackingList& best_packing = population[best].packing;
    const int m = best_packing.num_items();
    if (m == 0) {
        return 0.0;
    }

    int covered = 0;
    for (int i = 1; i <= m; ++i) {
        for (std::size_t q = 0; q < population.size(); ++q) {
            if (q != best && population[q].packing.selected(i) != best_packing.selected(i)) {
                ++covered;
                break;
            }
        }
    }
    return 100.0 * static_cast<double>(covered) / static_cast<double>(m);
}

RobustnessReport compute_robustness(std::span<const TtpSolution> population) {
    const std::size_t best = best_index(population);
    return RobustnessReport{edge_robustness(population), item_robustness(population),
                            population[best].z};
}

std::string robustness_to_json(const RobustnessReport& report) {
    nlohmann::ordered_json j;
    j["E"] = report.edge_coverage;
    j["I"] = report.item_coverage;
    j["best_z"] = report.best_z;
    return j.dump();
}

}  // namespace ttpedo
