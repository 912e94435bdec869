#include "ttpedo/edo.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ttpedo {

std::string to_string(KpOperator op) { return op == KpOperator::Dp ? "dp" : "ea"; }

KpOperator kp_operator_from_string(const std::string& s) {
    if (s == "dp") return KpOperator::Dp;
    if (s == "ea") return KpOperator::Ea;
    throw std::invalid_argument("unknown KP operator '" + s + "' (expected dp, ea)");
}

double quality_threshold(const EdoConfig& cfg) {
    return cfg.z_star - cfg.alpha * std::abs(cfg.z_star);
}

Population::Population(int num_cities, int num_items, EdgeDenominator denom)
    : index_(num_cities, num_items, denom) {}

void Population::add(TtpSolution solution) {
    index_.add(solution.tour, solution.packing);
    members_.push_back(std::move(solution));
}

void Population::remove_at(std::size_t index) {
    const TtpSolution& sol = members_.at(index);
    index_.remove(sol.tour, sol.packing);
    members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(index));
}

namespace {

void check_config(const EdoConfig& cfg) {
    if (!(cfg.alpha >= 0.0 && cfg.alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1)");
    }
    if (cfg.mu < 1) {
        throw std::invalid_argument("population size must be at least 1");
    }
    if (cfg.iterations < 0) {
        throw std::invalid_argument("iteration budget must be non-negative");
    }
    if (cfg.ea_budget < 0) {
        throw std::invalid_argument("EA budget must be non-negative");
    }
}

void check_seed(const Instance& inst, const TtpSolution& seed, double z_min) {
    validate_tour(seed.tour, inst.num_cities());
    const double z = evaluate(inst, seed.tour, seed.packing);
    if (std::abs(z - seed.z) > 1e-6 * std::max(1.0, std::abs(z))) {
        throw ValidationError("seed solution's cached objective disagrees with evaluation");
    }
    if (z < z_min) {
        throw ValidationError("seed solution below quality threshold: z = " +
                              std::to_string(z) + " < z_min = " + std::to_string(z_min));
    }
}

constexpr long long kStallLimit = 1'000'000;

}  // namespace

Population init_population(const Instance& inst, const TtpSolution& seed_solution,
                           const EdoConfig& cfg, Rng& rng) {
    check_config(cfg);
    const double z_min = quality_threshold(cfg);
    check_seed(inst, seed_solution, z_min);

    Population pop(inst.num_cities(), inst.num_items(), cfg.edge_denominator);
    pop.add(seed_solution);

    long long rejections = 0;
    while (static_cast<int>(pop.size()) < cfg.mu) {
        const TtpSolution& parent = pop.members()[rand_index(rng, pop.size())];
        Tour mutated = two_opt_mutation(parent.tour, rng);
        PackingList packing = dp_pack(inst, mutated);
        const double z = evaluate(inst, mutated, packing);
        if (z >= z_min) {
            pop.add(TtpSolution{std::move(mutated), std::move(packing), z});
            rejections = 0;
        } else if (++rejections >= kStallLimit) {
            throw std::runtime_error(
                "initial population stalled: " + std::to_string(kStallLimit) +
                " consecutive proposals fell below the quality threshold");
        }
    }
    return pop;
}

EdoResult run_edo(const Instance& inst, const EdoConfig& cfg,
                  const TtpSolution& seed_solution, Rng& rng, const IterationHook& hook) {
    const double z_min = quality_threshold(cfg);
    if (cfg.z_star < 0.0) {
        // A negative z* flips the slack direction; the threshold z* - a|z*|
        // stays below z* so "within alpha of best" keeps its meaning.
        std::fprintf(stderr,
                     "warning: z* = %g is negative; quality threshold set to %g\n",
                     cfg.z_star, z_min);
    }

    Population pop = init_population(inst, seed_solution, cfg, rng);
    const long long ea_budget =
        cfg.ea_budget > 0 ? cfg.ea_budget : 2LL * inst.num_items();

    Trajectory trajectory;
    trajectory.reserve(static_cast<std::size_t>(cfg.iterations) + 1);
    const auto record = [&](long long iteration, bool accepted) {
        const DiversityIndex& idx = pop.index();
        const double he = idx.edge_entropy();
        const double hi = idx.item_entropy();
        trajectory.push_back(TrajectoryPoint{iteration, he + hi, he, hi, accepted});
    };
    record(0, false);
    if (hook) {
        hook(0, pop);
    }

    for (long long iter = 1; iter <= cfg.iterations; ++iter) {
        const TtpSolution& parent1 = pop.members()[rand_index(rng, pop.size())];
        const TtpSolution& parent2 = pop.members()[rand_index(rng, pop.size())];

        Tour child_tour = eax_1ab(inst, parent1.tour, parent2.tour, rng);
        PackingList child_packing =
            cfg.kp == KpOperator::Dp
                ? dp_pack(inst, child_tour)
                : one_plus_one_ea(inst, child_tour, parent1.packing,
                                  PackingBudget{ea_budget}, rng);
        const double child_z = evaluate(inst, child_tour, child_packing);

        const bool accepted = child_z >= z_min;
        if (accepted) {
            pop.add(TtpSolution{std::move(child_tour), std::move(child_packing), child_z});
            const std::size_t removed = select_removal(pop.index(), pop.members(), cfg.fitness);
            pop.remove_at(removed);
        }
        record(iter, accepted);
        if (hook) {
            hook(iter, pop);
        }
    }

    return EdoResult{std::move(pop), std::move(trajectory)};
}

}  // namespace ttpedo
