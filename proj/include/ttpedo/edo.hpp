#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ttpedo/diversity.hpp"
#include "ttpedo/packing_ops.hpp"
#include "ttpedo/solution.hpp"
#include "ttpedo/tour_ops.hpp"

namespace ttpedo {

/// Which inner algorithm computes a packing list for each new tour.
enum class KpOperator { Dp, Ea };

std::string to_string(KpOperator op);
KpOperator kp_operator_from_string(const std::string& s);

struct EdoConfig {
    double alpha = 0.1;             // quality slack in [0, 1)
    int mu = 50;                    // population size
    long long iterations = 10000;   // offspring attempts, accepted or not
    FitnessMode fitness = FitnessMode::Total;
    KpOperator kp = KpOperator::Dp;
    long long ea_budget = 0;        // (1+1)EA evaluations; 0 means 2m
    EdgeDenominator edge_denominator = EdgeDenominator::TwoNMu;
    std::uint64_t seed = 0;
    double z_star = 0.0;            // best-known objective, supplied by caller
};

/// z* - alpha * |z*|: within alpha of the best-known objective regardless of
/// its sign. Equals (1 - alpha) z* for the usual z* >= 0.
double quality_threshold(const EdoConfig& cfg);

/// Fixed-capacity multiset of solutions with its diversity index kept in
/// step. Grows to mu+1 transiently between insertion and survivor removal.
class Population {
public:
    Population(int num_cities, int num_items, EdgeDenominator denom);

    void add(TtpSolution solution);
    void remove_at(std::size_t index);

    const std::vector<TtpSolution>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const DiversityIndex& index() const { return index_; }

private:
    std::vector<TtpSolution> members_;
    DiversityIndex index_;
};

struct TrajectoryPoint {
    long long iteration = 0;
    double h = 0.0;
    double he = 0.0;
    double hi = 0.0;
    bool accepted = false;
};

/// Row 0 records the initial population; the selected-mode column never
/// decreases.
using Trajectory = std::vector<TrajectoryPoint>;

struct EdoResult {
    Population population;
    Trajectory trajectory;
};

using IterationHook = std::function<void(long long iteration, const Population&)>;

/// Grow a population from one compliant solution: repeatedly 2-OPT-mutate a
/// uniformly chosen member's tour, repack it with the DP, and keep the
/// result when it meets the quality threshold. Aborts if 1e6 consecutive
/// proposals get rejected.
Population init_population(const Instance& inst, const TtpSolution& seed_solution,
                           const EdoConfig& cfg, Rng& rng);

/// The diversity-maximising bi-level EA. Each iteration crosses two random
/// parents with EAX-1AB, packs the child tour with the configured KP
/// operator (the (1+1)EA starts from the first parent's packing), discards
/// children below the quality threshold, and otherwise inserts the child and
/// removes the member whose absence leaves the highest selected-mode
/// entropy.
EdoResult run_edo(const Instance& inst, const EdoConfig& cfg,
                  const TtpSolution& seed_solution, Rng& rng,
                  const IterationHook& hook = {});

}  // namespace ttpedo
