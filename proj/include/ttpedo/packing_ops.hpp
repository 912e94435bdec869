#pragma once

#include <vector>

#include "ttpedo/rng.hpp"
#include "ttpedo/solution.hpp"

namespace ttpedo {

/// Items sorted by the tour position of their home city; items sharing a
/// city keep ascending index order.
std::vector<int> item_visit_order(const Instance& inst, const Tour& tour);

struct DpPackResult {
    PackingList packing;
    double value = 0.0;  // objective of the reconstructed packing
};

/// Exact packing for a fixed tour via dynamic programming over exact
/// knapsack weights (pseudo-polynomial in m*W). The returned value equals
/// evaluate(inst, tour, packing) and dominates every feasible packing.
DpPackResult dp_pack_full(const Instance& inst, const Tour& tour);

inline PackingList dp_pack(const Instance& inst, const Tour& tour) {
    return dp_pack_full(inst, tour).packing;
}

/// Iteration cap for the (1+1)EA.
struct PackingBudget {
    long long max_evaluations = 0;
};

struct OnePlusOneStats {
    long long evaluations = 0;
    long long improvements = 0;
    std::vector<double> accepted_z;  // objective after the seed and each acceptance
};

/// Each bit flipped independently with probability 1/m.
PackingList bit_flip(const Instance& inst, const PackingList& packing, Rng& rng);

/// Elitist (1+1)EA over packings for a fixed tour, seeded with a parent
/// packing. Performs exactly budget.max_evaluations mutation-evaluate steps
/// and keeps a mutant only when it is feasible and strictly better. An
/// over-capacity seed is first repaired by dropping items in random order.
PackingList one_plus_one_ea(const Instance& inst, const Tour& tour, PackingList seed,
                            PackingBudget budget, Rng& rng,
                            OnePlusOneStats* stats = nullptr);

}  // namespace ttpedo
