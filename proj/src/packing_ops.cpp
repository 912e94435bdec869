#include "ttpedo/packing_ops.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace ttpedo {

std::vector<int> item_visit_order(const Instance& inst, const Tour& tour) {
    const int n = tour.size();
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        pos[tour.order[i]] = i;
    }
    std::vector<std::vector<int>> at_position(n);
    for (int i = 1; i <= inst.num_items(); ++i) {
        at_position[pos[inst.item(i).home_city]].push_back(i);
    }
    std::vector<int> order;
    order.reserve(inst.num_items());
    for (int p = 0; p < n; ++p) {
        for (int i : at_position[p]) {  // already ascending per position
            order.push_back(i);
        }
    }
    return order;
}

namespace {

// Bit matrix recording, per (item row, exact weight), whether the item was
// taken to reach that cell. Keeps full reconstruction while the value table
// itself rolls over two rows.
class TakenBits {
public:
    TakenBits(int rows, long long cols)
        : cols_(cols), words_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * words_, 0) {}

    void set(int row, long long col) {
        bits_[static_cast<std::size_t>(row) * words_ + col / 64] |= 1ULL << (col % 64);
    }
    bool get(int row, long long col) const {
        return (bits_[static_cast<std::size_t>(row) * words_ + col / 64] >> (col % 64)) & 1ULL;
    }

private:
    long long cols_;
    long long words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

DpPackResult dp_pack_full(const Instance& inst, const Tour& tour) {
    const int n = tour.size();
    const int m = inst.num_items();
    const long long W = inst.capacity();
    const double R = inst.rent();
    const double v_max = inst.v_max();
    const double nu = inst.nu();

    // Travel time of the unloaded tour; the value of packing nothing.
    const double empty_value = -R * static_cast<double>(tour_length(inst, tour)) / v_max;
    if (m == 0) {
        return DpPackResult{PackingList(0), empty_value};
    }

    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        pos[tour.order[i]] = i;
    }
    // suffix[p]: distance travelled from leaving position p to the end of
    // the tour, including the closing leg. An item collected at position p
    // is carried over exactly this distance.
    std::vector<double> suffix(n + 1, 0.0);
    for (int p = n - 1; p >= 0; --p) {
        suffix[p] =
            suffix[p + 1] + inst.distance(tour.order[p], tour.order[(p + 1) % n]);
    }

    // Reciprocal speeds for every exact knapsack weight.
    std::vector<double> inv_speed(W + 1);
    for (long long j = 0; j <= W; ++j) {
        inv_speed[j] = 1.0 / (v_max - nu * static_cast<double>(j));
    }

    const std::vector<int> visit = item_visit_order(inst, tour);
    const double neg_inf = -std::numeric_limits<double>::infinity();

    std::vector<double> prev(W + 1, neg_inf);
    std::vector<double> cur(W + 1, neg_inf);
    prev[0] = empty_value;  // empty prefix selection
    TakenBits taken(m, W + 1);

    for (int t = 0; t < m; ++t) {
        const int item = visit[t];
        const long long w = inst.item(item).weight;
        const double p = inst.item(item).profit;
        const double carried = suffix[pos[inst.item(item).home_city]];

        for (long long j = 0; j <= W; ++j) {
            double best = prev[j];
            if (j >= w && prev[j - w] != neg_inf) {
                // Marginal rent of hauling weight j instead of j-w over the
                // legs remaining after pickup.
                const double slowdown = carried * (inv_speed[j] - inv_speed[j - w]);
                const double candidate = prev[j - w] + p - R * slowdown;
                if (candidate > best) {
                    best = candidate;
                    taken.set(t, j);
                }
            }
            cur[j] = best;
        }
        std::swap(prev, cur);
    }

    long long best_j = 0;
    for (long long j = 1; j <= W; ++j) {
        if (prev[j] > prev[best_j]) {
            best_j = j;
        }
    }

    PackingList packing(m);
    long long j = best_j;
    for (int t = m - 1; t >= 0; --t) {
        if (taken.get(t, j)) {
            packing.set(inst, visit[t], true);
            j -= inst.item(visit[t]).weight;
        }
    }
    assert(j == 0);
    assert(packing.total_weight() == best_j);

    return DpPackResult{std::move(packing), prev[best_j]};
}

PackingList bit_flip(const Instance& inst, const PackingList& packing, Rng& rng) {
    const int m = packing.num_items();
    PackingList out = packing;
    const double p = 1.0 / static_cast<double>(m);
    for (int i = 1; i <= m; ++i) {
        if (rand_chance(rng, p)) {
            out.flip(inst, i);
        }
    }
    return out;
}

PackingList one_plus_one_ea(const Instance& inst, const Tour& tour, PackingList seed,
                            PackingBudget budget, Rng& rng, OnePlusOneStats* stats) {
    // Crossover seeds are always capacity-feasible; the repair path only
    // guards externally supplied packings.
    while (seed.total_weight() > inst.capacity()) {
        std::vector<int> selected = seed.selected_items();
        const int victim = selected[rand_index(rng, selected.size())];
        seed.set(inst, victim, false);
    }

    PackingList current = std::move(seed);
    double current_z = evaluate(inst, tour, current);
    OnePlusOneStats local;
    local.accepted_z.push_back(current_z);

    for (long long step = 0; step < budget.max_evaluations; ++step) {
        ++local.evaluations;
        PackingList mutant = bit_flip(inst, current, rng);
        if (mutant.total_weight() > inst.capacity()) {
            continue;
        }
        const double mutant_z = evaluate(inst, tour, mutant);
        if (mutant_z > current_z) {
            current = std::move(mutant);
            current_z = mutant_z;
            ++local.improvements;
            local.accepted_z.push_back(current_z);
        }
    }

    if (stats) {
        *stats = local;
    }
    return current;
}

}  // namespace ttpedo
