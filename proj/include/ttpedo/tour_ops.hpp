#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ttpedo/rng.hpp"
#include "ttpedo/solution.hpp"

namespace ttpedo {

/// Undirected edge with endpoints stored in ascending order.
struct Edge {
    int u = 0;
    int v = 0;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        return std::hash<long long>()((static_cast<long long>(e.u) << 32) | e.v);
    }
};

/// The n undirected edges of a closed tour.
std::vector<Edge> tour_edges(const Tour& tour);

/// A closed walk alternating edges exclusive to parent A (even positions)
/// and parent B (odd positions). walk.front() == walk.back(); edge k runs
/// walk[k] -> walk[k+1].
struct AbCycle {
    std::vector<int> walk;

    int edge_count() const { return static_cast<int>(walk.size()) - 1; }
    Edge edge(int k) const { return make_edge(walk[k], walk[k + 1]); }
    bool is_a_edge(int k) const { return k % 2 == 0; }
};

/// Degree-2 edge multiset decomposed into disjoint cycles covering all
/// cities. Each subtour lists its cities in cycle order.
struct IntermediateSolution {
    std::vector<std::vector<int>> subtours;
};

/// Random alternating walk over the edges exclusive to each parent. Returns
/// none when both tours share the same edge set. The walk starts at a
/// uniformly random city with an A-only edge, picks a uniformly random
/// unused edge of the required parent at each step, and closes on the first
/// return to the start with even length.
std::optional<AbCycle> build_ab_cycle(const Tour& a, const Tour& b, Rng& rng);

/// Replace the cycle's A-edges in parent A by its B-edges and split the
/// resulting degree-2 graph into subtours.
IntermediateSolution apply_ab_cycle(const Tour& a, const AbCycle& cyc);

/// Repeatedly reconnect the smallest subtour to the rest: over all pairs of
/// one edge inside it and one edge outside, and both ways of rejoining the
/// four endpoints, apply the 4-tuple with minimum reconnection cost
/// -d(e1)-d(e2)+d(e3)+d(e4). Deterministic: cost ties break on the smallest
/// (e1, e2, variant) and equal-size subtours on the lowest city index.
/// Newly introduced edges are appended to repair_log when given.
Tour merge_subtours(const Instance& inst, const IntermediateSolution& t,
                    std::vector<Edge>* repair_log = nullptr);

/// EAX-1AB crossover: AB-cycle, intermediate solution, subtour reconnection.
/// Returns a copy of parent A when no AB-cycle exists.
Tour eax_1ab(const Instance& inst, const Tour& a, const Tour& b, Rng& rng);

/// Reverse order[first..last]; requires 1 <= first < last <= n-1.
Tour two_opt_apply(const Tour& tour, int first, int last);

/// Reverse the segment between two uniformly chosen non-adjacent cut edges.
/// The result differs from the input in exactly two edges. Requires n >= 4.
Tour two_opt_mutation(const Tour& tour, Rng& rng);

}  // namespace ttpedo
