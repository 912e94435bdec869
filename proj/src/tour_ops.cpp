#include "ttpedo/tour_ops.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace ttpedo {

namespace {

// Per-city incidence for one parent's exclusive edges. A city meets at most
// two exclusive edges of either parent.
struct Slots {
    std::array<int, 2> nbr{0, 0};
    std::array<bool, 2> used{false, false};
    int count = 0;

    void add(int neighbor) {
        assert(count < 2);
        nbr[count++] = neighbor;
    }
    int unused_count() const {
        int c = 0;
        for (int k = 0; k < count; ++k) {
            c += used[k] ? 0 : 1;
        }
        return c;
    }
};

std::vector<int> tour_positions(const Tour& t) {
    std::vector<int> pos(t.size() + 1, -1);
    for (int i = 0; i < t.size(); ++i) {
        pos[t.order[i]] = i;
    }
    return pos;
}

bool tours_adjacent(const std::vector<int>& pos, int n, int u, int v) {
    const int d = std::abs(pos[u] - pos[v]);
    return d == 1 || d == n - 1;
}

// Orient a city cycle as a tour: start at city 1, then the smaller neighbor.
Tour canonical_tour(const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    int at = -1;
    for (int i = 0; i < k; ++i) {
        if (cycle[i] == 1) {
            at = i;
            break;
        }
    }
    assert(at >= 0);
    const int next = cycle[(at + 1) % k];
    const int prev = cycle[(at - 1 + k) % k];
    Tour t;
    t.order.reserve(k);
    const int step = (next <= prev) ? 1 : -1;
    for (int s = 0; s < k; ++s) {
        t.order.push_back(cycle[((at + s * step) % k + k) % k]);
    }
    return t;
}

}  // namespace

std::vector<Edge> tour_edges(const Tour& tour) {
    const int n = tour.size();
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) {
        edges.push_back(make_edge(tour.order[i], tour.order[(i + 1) % n]));
    }
    return edges;
}

std::optional<AbCycle> build_ab_cycle(const Tour& a, const Tour& b, Rng& rng) {
    const int n = a.size();
    const std::vector<int> pos_a = tour_positions(a);
    const std::vector<int> pos_b = tour_positions(b);

    // adj[0]: edges of A not in B, adj[1]: edges of B not in A.
    std::array<std::vector<Slots>, 2> adj{std::vector<Slots>(n + 1),
                                          std::vector<Slots>(n + 1)};
    for (int i = 0; i < n; ++i) {
        const int u = a.order[i];
        const int v = a.order[(i + 1) % n];
        if (!tours_adjacent(pos_b, n, u, v)) {
            adj[0][u].add(v);
            adj[0][v].add(u);
        }
    }
    for (int i = 0; i < n; ++i) {
        const int u = b.order[i];
        const int v = b.order[(i + 1) % n];
        if (!tours_adjacent(pos_a, n, u, v)) {
            adj[1][u].add(v);
            adj[1][v].add(u);
        }
    }

    std::vector<int> starts;
    for (int c = 1; c <= n; ++c) {
        if (adj[0][c].count > 0) {
            starts.push_back(c);
        }
    }
    if (starts.empty()) {
        return std::nullopt;  // identical edge sets
    }

    const int start = starts[rand_index(rng, starts.size())];
    AbCycle cyc;
    cyc.walk.push_back(start);
    int cur = start;
    int parity = 0;  // 0: next edge from A, 1: from B

    const auto consume = [&](int city, int p, int neighbor) {
        Slots& s = adj[p][city];
        for (int k = 0; k < s.count; ++k) {
            if (!s.used[k] && s.nbr[k] == neighbor) {
                s.used[k] = true;
                return;
            }
        }
        throw std::logic_error("AB-cycle bookkeeping out of sync");
    };

    // Each city meets exclusive A- and B-edges in equal numbers, so the
    // alternating walk can only terminate back at the start.
    const int max_steps = 4 * n + 4;
    for (int step = 0; step < max_steps; ++step) {
        Slots& s = adj[parity][cur];
        int choices[2];
        int num_choices = 0;
        for (int k = 0; k < s.count; ++k) {
            if (!s.used[k]) {
                choices[num_choices++] = s.nbr[k];
            }
        }
        if (num_choices == 0) {
            throw std::logic_error("AB-cycle walk stuck");
        }
        const int next = choices[num_choices == 1 ? 0 : rand_index(rng, 2)];
        consume(cur, parity, next);
        consume(next, parity, cur);
        cyc.walk.push_back(next);
        cur = next;
        parity ^= 1;
        if (cur == start && parity == 0) {
            return cyc;
        }
    }
    throw std::logic_error("AB-cycle walk did not close");
}

IntermediateSolution apply_ab_cycle(const Tour& a, const AbCycle& cyc) {
    const int n = a.size();
    std::vector<std::vector<int>> adj(n + 1);
    for (int i = 0; i < n; ++i) {
        const int u = a.order[i];
        const int v = a.order[(i + 1) % n];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    const auto remove_arc = [&](int u, int v) {
        auto& lst = adj[u];
        const auto it = std::find(lst.begin(), lst.end(), v);
        if (it == lst.end()) {
            throw std::logic_error("AB-cycle does not match parent A");
        }
        lst.erase(it);
    };

    for (int k = 0; k < cyc.edge_count(); ++k) {
        const int u = cyc.walk[k];
        const int v = cyc.walk[k + 1];
        if (cyc.is_a_edge(k)) {
            remove_arc(u, v);
            remove_arc(v, u);
        } else {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }

    IntermediateSolution out;
    std::vector<bool> visited(n + 1, false);
    for (int c = 1; c <= n; ++c) {
        if (visited[c]) {
            continue;
        }
        if (adj[c].size() != 2) {
            throw std::logic_error("intermediate solution lost 2-regularity");
        }
        std::vector<int> cycle;
        int prev = -1;
        int cur = c;
        do {
            visited[cur] = true;
            cycle.push_back(cur);
            const int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = next;
        } while (cur != c);
        out.subtours.push_back(std::move(cycle));
    }
    return out;
}

namespace {

// Path covering the cycle's cities, from u to v, after deleting edge {u,v}.
std::vector<int> cycle_to_path(const std::vector<int>& c, int u, int v) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        const int x = c[i];
        const int y = c[(i + 1) % k];
        if (x == u && y == v) {
            std::vector<int> path;
            path.reserve(k);
            for (int s = 0; s < k; ++s) {
                path.push_back(c[((i - s) % k + k) % k]);
            }
            return path;
        }
        if (x == v && y == u) {
            std::vector<int> path;
            path.reserve(k);
            for (int s = 0; s < k; ++s) {
                path.push_back(c[(i + 1 + s) % k]);
            }
            return path;
        }
    }
    throw std::logic_error("edge not found in subtour");
}

}  // namespace

Tour merge_subtours(const Instance& inst, const IntermediateSolution& t,
                    std::vector<Edge>* repair_log) {
    if (t.subtours.empty()) {
        throw std::invalid_argument("intermediate solution has no subtours");
    }
    std::vector<std::vector<int>> subs = t.subtours;

    while (subs.size() > 1) {
        // Smallest subtour; ties go to the one holding the lowest city.
        std::size_t r_idx = 0;
        for (std::size_t i = 1; i < subs.size(); ++i) {
            if (subs[i].size() < subs[r_idx].size() ||
                (subs[i].size() == subs[r_idx].size() &&
                 *std::min_element(subs[i].begin(), subs[i].end()) <
                     *std::min_element(subs[r_idx].begin(), subs[r_idx].end()))) {
                r_idx = i;
            }
        }

        struct Best {
            long long cost = 0;
            Edge e1, e2;
            std::size_t other = 0;
            int variant = 0;
            bool set = false;
        } best;

        const auto consider = [&](const Edge& e1, const Edge& e2, std::size_t other,
                                  int variant, long long cost) {
            const auto key = std::tuple(cost, e1.u, e1.v, e2.u, e2.v, variant);
            if (!best.set ||
                key < std::tuple(best.cost, best.e1.u, best.e1.v, best.e2.u, best.e2.v,
                                 best.variant)) {
                best = Best{cost, e1, e2, other, variant, true};
            }
        };

        const std::vector<int>& r = subs[r_idx];
        const int rk = static_cast<int>(r.size());
        for (int i = 0; i < rk; ++i) {
            const Edge e1 = make_edge(r[i], r[(i + 1) % rk]);
            const long long d1 = inst.distance(e1.u, e1.v);
            for (std::size_t s = 0; s < subs.size(); ++s) {
                if (s == r_idx) {
                    continue;
                }
                const std::vector<int>& o = subs[s];
                const int ok = static_cast<int>(o.size());
                for (int j = 0; j < ok; ++j) {
                    const Edge e2 = make_edge(o[j], o[(j + 1) % ok]);
                    const long long d2 = inst.distance(e2.u, e2.v);
                    const long long uc = inst.distance(e1.u, e2.u);
                    const long long vd = inst.distance(e1.v, e2.v);
                    const long long ud = inst.distance(e1.u, e2.v);
                    const long long vc = inst.distance(e1.v, e2.u);
                    consider(e1, e2, s, 0, -d1 - d2 + uc + vd);
                    consider(e1, e2, s, 1, -d1 - d2 + ud + vc);
                }
            }
        }
        assert(best.set);

        const std::vector<int> path_r = cycle_to_path(subs[r_idx], best.e1.v, best.e1.u);
        std::vector<int> merged;
        if (best.variant == 0) {
            // new edges {e1.u, e2.u} and {e1.v, e2.v}
            std::vector<int> path_o = cycle_to_path(subs[best.other], best.e2.u, best.e2.v);
            merged = path_r;
            merged.insert(merged.end(), path_o.begin(), path_o.end());
            if (repair_log) {
                repair_log->push_back(make_edge(best.e1.u, best.e2.u));
                repair_log->push_back(make_edge(best.e1.v, best.e2.v));
            }
        } else {
            // new edges {e1.u, e2.v} and {e1.v, e2.u}
            std::vector<int> path_o = cycle_to_path(subs[best.other], best.e2.v, best.e2.u);
            merged = path_r;
            merged.insert(merged.end(), path_o.begin(), path_o.end());
            if (repair_log) {
                repair_log->push_back(make_edge(best.e1.u, best.e2.v));
                repair_log->push_back(make_edge(best.e1.v, best.e2.u));
            }
        }

        const std::size_t hi = std::max(r_idx, best.other);
        const std::size_t lo = std::min(r_idx, best.other);
        subs.erase(subs.begin() + hi);
        subs.erase(subs.begin() + lo);
        subs.push_back(std::move(merged));
    }

    return canonical_tour(subs[0]);
}

Tour eax_1ab(const Instance& inst, const Tour& a, const Tour& b, Rng& rng) {
    const std::optional<AbCycle> cyc = build_ab_cycle(a, b, rng);
    if (!cyc) {
        return a;
    }
    return merge_subtours(inst, apply_ab_cycle(a, *cyc));
}

Tour two_opt_apply(const Tour& tour, int first, int last) {
    const int n = tour.size();
    if (first < 1 || last <= first || last > n - 1) {
        throw std::invalid_argument("segment bounds must satisfy 1 <= first < last <= n-1");
    }
    Tour out = tour;
    std::reverse(out.order.begin() + first, out.order.begin() + last + 1);
    return out;
}

Tour two_opt_mutation(const Tour& tour, Rng& rng) {
    const int n = tour.size();
    if (n < 4) {
        throw std::invalid_argument("2-OPT needs at least 4 cities");
    }
    // Uniform over unordered non-adjacent cut-edge pairs; (1, n-1) reverses
    // the whole remainder and would rebuild the same cycle.
    while (true) {
        const int x = 1 + static_cast<int>(rand_below(rng, n - 1));
        const int y = 1 + static_cast<int>(rand_below(rng, n - 1));
        if (x == y) {
            continue;
        }
        const int first = std::min(x, y);
        const int last = std::max(x, y);
        if (first == 1 && last == n - 1) {
            continue;
        }
        return two_opt_apply(tour, first, last);
    }
}

}  // namespace ttpedo
