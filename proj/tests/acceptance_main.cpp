// Acceptance suite: every gate below runs at its pinned tolerance and prints
// one PASS/FAIL line. Exit status is nonzero when any gate fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "ttpedo/commands.hpp"
#include "ttpedo/edo.hpp"
#include "ttpedo/robustness.hpp"
#include "ttpedo/snapshot.hpp"

using namespace ttpedo;
using namespace ttpedo::testing;
namespace fs = std::filesystem;

namespace {

const std::string kFixturePath =
    std::string(TTPEDO_TEST_DATA_DIR) + "/eil51_n50_bounded-strongly-corr_01.ttp";

// Reference objective for the committed benchmark fixture, produced by
// reference_solution() below and frozen here. reference_solution() is
// deterministic, so any drift in the fixture, the parser, the evaluator, the
// 2-OPT descent, or the DP shows up as a mismatch against this constant.
constexpr double kInstance1ZStar = 1867.5083620222895;

// Nearest neighbour from city 1, first-improvement 2-OPT descent on tour
// length, then the exact DP for the packing.
TtpSolution reference_solution(const Instance& inst) {
    const int n = inst.num_cities();
    std::vector<int> order{1};
    std::vector<bool> used(n + 1, false);
    used[1] = true;
    while (static_cast<int>(order.size()) < n) {
        const int from = order.back();
        int best = -1;
        for (int c = 2; c <= n; ++c) {
            if (!used[c] && (best == -1 || inst.distance(from, c) < inst.distance(from, best))) {
                best = c;
            }
        }
        order.push_back(best);
        used[best] = true;
    }

    Tour tour{std::move(order)};
    bool improved = true;
    while (improved) {
        improved = false;
        for (int first = 1; first < n - 1 && !improved; ++first) {
            for (int last = first + 1; last <= n - 1 && !improved; ++last) {
                if (first == 1 && last == n - 1) {
                    continue;
                }
                const int a = tour.order[first - 1], b = tour.order[first];
                const int c = tour.order[last], d = tour.order[(last + 1) % n];
                const long long delta = -inst.distance(a, b) - inst.distance(c, d) +
                                        inst.distance(a, c) + inst.distance(b, d);
                if (delta < 0) {
                    tour = two_opt_apply(tour, first, last);
                    improved = true;
                }
            }
        }
    }
    return make_solution(inst, tour, dp_pack(inst, tour));
}

EdoConfig instance1_config(std::uint64_t seed) {
    EdoConfig cfg;
    cfg.alpha = 0.1;
    cfg.mu = 50;
    cfg.iterations = 10000;
    cfg.fitness = FitnessMode::Total;
    cfg.kp = KpOperator::Dp;
    cfg.edge_denominator = EdgeDenominator::TwoNMu;
    cfg.seed = seed;
    cfg.z_star = kInstance1ZStar;
    return cfg;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t k = values.size();
    return k % 2 == 1 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

// ---------------------------------------------------------------------------

bool criterion1_dp_oracle(std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(1001);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rand_below(rng, 5));   // <= 8
        const int m = static_cast<int>(rand_below(rng, 13));      // <= 12
        const Instance inst = random_instance(rng, n, m, 50);     // W <= 50
        const Tour tour = random_tour(rng, n);

        const DpPackResult res = dp_pack_full(inst, tour);
        const double direct = evaluate(inst, tour, res.packing);
        const double brute = enumerate_best_packing(inst, tour.order).second;
        if (std::abs(res.value - direct) > 1e-9 || std::abs(res.value - brute) > 1e-9) {
            out << "dp value " << res.value << " vs direct " << direct << " vs brute "
                << brute << " on trial " << trial;
            return false;
        }
        ++checked;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << checked << " instances exact to 1e-9 in " << secs << " s";
    return secs < 60.0;
}

bool criterion2_entropy_hand_values(std::ostream& out) {
    DiversityIndex edges(51, 0);
    for (int k = 0; k < 50; ++k) {
        edges.add(Tour::identity(51), PackingList(0));
    }
    const double he_expect = std::log(102.0) / 2.0;
    if (std::abs(edges.edge_entropy() - he_expect) > 1e-12) {
        out << "identical tours: He = " << edges.edge_entropy() << " want " << he_expect;
        return false;
    }

    const Instance six = instance_from_text(kSixCityInstance);
    for (int k = 1; k <= 4; ++k) {
        PackingList packing(six.num_items());
        for (int i = 1; i <= k; ++i) {
            packing.set(six, i, true);
        }
        DiversityIndex idx(6, six.num_items());
        for (int c = 0; c < 9; ++c) {
            idx.add(Tour::identity(6), packing);
        }
        if (std::abs(idx.item_entropy() - std::log(double(k))) > 1e-12) {
            out << "identical " << k << "-item packings: Hi = " << idx.item_entropy();
            return false;
        }
    }

    Rng rng(1002);
    for (int trial = 0; trial < 200; ++trial) {
        const Instance inst = random_instance(rng, 8, 6, 40);
        DiversityIndex idx(8, 6);
        const int size = 1 + static_cast<int>(rand_below(rng, 7));
        for (int s = 0; s < size; ++s) {
            PackingList p(6);
            for (int i = 1; i <= 6; ++i) {
                if (rand_chance(rng, 0.5)) {
                    p.set(inst, i, true);
                }
            }
            idx.add(random_tour(rng, 8), p);
        }
        if (std::abs(idx.total_entropy() - (idx.edge_entropy() + idx.item_entropy())) >
            1e-12) {
            out << "H != He + Hi";
            return false;
        }
    }
    out << "ln(102)/2, ln k, and H = He + Hi all exact to 1e-12";
    return true;
}

bool criterion3_survivor_selection(std::ostream& out) {
    Rng rng(1003);
    const Instance inst = instance_from_text(kSixCityInstance);
    int populations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int size = 2 + static_cast<int>(rand_below(rng, 9));  // mu+1 <= 10
        std::vector<TtpSolution> pop;
        DiversityIndex idx(6, inst.num_items());
        for (int s = 0; s < size; ++s) {
            const Tour tour = random_tour(rng, 6);
            PackingList packing(inst.num_items());
            for (int i = 1; i <= inst.num_items(); ++i) {
                if (rand_chance(rng, 0.4) &&
                    packing.total_weight() + inst.item(i).weight <= inst.capacity()) {
                    packing.set(inst, i, true);
                }
            }
            idx.add(tour, packing);
            pop.push_back(TtpSolution{tour, packing, 0.0});
        }

        for (const FitnessMode mode :
             {FitnessMode::Total, FitnessMode::Edges, FitnessMode::Items}) {
            const std::vector<double> fast = removal_entropies(idx, pop, mode);
            double best = -1e300;
            for (std::size_t q = 0; q < pop.size(); ++q) {
                std::vector<TtpSolution> rest;
                for (std::size_t r = 0; r < pop.size(); ++r) {
                    if (r != q) rest.push_back(pop[r]);
                }
                const double slow = naive_entropy(rest, 6, inst.num_items(),
                                                  EdgeDenominator::TwoNMu, mode);
                if (std::abs(fast[q] - slow) > 1e-9) {
                    out << "candidate " << q << " mode " << to_string(mode) << ": "
                        << fast[q] << " vs recomputed " << slow;
                    return false;
                }
                best = std::max(best, slow);
            }
            const std::size_t chosen = select_removal(idx, pop, mode);
            if (fast[chosen] < best - 1e-9) {
                out << "chosen removal not optimal in mode " << to_string(mode);
                return false;
            }
        }
        ++populations;
    }
    out << populations << " populations, all three fitness modes agree with recomputation";
    return true;
}

bool criterion4_monotone_run(std::ostream& out) {
    const Instance inst = parse_instance_file(kFixturePath);
    const TtpSolution seed = reference_solution(inst);
    if (std::abs(seed.z - kInstance1ZStar) > 1e-6) {
        out << "reference z* drifted: " << seed.z << " vs pinned " << kInstance1ZStar;
        return false;
    }

    const EdoConfig cfg = instance1_config(1);
    const double z_min = quality_threshold(cfg);
    long long violations = 0;
    Rng rng(cfg.seed);
    const EdoResult result =
        run_edo(inst, cfg, seed, rng, [&](long long, const Population& pop) {
            if (static_cast<int>(pop.size()) != cfg.mu) {
                ++violations;
            }
            for (const TtpSolution& sol : pop.members()) {
                if (sol.z < z_min) {
                    ++violations;
                }
            }
        });

    double last = -1e300;
    long long dips = 0;
    for (const TrajectoryPoint& p : result.trajectory) {
        if (p.h < last - 1e-9) {
            ++dips;
        }
        last = std::max(last, p.h);
    }
    out << result.trajectory.size() - 1 << " iterations, " << dips
        << " entropy dips, " << violations << " constraint violations; final H = "
        << result.population.index().total_entropy();
    return dips == 0 && violations == 0;
}

bool criterion5_table2_vicinity(std::ostream& out) {
    const Instance inst = parse_instance_file(kFixturePath);
    const TtpSolution seed = reference_solution(inst);

    std::vector<double> h, he, hi, he_nmu;
    std::vector<EdoResult> results;
    results.reserve(5);
    for (std::uint64_t s = 0; s < 5; ++s) {
        Rng rng(s);
        results.push_back(run_edo(inst, instance1_config(s), seed, rng));
        const DiversityIndex& idx = results.back().population.index();
        h.push_back(idx.total_entropy());
        he.push_back(idx.edge_entropy());
        hi.push_back(idx.item_entropy());
        // the normalised-denominator variant, for the diagnosis clause
        DiversityIndex alt(inst.num_cities(), inst.num_items(), EdgeDenominator::NMu);
        for (const TtpSolution& sol : results.back().population.members()) {
            alt.add(sol.tour, sol.packing);
        }
        he_nmu.push_back(alt.edge_entropy());
    }

    const double med_h = median(h), med_he = median(he), med_hi = median(hi);
    const bool ok = std::abs(med_h - 8.5) <= 1.0 && std::abs(med_he - 5.4) <= 0.7 &&
                    std::abs(med_hi - 3.0) <= 0.7;
    out << "medians over 5 seeds: H = " << med_h << " (want 8.5 +- 1.0), He = " << med_he
        << " (want 5.4 +- 0.7), Hi = " << med_hi << " (want 3.0 +- 0.7)";
    if (!ok) {
        out << "\n      diagnosis: He under nmu denominator = " << median(he_nmu)
            << "; He with both orientations counted (2x) = " << 2.0 * med_he
            << "; H with both orientations = " << 2.0 * med_he + med_hi;
    }
    return ok;
}

bool criterion6_eax_fuzz(std::ostream& out) {
    Rng rng(1006);
    int crossovers = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 8 + static_cast<int>(rand_below(rng, 53));  // 8..60
        const Instance inst = random_instance(rng, n, 2, 30);
        const Tour a = random_tour(rng, n);
        const Tour b = random_tour(rng, n);

        const auto cyc = build_ab_cycle(a, b, rng);
        Tour child = a;
        std::vector<Edge> repairs;
        if (cyc) {
            child = merge_subtours(inst, apply_ab_cycle(a, *cyc), &repairs);
        }
        if (!is_valid_tour(child.order, n)) {
            out << "invalid child at trial " << trial;
            return false;
        }

        std::vector<Edge> allowed = tour_edges(a);
        const std::vector<Edge> eb = tour_edges(b);
        allowed.insert(allowed.end(), eb.begin(), eb.end());
        allowed.insert(allowed.end(), repairs.begin(), repairs.end());
        std::sort(allowed.begin(), allowed.end());
        for (const Edge& e : tour_edges(child)) {
            if (!std::binary_search(allowed.begin(), allowed.end(), e)) {
                out << "edge " << e.u << "-" << e.v << " of the child traces to no parent "
                    << "and no repair at trial " << trial;
                return false;
            }
        }
        ++crossovers;
    }
    out << crossovers << " crossovers on 8..60 cities: Hamiltonian, city-1 start, "
        << "all edges accounted for";
    return true;
}

bool criterion7_one_plus_one_contract(std::ostream& out) {
    Rng rng(1007);
    int runs = 0;
    int dp_optimal = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rand_below(rng, 5));
        const int m = 1 + static_cast<int>(rand_below(rng, 10));
        const Instance inst = random_instance(rng, n, m, 40);
        const Tour tour = random_tour(rng, n);

        PackingList seed(m);
        for (int i = 1; i <= m; ++i) {
            if (rand_chance(rng, 0.3) &&
                seed.total_weight() + inst.item(i).weight <= inst.capacity()) {
                seed.set(inst, i, true);
            }
        }
        const double dp_z = dp_pack_full(inst, tour).value;

        OnePlusOneStats stats;
        const PackingList result = one_plus_one_ea(inst, tour, seed,
                                                   PackingBudget{2LL * m}, rng, &stats);
        if (stats.evaluations != 2LL * m) {
            out << "evaluation count " << stats.evaluations << " != 2m = " << 2 * m;
            return false;
        }
        for (std::size_t k = 1; k < stats.accepted_z.size(); ++k) {
            if (stats.accepted_z[k] <= stats.accepted_z[k - 1]) {
                out << "acceptance chain not increasing at step " << k;
                return false;
            }
        }
        const double result_z = evaluate(inst, tour, result);
        if (result_z > dp_z + 1e-9) {
            out << "EA result " << result_z << " beats the DP optimum " << dp_z;
            return false;
        }
        ++runs;
        if (std::abs(result_z - dp_z) <= 1e-9) {
            ++dp_optimal;
        }
    }
    out << runs << " runs: budget exact, chain monotone, never above DP ("
        << dp_optimal << " reached the optimum)";
    return true;
}

bool criterion8_robustness_oracle(std::ostream& out) {
    Rng rng(1008);
    const Instance inst = instance_from_text(kSixCityInstance);
    for (int trial = 0; trial < 200; ++trial) {
        const int size = 1 + static_cast<int>(rand_below(rng, 8));
        std::vector<TtpSolution> pop;
        for (int s = 0; s < size; ++s) {
            const Tour tour = random_tour(rng, 6);
            PackingList packing(inst.num_items());
            for (int i = 1; i <= inst.num_items(); ++i) {
                if (rand_chance(rng, 0.5) &&
                    packing.total_weight() + inst.item(i).weight <= inst.capacity()) {
                    packing.set(inst, i, true);
                }
            }
            pop.push_back(make_solution(inst, tour, packing));
        }
        const auto [e, i] = naive_robustness(pop);
        if (std::abs(edge_robustness(pop) - e) > 1e-12 ||
            std::abs(item_robustness(pop) - i) > 1e-12) {
            out << "mismatch against the naive double loop at trial " << trial;
            return false;
        }
    }

    std::vector<TtpSolution> same(4, make_solution(inst, Tour::identity(6),
                                                   PackingList(inst.num_items())));
    if (edge_robustness(same) != 0.0 || item_robustness(same) != 0.0) {
        out << "identical population must score (0, 0)";
        return false;
    }
    out << "200 random populations match the naive recomputation; identical case is (0, 0)";
    return true;
}

bool criterion9_determinism(std::ostream& out) {
    const Instance inst = parse_instance_file(kFixturePath);
    const TtpSolution seed = reference_solution(inst);

    const fs::path scratch = fs::temp_directory_path() / "ttpedo_acceptance_det";
    fs::remove_all(scratch);
    fs::create_directories(scratch);
    const fs::path seed_path = scratch / "seed.json";
    {
        std::ofstream f(seed_path);
        f << solution_to_json(seed) << "\n";
    }

    RunOptions opts;
    opts.instance_path = kFixturePath;
    opts.seed_solution_path = seed_path.string();
    opts.cfg = instance1_config(42);
    opts.cfg.iterations = 300;

    std::ostringstream sink;
    opts.out_dir = (scratch / "a").string();
    cmd_run(opts, sink);
    opts.out_dir = (scratch / "b").string();
    cmd_run(opts, sink);

    const auto slurp = [](const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const bool same_traj = slurp(scratch / "a" / "trajectory.csv") ==
                           slurp(scratch / "b" / "trajectory.csv");
    const bool same_pop = slurp(scratch / "a" / "population.jsonl") ==
                          slurp(scratch / "b" / "population.jsonl");
    fs::remove_all(scratch);
    out << "trajectory bytes " << (same_traj ? "identical" : "DIFFER") << ", population "
        << "bytes " << (same_pop ? "identical" : "DIFFER");
    return same_traj && same_pop;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::strcmp(argv[1], "--print-reference") == 0) {
        const Instance inst = parse_instance_file(kFixturePath);
        const TtpSolution seed = reference_solution(inst);
        std::printf("instance: %s\n", inst.name().c_str());
        std::printf("tour length: %lld\n", tour_length(inst, seed.tour));
        std::printf("z*: %.17g\n", seed.z);
        std::printf("items packed: %d/%d\n", seed.packing.selected_count(),
                    inst.num_items());
        if (argc > 2) {
            std::ofstream f(argv[2]);
            f << solution_to_json(seed) << "\n";
            std::printf("seed snapshot written to %s\n", argv[2]);
        }
        return 0;
    }

    struct Criterion {
        int id;
        const char* label;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "DP optimality vs exhaustive enumeration", criterion1_dp_oracle},
        {2, "entropy hand values", criterion2_entropy_hand_values},
        {3, "survivor selection vs full recomputation", criterion3_survivor_selection},
        {4, "monotone entropy and constraint safety over 10^4 iterations",
         criterion4_monotone_run},
        {5, "desk-scale entropy reproduction on instance 1", criterion5_table2_vicinity},
        {6, "EAX validity fuzz", criterion6_eax_fuzz},
        {7, "(1+1)EA contract", criterion7_one_plus_one_contract},
        {8, "robustness metrics vs naive recomputation", criterion8_robustness_oracle},
        {9, "byte-identical artifacts across invocations", criterion9_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        if (!ok) {
            ++failures;
        }
        std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL", c.id, c.label,
                    detail.str().c_str());
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    } else {
        std::printf("all %zu criteria passed\n", criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
