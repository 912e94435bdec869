#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ttpedo/solution.hpp"
#include "ttpedo/tour_ops.hpp"

namespace ttpedo {

/// Which entropy drives survivor selection: combined, edges only, items only.
enum class FitnessMode { Total, Edges, Items };

std::string to_string(FitnessMode mode);
FitnessMode fitness_mode_from_string(const std::string& s);

/// Normalisation of the edge-entropy terms. TwoNMu keeps the 2nμ
/// denominator (edge "probabilities" sum to 1/2); NMu is the normalised
/// variant for sensitivity checks.
enum class EdgeDenominator { TwoNMu, NMu };

std::string to_string(EdgeDenominator d);
EdgeDenominator edge_denominator_from_string(const std::string& s);

/// Frequency tables of tour edges and packed items over a population, with
/// the entropy bookkeeping maintained incrementally. Entropies are computed
/// from per-frequency histograms, so their floating-point value does not
/// depend on insertion order.
class DiversityIndex {
public:
    DiversityIndex(int num_cities, int num_items,
                   EdgeDenominator denom = EdgeDenominator::TwoNMu);

    void add(const Tour& tour, const PackingList& packing);
    void remove(const Tour& tour, const PackingList& packing);

    int population_size() const { return mu_; }
    int num_cities() const { return n_; }
    int num_items() const { return m_; }
    EdgeDenominator edge_denominator() const { return denom_; }

    int edge_frequency(const Edge& e) const;
    int item_frequency(int item) const { return item_freq_[item]; }
    long long item_frequency_total() const { return item_total_; }

    /// H_e = sum over present edges of -(f/D) ln(f/D), D = 2nμ (or nμ).
    double edge_entropy() const;
    /// H_i = sum over present items of -(f/F) ln(f/F), F = total frequency.
    double item_entropy() const;
    /// H = H_e + H_i.
    double total_entropy() const;

    /// Entropy of the population without one member, at the denominators of
    /// the reduced size. The member must currently be indexed.
    double entropy_without(const Tour& tour, const PackingList& packing,
                           FitnessMode mode) const;

private:
    double edge_denom_for(int mu) const;
    double edge_entropy_at(int mu) const;

    int n_;
    int m_;
    EdgeDenominator denom_;
    int mu_ = 0;
    std::unordered_map<Edge, int, EdgeHash> edge_freq_;
    std::vector<int> item_freq_;        // 1..m
    std::vector<long long> edge_hist_;  // [c] = number of edges with frequency c
    std::vector<long long> item_hist_;
    long long item_total_ = 0;  // F = sum of item frequencies
};

/// Post-removal entropy for every member of a (μ+1)-sized population.
std::vector<double> removal_entropies(const DiversityIndex& idx,
                                      std::span<const TtpSolution> members,
                                      FitnessMode mode);

/// Index of the member whose removal leaves the most diverse population;
/// ties break on the smallest index.
std::size_t select_removal(const DiversityIndex& idx, std::span<const TtpSolution> members,
                           FitnessMode mode);

}  // namespace ttpedo
