#pragma once

#include <vector>

#include "ttpedo/instance.hpp"

namespace ttpedo {

/// Raised when a tour, packing list, or solution snapshot is inconsistent
/// with the instance it is used with.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A permutation of the cities 1..n starting at city 1 (the thief's start).
struct Tour {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    int city_at(int pos) const { return order[pos]; }

    static Tour identity(int n);

    bool operator==(const Tour&) const = default;
};

/// Throws ValidationError unless order is a bijection on 1..n with order[0] == 1.
void validate_tour(const Tour& tour, int n);

/// Per-item inclusion bits with cached total weight and profit.
class PackingList {
public:
    PackingList() = default;
    explicit PackingList(int num_items) : bits_(num_items, 0) {}

    static PackingList from_selected(const Instance& inst, const std::vector<int>& items);

    int num_items() const { return static_cast<int>(bits_.size()); }
    bool selected(int item) const { return bits_[item - 1] != 0; }
    long long total_weight() const { return weight_; }
    double total_profit() const { return profit_; }
    int selected_count() const { return count_; }

    void set(const Instance& inst, int item, bool on);
    void flip(const Instance& inst, int item) { set(inst, item, !selected(item)); }

    /// Selected item indices in ascending order.
    std::vector<int> selected_items() const;

    bool operator==(const PackingList& other) const { return bits_ == other.bits_; }

private:
    std::vector<unsigned char> bits_;
    long long weight_ = 0;
    double profit_ = 0.0;
    int count_ = 0;
};

/// Total CEIL_2D length of the closed tour.
long long tour_length(const Instance& inst, const Tour& tour);

/// Weight carried when leaving each tour position: entry i is the total
/// weight of selected items at cities visited up to and including position i.
/// Non-decreasing; the last entry equals the packing's total weight.
std::vector<long long> cumulative_weights(const Instance& inst, const Tour& tour,
                                          const PackingList& packing);

/// The TTP objective: collected profit minus rent for the weight-dependent
/// travel time. Throws ValidationError if the packing exceeds capacity.
double evaluate(const Instance& inst, const Tour& tour, const PackingList& packing);

struct TtpSolution {
    Tour tour;
    PackingList packing;
    double z = 0.0;
};

/// Validates both parts against the instance and caches the objective.
TtpSolution make_solution(const Instance& inst, Tour tour, PackingList packing);

}  // namespace ttpedo
