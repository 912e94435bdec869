#include "ttpedo/solution.hpp"

#include <numeric>
#include <string>

namespace ttpedo {

Tour Tour::identity(int n) {
    Tour t;
    t.order.resize(n);
    std::iota(t.order.begin(), t.order.end(), 1);
    return t;
}

void validate_tour(const Tour& tour, int n) {
    if (tour.size() != n) {
        throw ValidationError("tour has " + std::to_string(tour.size()) +
                              " cities, instance has " + std::to_string(n));
    }
    if (tour.order.empty() || tour.order[0] != 1) {
        throw ValidationError("tour must start at city 1");
    }
    std::vector<bool> seen(n, false);
    for (int city : tour.order) {
        if (city < 1 || city > n) {
            throw ValidationError("tour contains invalid city " + std::to_string(city));
        }
        if (seen[city - 1]) {
            throw ValidationError("tour visits city " + std::to_string(city) + " twice");
        }
        seen[city - 1] = true;
    }
}

PackingList PackingList::from_selected(const Instance& inst, const std::vector<int>& items) {
    PackingList p(inst.num_items());
    for (int i : items) {
        if (i < 1 || i > inst.num_items()) {
            throw ValidationError("packing selects invalid item " + std::to_string(i));
        }
        if (p.selected(i)) {
            throw ValidationError("packing selects item " + std::to_string(i) + " twice");
        }
        p.set(inst, i, true);
    }
    return p;
}

void PackingList::set(const Instance& inst, int item, bool on) {
    unsigned char& bit = bits_[item - 1];
    if (static_cast<bool>(bit) == on) {
        return;
    }
    const Item& it = inst.item(item);
    const int sign = on ? 1 : -1;
    weight_ += sign * it.weight;
    profit_ += sign * it.profit;
    count_ += sign;
    bit = on ? 1 : 0;
}

std::vector<int> PackingList::selected_items() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int i = 1; i <= num_items(); ++i) {
        if (selected(i)) {
            out.push_back(i);
        }
    }
    return out;
}

long long tour_length(const Instance& inst, const Tour& tour) {
    const int n = tour.size();
    long long len = 0;
    for (int i = 0; i < n; ++i) {
        len += inst.distance(tour.order[i], tour.order[(i + 1) % n]);
    }
    return len;
}

std::vector<long long> cumulative_weights(const Instance& inst, const Tour& tour,
                                          const PackingList& packing) {
    const int n = tour.size();
    std::vector<long long> weight_at_city(n + 1, 0);
    for (int i = 1; i <= inst.num_items(); ++i) {
        if (packing.selected(i)) {
            weight_at_city[inst.item(i).home_city] += inst.item(i).weight;
        }
    }
    std::vector<long long> cum(n);
    long long acc = 0;
    for (int pos = 0; pos < n; ++pos) {
        acc += weight_at_city[tour.order[pos]];
        cum[pos] = acc;
    }
    return cum;
}

double evaluate(const Instance& inst, const Tour& tour, const PackingList& packing) {
    if (packing.total_weight() > inst.capacity()) {
        throw ValidationError("packing weight " + std::to_string(packing.total_weight()) +
                              " exceeds capacity " + std::to_string(inst.capacity()));
    }
    const int n = tour.size();
    const std::vector<long long> cum = cumulative_weights(inst, tour, packing);
    // Items are picked up on arrival, so the weight after city x_i applies to
    // the leg leaving x_i; the closing leg carries the full knapsack.
    double time = 0.0;
    for (int pos = 0; pos < n; ++pos) {
        const int d = inst.distance(tour.order[pos], tour.order[(pos + 1) % n]);
        time += d / (inst.v_max() - inst.nu() * static_cast<double>(cum[pos]));
    }
    return packing.total_profit() - inst.rent() * time;
}

TtpSolution make_solution(const Instance& inst, Tour tour, PackingList packing) {
    validate_tour(tour, inst.num_cities());
    if (packing.num_items() != inst.num_items()) {
        throw ValidationError("packing has " + std::to_string(packing.num_items()) +
                              " items, instance has " + std::to_string(inst.num_items()));
    }
    const double z = evaluate(inst, tour, packing);
    return TtpSolution{std::move(tour), std::move(packing), z};
}

}  // namespace ttpedo
