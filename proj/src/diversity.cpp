#include "ttpedo/diversity.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ttpedo {

std::string to_string(FitnessMode mode) {
    switch (mode) {
        case FitnessMode::Total: return "h";
        case FitnessMode::Edges: return "he";
        case FitnessMode::Items: return "hi";
    }
    return "h";
}

FitnessMode fitness_mode_from_string(const std::string& s) {
    if (s == "h") return FitnessMode::Total;
    if (s == "he") return FitnessMode::Edges;
    if (s == "hi") return FitnessMode::Items;
    throw std::invalid_argument("unknown fitness mode '" + s + "' (expected h, he, hi)");
}

std::string to_string(EdgeDenominator d) {
    return d == EdgeDenominator::TwoNMu ? "2nmu" : "nmu";
}

EdgeDenominator edge_denominator_from_string(const std::string& s) {
    if (s == "2nmu") return EdgeDenominator::TwoNMu;
    if (s == "nmu") return EdgeDenominator::NMu;
    throw std::invalid_argument("unknown edge denominator '" + s + "' (expected 2nmu, nmu)");
}

namespace {

// -(c/D) ln(c/D) for a frequency c > 0; zero-frequency terms vanish.
inline double entropy_term(long long c, double denom) {
    if (c <= 0) {
        return 0.0;
    }
    const double p = static_cast<double>(c) / denom;
    return -p * std::log(p);
}

inline double c_ln_c(long long c) {
    return c > 1 ? static_cast<double>(c) * std::log(static_cast<double>(c)) : 0.0;
}

}  // namespace

DiversityIndex::DiversityIndex(int num_cities, int num_items, EdgeDenominator denom)
    : n_(num_cities), m_(num_items), denom_(denom), item_freq_(num_items + 1, 0),
      edge_hist_(2, 0), item_hist_(2, 0) {
    if (num_cities < 3) {
        throw std::invalid_argument("diversity index needs at least 3 cities");
    }
}

void DiversityIndex::add(const Tour& tour, const PackingList& packing) {
    ++mu_;
    const std::size_t need = static_cast<std::size_t>(mu_) + 1;
    if (edge_hist_.size() < need + 1) {
        edge_hist_.resize(need + 1, 0);
        item_hist_.resize(need + 1, 0);
    }
    const int n = tour.size();
    for (int i = 0; i < n; ++i) {
        const int c = edge_freq_[make_edge(tour.order[i], tour.order[(i + 1) % n])]++;
        if (c > 0) {
            --edge_hist_[c];
        }
        ++edge_hist_[c + 1];
    }
    for (int i = 1; i <= m_; ++i) {
        if (packing.selected(i)) {
            const int c = item_freq_[i]++;
            if (c > 0) {
                --item_hist_[c];
            }
            ++item_hist_[c + 1];
            ++item_total_;
        }
    }
}

void DiversityIndex::remove(const Tour& tour, const PackingList& packing) {
    if (mu_ <= 0) {
        throw std::logic_error("removing from an empty diversity index");
    }
    --mu_;
    const int n = tour.size();
    for (int i = 0; i < n; ++i) {
        const auto it = edge_freq_.find(make_edge(tour.order[i], tour.order[(i + 1) % n]));
        if (it == edge_freq_.end() || it->second <= 0) {
            throw std::logic_error("removing a tour that was never indexed");
        }
        const int c = it->second--;
        --edge_hist_[c];
        if (c > 1) {
            ++edge_hist_[c - 1];
        }
    }
    for (int i = 1; i <= m_; ++i) {
        if (packing.selected(i)) {
            const int c = item_freq_[i]--;
            if (c <= 0) {
                throw std::logic_error("removing a packing that was never indexed");
            }
            --item_hist_[c];
            if (c > 1) {
                ++item_hist_[c - 1];
            }
            --item_total_;
        }
    }
}

int DiversityIndex::edge_frequency(const Edge& e) const {
    const auto it = edge_freq_.find(e);
    return it == edge_freq_.end() ? 0 : it->second;
}

double DiversityIndex::edge_denom_for(int mu) const {
    const double base = static_cast<double>(n_) * static_cast<double>(mu);
    return denom_ == EdgeDenominator::TwoNMu ? 2.0 * base : base;
}

double DiversityIndex::edge_entropy_at(int mu) const {
    if (mu <= 0) {
        return 0.0;
    }
    const double denom = edge_denom_for(mu);
    double h = 0.0;
    for (std::size_t c = 1; c < edge_hist_.size(); ++c) {
        if (edge_hist_[c] != 0) {
            h += static_cast<double>(edge_hist_[c]) * entropy_term(c, denom);
        }
    }
    return h;
}

double DiversityIndex::edge_entropy() const { return edge_entropy_at(mu_); }

double DiversityIndex::item_entropy() const {
    if (item_total_ <= 0) {
        return 0.0;
    }
    // sum -(f/F) ln(f/F) = ln F - (sum f ln f) / F
    double g = 0.0;
    for (std::size_t c = 2; c < item_hist_.size(); ++c) {
        if (item_hist_[c] != 0) {
            g += static_cast<double>(item_hist_[c]) * c_ln_c(c);
        }
    }
    const double f_total = static_cast<double>(item_total_);
    return std::log(f_total) - g / f_total;
}

double DiversityIndex::total_entropy() const { return edge_entropy() + item_entropy(); }

double DiversityIndex::entropy_without(const Tour& tour, const PackingList& packing,
                                       FitnessMode mode) const {
    assert(mu_ >= 1);
    const int mu_after = mu_ - 1;
    if (mu_after == 0) {
        return 0.0;
    }

    double edge_part = 0.0;
    if (mode != FitnessMode::Items) {
        const double denom = edge_denom_for(mu_after);
        double h = 0.0;
        for (std::size_t c = 1; c < edge_hist_.size(); ++c) {
            if (edge_hist_[c] != 0) {
                h += static_cast<double>(edge_hist_[c]) * entropy_term(c, denom);
            }
        }
        const int n = tour.size();
        for (int i = 0; i < n; ++i) {
            const int f = edge_frequency(make_edge(tour.order[i], tour.order[(i + 1) % n]));
            h += entropy_term(f - 1, denom) - entropy_term(f, denom);
        }
        edge_part = h;
    }

    double item_part = 0.0;
    if (mode != FitnessMode::Edges) {
        double g = 0.0;
        for (std::size_t c = 2; c < item_hist_.size(); ++c) {
            if (item_hist_[c] != 0) {
                g += static_cast<double>(item_hist_[c]) * c_ln_c(c);
            }
        }
        long long f_after = item_total_;
        for (int i = 1; i <= m_; ++i) {
            if (packing.selected(i)) {
                const int f = item_freq_[i];
                g += c_ln_c(f - 1) - c_ln_c(f);
                --f_after;
            }
        }
        if (f_after > 0) {
            const double ft = static_cast<double>(f_after);
            item_part = std::log(ft) - g / ft;
        }
    }

    switch (mode) {
        case FitnessMode::Total: return edge_part + item_part;
        case FitnessMode::Edges: return edge_part;
        case FitnessMode::Items: return item_part;
    }
    return 0.0;
}

std::vector<double> removal_entropies(const DiversityIndex& idx,
                                      std::span<const TtpSolution> members,
                                      FitnessMode mode) {
    if (static_cast<int>(members.size()) != idx.population_size()) {
        throw std::invalid_argument("member list does not match the diversity index");
    }
    std::vector<double> out;
    out.reserve(members.size());
    for (const TtpSolution& sol : members) {
        out.push_back(idx.entropy_without(sol.tour, sol.packing, mode));
    }
    return out;
}

std::size_t select_removal(const DiversityIndex& idx, std::span<const TtpSolution> members,
                           FitnessMode mode) {
    if (members.empty()) {
        throw std::invalid_argument("select_removal on empty population");
    }
    const std::vector<double> h = removal_entropies(idx, members, mode);
    std::size_t best = 0;
    for (std::size_t q = 1; q < h.size(); ++q) {
        if (h[q] > h[best]) {
            best = q;
        }
    }
    return best;
}

}  // namespace ttpedo
