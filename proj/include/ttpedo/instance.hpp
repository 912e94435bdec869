#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttpedo {

/// Raised on malformed TTP benchmark input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

struct Item {
    double profit = 0.0;
    long long weight = 0;
    int home_city = 0;  // in 2..n; city 1 holds no items

    bool operator==(const Item&) const = default;
};

/// Immutable TTP problem data. City indices run 1..n, item indices 1..m,
/// matching the benchmark file convention. Pairwise CEIL_2D distances are
/// precomputed into a dense table at construction.
class Instance {
public:
    Instance(std::string name, std::vector<Point> cities, std::vector<Item> items,
             long long capacity, double v_min, double v_max, double rent);

    const std::string& name() const { return name_; }
    int num_cities() const { return static_cast<int>(cities_.size()); }
    int num_items() const { return static_cast<int>(items_.size()); }
    long long capacity() const { return capacity_; }
    double v_min() const { return v_min_; }
    double v_max() const { return v_max_; }
    double rent() const { return rent_; }

    /// The weight-to-speed slope (v_max - v_min) / W.
    double nu() const { return nu_; }

    const Point& city(int u) const { return cities_[check_city(u) - 1]; }
    const Item& item(int i) const { return items_[check_item(i) - 1]; }

    /// CEIL_2D distance between cities u and v; symmetric, zero on the
    /// diagonal. Throws std::out_of_range on a bad index.
    int distance(int u, int v) const {
        const int n = num_cities();
        check_city(u);
        check_city(v);
        return dist_[static_cast<std::size_t>(u - 1) * n + (v - 1)];
    }

    bool operator==(const Instance& other) const;

private:
    int check_city(int u) const {
        if (u < 1 || u > num_cities()) {
            throw std::out_of_range("city index " + std::to_string(u) +
                                    " outside 1.." + std::to_string(num_cities()));
        }
        return u;
    }
    int check_item(int i) const {
        if (i < 1 || i > num_items()) {
            throw std::out_of_range("item index " + std::to_string(i) +
                                    " outside 1.." + std::to_string(num_items()));
        }
        return i;
    }

    std::string name_;
    std::vector<Point> cities_;
    std::vector<Item> items_;
    long long capacity_ = 0;
    double v_min_ = 0.0;
    double v_max_ = 0.0;
    double rent_ = 0.0;
    double nu_ = 0.0;
    std::vector<int> dist_;  // dense n*n table
};

/// Parse a TTP benchmark file: header lines (PROBLEM NAME, KNAPSACK DATA
/// TYPE, DIMENSION, NUMBER OF ITEMS, CAPACITY OF KNAPSACK, MIN SPEED, MAX
/// SPEED, RENTING RATIO, EDGE_WEIGHT_TYPE) followed by NODE_COORD_SECTION
/// and ITEMS SECTION. Only EDGE_WEIGHT_TYPE CEIL_2D is supported.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

/// Serialise back to the benchmark text format; parse(to_ttp_text(x)) == x.
std::string to_ttp_text(const Instance& inst);

}  // namespace ttpedo
