#include "ttpedo/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

namespace ttpedo {

namespace {

int ceil_2d(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return static_cast<int>(std::ceil(std::sqrt(dx * dx + dy * dy)));
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

Instance::Instance(std::string name, std::vector<Point> cities, std::vector<Item> items,
                   long long capacity, double v_min, double v_max, double rent)
    : name_(std::move(name)),
      cities_(std::move(cities)),
      items_(std::move(items)),
      capacity_(capacity),
      v_min_(v_min),
      v_max_(v_max),
      rent_(rent) {
    const int n = num_cities();
    if (n < 3) {
        throw std::invalid_argument("instance needs at least 3 cities");
    }
    if (capacity_ <= 0) {
        throw std::invalid_argument("knapsack capacity must be positive");
    }
    if (!(v_min_ > 0.0) || !(v_min_ <= v_max_)) {
        throw std::invalid_argument("speeds must satisfy 0 < v_min <= v_max");
    }
    if (rent_ < 0.0) {
        throw std::invalid_argument("renting ratio must be non-negative");
    }
    for (std::size_t i = 0; i < items_.size(); ++i) {
        const Item& it = items_[i];
        if (it.home_city < 2 || it.home_city > n) {
            throw std::invalid_argument("item " + std::to_string(i + 1) +
                                        " assigned to invalid city " +
                                        std::to_string(it.home_city));
        }
        if (it.weight <= 0) {
            throw std::invalid_argument("item " + std::to_string(i + 1) +
                                        " must have positive weight");
        }
        if (it.profit < 0.0) {
            throw std::invalid_argument("item " + std::to_string(i + 1) +
                                        " must have non-negative profit");
        }
    }
    nu_ = (v_max_ - v_min_) / static_cast<double>(capacity_);

    dist_.resize(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u) {
        dist_[static_cast<std::size_t>(u) * n + u] = 0;
        for (int v = u + 1; v < n; ++v) {
            const int d = ceil_2d(cities_[u], cities_[v]);
            dist_[static_cast<std::size_t>(u) * n + v] = d;
            dist_[static_cast<std::size_t>(v) * n + u] = d;
        }
    }
}

bool Instance::operator==(const Instance& other) const {
    return name_ == other.name_ && cities_ == other.cities_ && items_ == other.items_ &&
           capacity_ == other.capacity_ && v_min_ == other.v_min_ &&
           v_max_ == other.v_max_ && rent_ == other.rent_;
}

namespace {

struct HeaderFields {
    std::optional<std::string> name;
    std::optional<int> dimension;
    std::optional<int> num_items;
    std::optional<long long> capacity;
    std::optional<double> v_min;
    std::optional<double> v_max;
    std::optional<double> rent;
    std::optional<std::string> edge_weight_type;
};

long long parse_int(const std::string& text, int line, const char* what) {
    long long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw ParseError(line, std::string(what) + ": expected integer, got '" + text + "'");
    }
    return value;
}

double parse_real(const std::string& text, int line, const char* what) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(text, &pos);
        if (pos != text.size()) {
            throw std::invalid_argument("");
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, std::string(what) + ": expected number, got '" + text + "'");
    }
}

}  // namespace

Instance parse_instance(std::istream& in) {
    HeaderFields hdr;
    std::vector<Point> cities;
    std::vector<Item> items;
    std::vector<bool> city_seen;
    std::vector<bool> item_seen;
    int coords_read = 0;
    int items_read = 0;

    enum class Section { Header, Coords, Items };
    Section section = Section::Header;
    int header_end_line = 0;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line == "EOF") {
            continue;
        }

        if (line.rfind("NODE_COORD_SECTION", 0) == 0) {
            if (section != Section::Header) {
                throw ParseError(lineno, "unexpected NODE_COORD_SECTION");
            }
            if (!hdr.dimension || !hdr.num_items || !hdr.capacity || !hdr.v_min ||
                !hdr.v_max || !hdr.rent || !hdr.edge_weight_type) {
                throw ParseError(lineno, "incomplete header before NODE_COORD_SECTION");
            }
            if (*hdr.dimension < 3) {
                throw ParseError(lineno, "DIMENSION must be at least 3");
            }
            if (*hdr.num_items < 0) {
                throw ParseError(lineno, "NUMBER OF ITEMS must be non-negative");
            }
            if (!(*hdr.v_min > 0.0) || *hdr.v_min > *hdr.v_max) {
                throw ParseError(lineno, "speeds must satisfy 0 < MIN SPEED <= MAX SPEED");
            }
            if (*hdr.rent < 0.0) {
                throw ParseError(lineno, "RENTING RATIO must be non-negative");
            }
            cities.resize(*hdr.dimension);
            city_seen.assign(*hdr.dimension, false);
            items.resize(*hdr.num_items);
            item_seen.assign(*hdr.num_items, false);
            section = Section::Coords;
            header_end_line = lineno;
            continue;
        }
        if (line.rfind("ITEMS SECTION", 0) == 0) {
            if (section != Section::Coords) {
                throw ParseError(lineno, "ITEMS SECTION must follow NODE_COORD_SECTION");
            }
            if (coords_read != static_cast<int>(cities.size())) {
                throw ParseError(lineno, "NODE_COORD_SECTION has " +
                                             std::to_string(coords_read) + " rows, expected " +
                                             std::to_string(cities.size()));
            }
            section = Section::Items;
            continue;
        }

        switch (section) {
            case Section::Header: {
                const auto colon = line.find(':');
                if (colon == std::string::npos) {
                    throw ParseError(lineno, "malformed header line '" + line + "'");
                }
                const std::string key = trim(line.substr(0, colon));
                const std::string value = trim(line.substr(colon + 1));
                if (key == "PROBLEM NAME" || key == "NAME") {
                    hdr.name = value;
                } else if (key == "KNAPSACK DATA TYPE") {
                    // informational only
                } else if (key == "DIMENSION") {
                    hdr.dimension = static_cast<int>(parse_int(value, lineno, "DIMENSION"));
                } else if (key == "NUMBER OF ITEMS") {
                    hdr.num_items =
                        static_cast<int>(parse_int(value, lineno, "NUMBER OF ITEMS"));
                } else if (key == "CAPACITY OF KNAPSACK") {
                    hdr.capacity = parse_int(value, lineno, "CAPACITY OF KNAPSACK");
                    if (*hdr.capacity <= 0) {
                        throw ParseError(lineno, "CAPACITY OF KNAPSACK must be positive");
                    }
                } else if (key == "MIN SPEED") {
                    hdr.v_min = parse_real(value, lineno, "MIN SPEED");
                } else if (key == "MAX SPEED") {
                    hdr.v_max = parse_real(value, lineno, "MAX SPEED");
                } else if (key == "RENTING RATIO") {
                    hdr.rent = parse_real(value, lineno, "RENTING RATIO");
                } else if (key == "EDGE_WEIGHT_TYPE") {
                    if (value != "CEIL_2D") {
                        throw ParseError(lineno, "unsupported EDGE_WEIGHT_TYPE '" + value +
                                                     "' (only CEIL_2D)");
                    }
                    hdr.edge_weight_type = value;
                } else {
                    throw ParseError(lineno, "unknown header key '" + key + "'");
                }
                break;
            }
            case Section::Coords: {
                std::istringstream row(line);
                int idx = 0;
                double x = 0.0, y = 0.0;
                if (!(row >> idx >> x >> y)) {
                    throw ParseError(lineno, "malformed coordinate row '" + line + "'");
                }
                if (idx < 1 || idx > static_cast<int>(cities.size())) {
                    throw ParseError(lineno, "city index " + std::to_string(idx) +
                                                 " outside 1.." +
                                                 std::to_string(cities.size()));
                }
                if (city_seen[idx - 1]) {
                    throw ParseError(lineno, "duplicate city index " + std::to_string(idx));
                }
                city_seen[idx - 1] = true;
                cities[idx - 1] = Point{x, y};
                ++coords_read;
                break;
            }
            case Section::Items: {
                std::istringstream row(line);
                int idx = 0;
                double profit = 0.0;
                long long weight = 0;
                int node = 0;
                if (!(row >> idx >> profit >> weight >> node)) {
                    throw ParseError(lineno, "malformed item row '" + line + "'");
                }
                if (idx < 1 || idx > static_cast<int>(items.size())) {
                    throw ParseError(lineno, "item index " + std::to_string(idx) +
                                                 " outside 1.." + std::to_string(items.size()));
                }
                if (item_seen[idx - 1]) {
                    throw ParseError(lineno, "duplicate item index " + std::to_string(idx));
                }
                if (node == 1) {
                    throw ParseError(lineno, "item " + std::to_string(idx) +
                                                 " assigned to city 1, which holds no items");
                }
                if (node < 2 || node > static_cast<int>(cities.size())) {
                    throw ParseError(lineno, "item " + std::to_string(idx) +
                                                 " assigned to invalid city " +
                                                 std::to_string(node));
                }
                if (weight <= 0) {
                    throw ParseError(lineno, "item " + std::to_string(idx) +
                                                 " must have positive weight");
                }
                if (profit < 0.0) {
                    throw ParseError(lineno, "item " + std::to_string(idx) +
                                                 " must have non-negative profit");
                }
                item_seen[idx - 1] = true;
                items[idx - 1] = Item{profit, weight, node};
                ++items_read;
                break;
            }
        }
    }

    if (section == Section::Header) {
        throw ParseError(lineno, "missing NODE_COORD_SECTION");
    }
    if (section == Section::Coords) {
        if (coords_read != static_cast<int>(cities.size())) {
            throw ParseError(lineno, "NODE_COORD_SECTION has " + std::to_string(coords_read) +
                                         " rows, expected " + std::to_string(cities.size()));
        }
        if (!items.empty()) {
            throw ParseError(lineno, "missing ITEMS SECTION");
        }
    }
    if (items_read != static_cast<int>(items.size())) {
        throw ParseError(lineno, "ITEMS SECTION has " + std::to_string(items_read) +
                                     " rows, expected " + std::to_string(items.size()));
    }

    try {
        return Instance(hdr.name.value_or(""), std::move(cities), std::move(items),
                        *hdr.capacity, *hdr.v_min, *hdr.v_max, *hdr.rent);
    } catch (const std::invalid_argument& e) {
        throw ParseError(header_end_line, e.what());
    }
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path);
    }
    return parse_instance(in);
}

std::string to_ttp_text(const Instance& inst) {
    std::ostringstream out;
    out << "PROBLEM NAME: " << inst.name() << "\n";
    out << "KNAPSACK DATA TYPE: unspecified\n";
    out << "DIMENSION: " << inst.num_cities() << "\n";
    out << "NUMBER OF ITEMS: " << inst.num_items() << "\n";
    out << "CAPACITY OF KNAPSACK: " << inst.capacity() << "\n";
    out << "MIN SPEED: " << format_double(inst.v_min()) << "\n";
    out << "MAX SPEED: " << format_double(inst.v_max()) << "\n";
    out << "RENTING RATIO: " << format_double(inst.rent()) << "\n";
    out << "EDGE_WEIGHT_TYPE: CEIL_2D\n";
    out << "NODE_COORD_SECTION\t(INDEX, X, Y):\n";
    for (int u = 1; u <= inst.num_cities(); ++u) {
        const Point& p = inst.city(u);
        out << u << " " << format_double(p.x) << " " << format_double(p.y) << "\n";
    }
    out << "ITEMS SECTION\t(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):\n";
    for (int i = 1; i <= inst.num_items(); ++i) {
        const Item& it = inst.item(i);
        out << i << " " << format_double(it.profit) << " " << it.weight << " "
            << it.home_city << "\n";
    }
    return out.str();
}

}  // namespace ttpedo
