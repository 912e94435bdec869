#include "ttpedo/snapshot.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ttpedo {

std::string solution_to_json(const TtpSolution& solution) {
    nlohmann::ordered_json j;
    j["tour"] = solution.tour.order;
    j["packing"] = solution.packing.selected_items();
    j["z"] = solution.z;
    return j.dump();
}

TtpSolution solution_from_json(const Instance& inst, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid solution JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("tour") || !j.contains("packing") ||
        !j.contains("z")) {
        throw ValidationError("solution JSON needs fields tour, packing, z");
    }

    Tour tour;
    try {
        tour.order = j["tour"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError("solution field 'tour' must be an array of city indices");
    }
    validate_tour(tour, inst.num_cities());

    std::vector<int> selected;
    try {
        selected = j["packing"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError("solution field 'packing' must be an array of item indices");
    }
    PackingList packing = PackingList::from_selected(inst, selected);

    if (!j["z"].is_number()) {
        throw ValidationError("solution field 'z' must be a number");
    }
    const double recorded_z = j["z"].get<double>();
    const double z = evaluate(inst, tour, packing);
    if (std::abs(z - recorded_z) > 1e-6 * std::max(1.0, std::abs(z))) {
        throw ValidationError("solution records z = " + std::to_string(recorded_z) +
                              " but evaluates to " + std::to_string(z));
    }
    return TtpSolution{std::move(tour), std::move(packing), z};
}

TtpSolution read_solution_file(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open solution file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return solution_from_json(inst, buffer.str());
}

std::vector<TtpSolution> read_population_jsonl(const Instance& inst, std::istream& in) {
    std::vector<TtpSolution> population;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            population.push_back(solution_from_json(inst, line));
        } catch (const ValidationError& e) {
            throw ValidationError("population line " + std::to_string(lineno) + ": " +
                                  e.what());
        }
    }
    return population;
}

std::vector<TtpSolution> read_population_file(const Instance& inst, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open population file: " + path);
    }
    return read_population_jsonl(inst, in);
}

std::string population_to_jsonl(const std::vector<TtpSolution>& population) {
    std::string out;
    for (const TtpSolution& sol : population) {
        out += solution_to_json(sol);
        out += '\n';
    }
    return out;
}

}  // namespace ttpedo
