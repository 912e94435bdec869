#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ttpedo/solution.hpp"

namespace ttpedo {

/// Solution snapshot record, one JSON object:
/// { "tour": [city indices], "packing": [selected item indices], "z": number }
std::string solution_to_json(const TtpSolution& solution);

/// Parse and validate a snapshot against the instance. The tour must be a
/// permutation starting at city 1, the packing feasible, and the recorded z
/// must match re-evaluation.
TtpSolution solution_from_json(const Instance& inst, const std::string& text);

TtpSolution read_solution_file(const Instance& inst, const std::string& path);

/// Population files hold one snapshot per line (JSONL).
std::vector<TtpSolution> read_population_jsonl(const Instance& inst, std::istream& in);
std::vector<TtpSolution> read_population_file(const Instance& inst, const std::string& path);
std::string population_to_jsonl(const std::vector<TtpSolution>& population);

}  // namespace ttpedo
