#pragma once

// Canned verification suites shared by the CLI and the acceptance
// runner. Each returns a JSON report with measured numbers and one
// pass flag per check; identical seeds give byte-identical reports.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qadia::suites {

using nlohmann::json;

inline constexpr int schema_version = 1;

json suite_theorem1(std::uint64_t seed, int random_instances = 10000, int ghz_instances = 100);
json suite_gadget(const std::vector<double>& deltas = {0.2, 0.1, 0.05});
json suite_holonomy(const std::vector<double>& t_list = {50.0, 200.0, 800.0},
                    std::uint64_t seed = 12345, int random_states = 20);
json suite_history(double t_single = 150.0, double t_cycle = 300.0);

json run_suite(const std::string& name, std::uint64_t seed);

bool suite_passed(const json& report);

} // namespace qadia::suites
