#pragma once

#include "padiclinv/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace padiclinv {

struct SuiteConfig {
    i64 p = 5;
    int prec = 8;
    int m = 2;
    int n = 3;
    i64 samples = 10000;
    std::uint64_t seed = 42;
};

// throws std::invalid_argument on a non-prime p, p = 2, or prec < m + 4
void validate(const SuiteConfig& cfg);

struct Entry {
    std::string suite;
    std::string id;
    std::string anchor;   // the statement being checked
    Json parameters = Json::object();
    bool pass = false;
    Json counterexample;  // null when none
    Json stats = Json::object();
    double seconds = 0;
};

struct Task {
    std::string suite;
    std::string id;
    std::function<Entry()> run;
};

std::vector<std::string> suite_names();
std::vector<Task> suite_tasks(const std::string& suite, const SuiteConfig& cfg);
// Runs on a pool of jobs threads; the result order is the task order.
std::vector<Entry> run_tasks(const std::vector<Task>& tasks, int jobs);
Json report_json(const SuiteConfig& cfg, const std::vector<std::string>& suites, const std::vector<Entry>& entries,
                 bool timings);

}  // namespace padiclinv
