#pragma once

#include "famcake/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace famcake {

// One protocol/instance-shape pairing to benchmark.
struct BenchConfig {
    std::string name;
    int k = 2;
    std::vector<int> family_sizes;
    int max_segments = 3;
    std::string criterion; // avg | unan | dem
    std::string method;    // "" | choose | recursive | two | equal | entitled
    bool unequal_weights = false;
};

struct BenchOptions {
    int trials = 10;
    uint64_t seed = 1;
    bool timings = false; // wall times vary run to run; off keeps reports byte-identical
};

std::vector<BenchConfig> default_bench_configs();
std::vector<BenchConfig> bench_configs_from_json(const jsonio::json& j);

// Runs every config for `trials` seeded instances and returns the report:
// per-trial records (comp, bounds, verdicts) plus per-config aggregates. The
// trial's own criterion verdict is re-checked from scratch; a false verdict
// marks the whole report unsound.
jsonio::json run_bench(const std::vector<BenchConfig>& configs, const BenchOptions& options);

} // namespace famcake
