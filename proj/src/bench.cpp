#include "famcake/bench.hpp"

#include "famcake/prng.hpp"
#include "famcake/protocols.hpp"

#include <chrono>
#include <stdexcept>

namespace famcake {

namespace {

ProtocolResult run_protocol(const Instance& inst, const std::string& criterion,
                            const std::string& method) {
    if (criterion == "avg" || criterion == "average") {
        return divide_average(inst);
    }
    if (criterion == "unan" || criterion == "unanimous") {
        return divide_unanimous(inst, method.empty() ? UnanimousMethod::recursive
                                                     : parse_unanimous_method(method));
    }
    if (criterion == "dem" || criterion == "democratic") {
        if (method == "two") return divide_democratic_two(inst);
        if (method.empty()) {
            return inst.family_count() == 2 && inst.equal_entitlements()
                       ? divide_democratic_two(inst)
                       : divide_democratic_k(inst, DemocraticMode::equal);
        }
        return divide_democratic_k(inst, parse_democratic_mode(method));
    }
    throw std::invalid_argument("bench: unknown criterion '" + criterion + "'");
}

Criterion own_criterion(const std::string& criterion) {
    return parse_criterion(criterion == "avg" ? "average"
                           : criterion == "unan" ? "unanimous"
                           : criterion == "dem" ? "democratic"
                                                : criterion);
}

} // namespace

std::vector<BenchConfig> default_bench_configs() {
    // The three criteria side by side, equal entitlements, plus the weighted
    // variants where a protocol supports them.
    return {
        {"avg-k2", 2, {3, 3}, 3, "avg", "", false},
        {"avg-k4", 4, {2, 2, 2, 2}, 3, "avg", "", false},
        {"avg-k3-weighted", 3, {2, 2, 2}, 3, "avg", "", true},
        {"unan-choose-k2", 2, {3, 3}, 3, "unan", "choose", false},
        {"unan-recursive-k4", 4, {2, 2, 2, 2}, 3, "unan", "recursive", false},
        {"unan-recursive-k3-weighted", 3, {2, 2, 2}, 3, "unan", "recursive", true},
        {"dem-two-k2", 2, {3, 3}, 3, "dem", "two", false},
        {"dem-equal-k4", 4, {3, 3, 3, 3}, 3, "dem", "equal", false},
        {"dem-entitled-k3-weighted", 3, {2, 2, 2}, 3, "dem", "entitled", true},
    };
}

std::vector<BenchConfig> bench_configs_from_json(const jsonio::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("bench config: expected a top-level array");
    }
    std::vector<BenchConfig> configs;
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        const std::string at = "config[" + std::to_string(i) + "]";
        if (!e.is_object()) throw std::invalid_argument(at + ": expected an object");
        BenchConfig cfg;
        cfg.name = e.value("name", "config" + std::to_string(i));
        cfg.k = e.value("k", 2);
        cfg.family_sizes = e.value("family_sizes", std::vector<int>{});
        if (cfg.family_sizes.empty()) {
            cfg.family_sizes.assign(static_cast<size_t>(cfg.k), e.value("family_size", 2));
        }
        cfg.max_segments = e.value("max_segments", 3);
        if (!e.contains("criterion")) {
            throw std::invalid_argument(at + ": missing field 'criterion'");
        }
        cfg.criterion = e["criterion"].get<std::string>();
        cfg.method = e.value("method", "");
        cfg.unequal_weights = e.value("unequal_weights", false);
        configs.push_back(std::move(cfg));
    }
    return configs;
}

jsonio::json run_bench(const std::vector<BenchConfig>& configs, const BenchOptions& options) {
    jsonio::json trials = jsonio::json::array();
    jsonio::json aggregates = jsonio::json::array();
    bool all_sound = true;

    SplitMix64 seeder(options.seed);
    for (size_t c = 0; c < configs.size(); ++c) {
        const BenchConfig& cfg = configs[c];
        long long comp_sum = 0;
        long long comp_max = 0;
        bool config_sound = true;
        for (int t = 0; t < options.trials; ++t) {
            const uint64_t trial_seed = seeder.next();
            Instance inst =
                cfg.unequal_weights
                    ? gen_random(cfg.k, cfg.family_sizes, cfg.max_segments, trial_seed,
                                 gen_random_weights(cfg.k, trial_seed ^ 0x5DEECE66DULL))
                    : gen_random(cfg.k, cfg.family_sizes, cfg.max_segments, trial_seed);

            const auto start = std::chrono::steady_clock::now();
            ProtocolResult result = run_protocol(inst, cfg.criterion, cfg.method);
            const auto elapsed = std::chrono::steady_clock::now() - start;

            FairnessReport report = evaluate(inst, result.allocation);
            const bool sound = report.verdict(own_criterion(cfg.criterion));
            config_sound = config_sound && sound;

            jsonio::json trial{{"config", cfg.name},
                               {"trial", t},
                               {"seed", trial_seed},
                               {"k", cfg.k},
                               {"n", inst.total_agents()},
                               {"criterion", cfg.criterion},
                               {"method", cfg.method},
                               {"comp", result.comp},
                               {"impl_bound", result.impl_bound},
                               {"sound", sound}};
            trial["theory_bound"] =
                result.theory_bound ? jsonio::json(*result.theory_bound) : jsonio::json(nullptr);
            jsonio::json verdicts;
            for (const auto& [criterion, ok] : report.verdicts) {
                verdicts[criterion_name(criterion)] = ok;
            }
            trial["verdicts"] = verdicts;
            if (options.timings) {
                trial["wall_time_us"] =
                    std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
            }
            trials.push_back(std::move(trial));

            comp_sum += result.comp;
            comp_max = std::max<long long>(comp_max, result.comp);
        }
        all_sound = all_sound && config_sound;
        aggregates.push_back({{"config", cfg.name},
                              {"trials", options.trials},
                              {"mean_comp", Rational(comp_sum, options.trials).str()},
                              {"max_comp", comp_max},
                              {"sound", config_sound}});
    }
    return {{"seed", options.seed},
            {"trials_per_config", options.trials},
            {"trials", trials},
            {"aggregates", aggregates},
            {"sound", all_sound}};
}

} // namespace famcake
