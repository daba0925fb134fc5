#include "famcake/bench.hpp"

#include <doctest.h>

using namespace famcake;

TEST_CASE("bench reports are byte-identical for a fixed seed and sound") {
    BenchOptions options;
    options.trials = 3;
    options.seed = 12345;
    std::vector<BenchConfig> configs{{"avg", 2, {2, 2}, 3, "avg", "", false},
                                     {"unan", 2, {2, 1}, 3, "unan", "recursive", false},
                                     {"dem", 2, {3, 3}, 3, "dem", "two", false},
                                     {"dem-w", 3, {2, 2, 2}, 3, "dem", "entitled", true}};
    jsonio::json r1 = run_bench(configs, options);
    jsonio::json r2 = run_bench(configs, options);
    CHECK(jsonio::dump(r1) == jsonio::dump(r2));
    CHECK(r1["sound"] == true);
    CHECK(r1["trials"].size() == 12);
    CHECK(r1["aggregates"].size() == 4);
    for (const auto& trial : r1["trials"]) {
        CHECK(trial["sound"] == true);
        CHECK_FALSE(trial.contains("wall_time_us")); // timings off by default
    }

    options.timings = true;
    jsonio::json timed = run_bench(configs, options);
    CHECK(timed["trials"][0].contains("wall_time_us"));
}

TEST_CASE("bench configs parse from JSON") {
    auto configs = bench_configs_from_json(jsonio::json::parse(
        R"([{"name":"x","k":3,"family_sizes":[1,2,1],"criterion":"avg"},
            {"criterion":"dem","method":"equal"}])"));
    REQUIRE(configs.size() == 2);
    CHECK(configs[0].k == 3);
    CHECK(configs[1].name == "config1");
    CHECK(configs[1].method == "equal");
    CHECK_THROWS_AS(bench_configs_from_json(jsonio::json::parse(R"([{"k":2}])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(bench_configs_from_json(jsonio::json::parse(R"({"k":2})")),
                    std::invalid_argument);
}

TEST_CASE("the default comparison table runs sound") {
    BenchOptions options;
    options.trials = 2;
    options.seed = 7;
    jsonio::json report = run_bench(default_bench_configs(), options);
    CHECK(report["sound"] == true);
}
