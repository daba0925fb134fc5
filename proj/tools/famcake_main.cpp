#include "famcake/bench.hpp"
#include "famcake/errors.hpp"
#include "famcake/exact.hpp"
#include "famcake/json_io.hpp"
#include "famcake/oracle.hpp"
#include "famcake/protocols.hpp"
#include "famcake/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

using famcake::jsonio::json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    out << text;
}

famcake::Instance load_instance(const std::string& path) {
    return famcake::jsonio::parse_instance(read_input(path));
}

famcake::Allocation load_allocation(const std::string& path) {
    return famcake::jsonio::parse_allocation(read_input(path));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"famcake: exact proportional cake-cutting among families"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance (preset or random)");
    std::string gen_preset_name, gen_out;
    long long gen_k = 0, gen_m = 0;
    bool gen_rand = false;
    std::vector<int> gen_sizes;
    int gen_max_segments = 3;
    uint64_t gen_seed = 1;
    std::vector<std::string> gen_weights;
    gen->add_option("--preset", gen_preset_name, "preset name: section2 | thm2 | lemma5");
    gen->add_flag("--random", gen_rand, "generate a seeded random instance");
    gen->add_option("--k", gen_k, "family count (thm2, lemma5, --random)");
    gen->add_option("--m", gen_m, "members per family (lemma5)");
    gen->add_option("--sizes", gen_sizes, "family sizes (--random)")->delimiter(',');
    gen->add_option("--max-breakpoints", gen_max_segments, "max segments per measure (--random)");
    gen->add_option("--seed", gen_seed, "random seed (--random)");
    gen->add_option("--weights", gen_weights, "entitlements as p/q (--random)")->delimiter(',');
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // divide
    auto* divide = app.add_subcommand("divide", "run a division protocol");
    std::string div_criterion, div_method, div_in, div_out;
    divide->add_option("--criterion", div_criterion, "avg | unan | dem")->required();
    divide->add_option("--method", div_method,
                       "unan: choose|recursive; dem: two|equal|entitled (default by instance)");
    divide->add_option("--in", div_in, "instance JSON (default stdin)");
    divide->add_option("--out", div_out, "output file (default stdout)");

    // check
    auto* check = app.add_subcommand("check", "evaluate an allocation against an instance");
    std::string check_in, check_alloc, check_expect, check_out;
    check->add_option("--in", check_in, "instance JSON (default stdin)");
    check->add_option("--alloc", check_alloc, "allocation JSON")->required();
    check->add_option("--expect", check_expect, "exit 1 unless this criterion's verdict is true");
    check->add_option("--out", check_out, "output file (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive minimum-component search");
    std::string ora_criterion, ora_in, ora_out;
    int ora_max_comp = 8, ora_q = 1;
    oracle->add_option("--criterion", ora_criterion, "avg | unan | dem | positivity")->required();
    oracle->add_option("--q", ora_q, "positive members required per family (positivity)");
    oracle->add_option("--max-comp", ora_max_comp, "largest component count to try");
    oracle->add_option("--in", ora_in, "instance JSON (default stdin)");
    oracle->add_option("--out", ora_out, "output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "seeded protocol comparison over random instances");
    std::string bench_config, bench_report;
    famcake::BenchOptions bench_options;
    bench->add_option("--trials", bench_options.trials, "trials per configuration");
    bench->add_option("--seed", bench_options.seed, "master seed");
    bench->add_option("--config", bench_config, "configuration JSON (default: built-in table)");
    bench->add_flag("--timings", bench_options.timings,
                    "include wall times (report no longer byte-stable)");
    bench->add_option("--report", bench_report, "report file (default stdout)");

    // render
    auto* render = app.add_subcommand("render", "render an (instance, allocation) pair");
    std::string ren_in, ren_alloc, ren_format = "text", ren_out;
    render->add_option("--in", ren_in, "instance JSON (default stdin)");
    render->add_option("--alloc", ren_alloc, "allocation JSON")->required();
    render->add_option("--format", ren_format, "text | svg");
    render->add_option("--out", ren_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            std::optional<famcake::Instance> inst;
            if (!gen_preset_name.empty()) {
                std::map<std::string, long long> params;
                if (gen->count("--k")) params["k"] = gen_k;
                if (gen->count("--m")) params["m"] = gen_m;
                inst = famcake::gen_preset(gen_preset_name, params);
            } else if (gen_rand) {
                if (gen_sizes.empty() || !gen->count("--k")) {
                    throw std::invalid_argument("gen --random needs --k and --sizes");
                }
                std::optional<std::vector<famcake::Rational>> weights;
                if (!gen_weights.empty()) {
                    std::vector<famcake::Rational> ws;
                    for (const std::string& w : gen_weights) ws.push_back(famcake::Rational::parse(w));
                    weights = std::move(ws);
                }
                inst = famcake::gen_random(static_cast<int>(gen_k), gen_sizes, gen_max_segments,
                                           gen_seed, weights);
            } else {
                throw std::invalid_argument("gen needs --preset or --random");
            }
            write_output(gen_out, famcake::jsonio::dump(famcake::jsonio::to_json(*inst)));
            return 0;
        }

        if (divide->parsed()) {
            famcake::Instance inst = load_instance(div_in);
            famcake::ProtocolResult result;
            if (div_criterion == "avg" || div_criterion == "average") {
                result = famcake::divide_average(inst);
            } else if (div_criterion == "unan" || div_criterion == "unanimous") {
                result = famcake::divide_unanimous(inst, div_method.empty()
                                                             ? famcake::UnanimousMethod::recursive
                                                             : famcake::parse_unanimous_method(div_method));
            } else if (div_criterion == "dem" || div_criterion == "democratic") {
                if (div_method == "two") {
                    result = famcake::divide_democratic_two(inst);
                } else if (div_method.empty()) {
                    result = inst.family_count() == 2 && inst.equal_entitlements()
                                 ? famcake::divide_democratic_two(inst)
                                 : famcake::divide_democratic_k(
                                       inst, inst.equal_entitlements()
                                                 ? famcake::DemocraticMode::equal
                                                 : famcake::DemocraticMode::entitled);
                } else {
                    result = famcake::divide_democratic_k(inst,
                                                          famcake::parse_democratic_mode(div_method));
                }
            } else {
                throw std::invalid_argument("unknown criterion '" + div_criterion + "'");
            }
            write_output(div_out, famcake::jsonio::dump(famcake::jsonio::to_json(result)));
            return 0;
        }

        if (check->parsed()) {
            famcake::Instance inst = load_instance(check_in);
            famcake::Allocation alloc = load_allocation(check_alloc);
            famcake::FairnessReport report = famcake::evaluate(inst, alloc);
            write_output(check_out, famcake::jsonio::dump(famcake::jsonio::to_json(report)));
            if (!check_expect.empty() &&
                !report.verdict(famcake::parse_criterion(check_expect))) {
                return 1;
            }
            return 0;
        }

        if (oracle->parsed()) {
            famcake::Instance inst = load_instance(ora_in);
            famcake::OracleResult result;
            if (ora_criterion == "positivity") {
                result = famcake::positivity_min_components(inst, ora_q, ora_max_comp);
            } else {
                result = famcake::min_components(inst, famcake::parse_criterion(ora_criterion),
                                                 ora_max_comp);
            }
            write_output(ora_out, famcake::jsonio::dump(famcake::jsonio::to_json(result)));
            return 0;
        }

        if (bench->parsed()) {
            std::vector<famcake::BenchConfig> configs =
                bench_config.empty()
                    ? famcake::default_bench_configs()
                    : famcake::bench_configs_from_json(json::parse(read_input(bench_config)));
            json report = famcake::run_bench(configs, bench_options);
            write_output(bench_report, famcake::jsonio::dump(report));
            return report["sound"].get<bool>() ? 0 : 1;
        }

        if (render->parsed()) {
            famcake::Instance inst = load_instance(ren_in);
            famcake::Allocation alloc = load_allocation(ren_alloc);
            if (ren_format == "text") {
                write_output(ren_out, famcake::render_text(inst, alloc));
            } else if (ren_format == "svg") {
                write_output(ren_out, famcake::render_svg(inst, alloc));
            } else {
                throw std::invalid_argument("unknown render format '" + ren_format + "'");
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const famcake::search_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
