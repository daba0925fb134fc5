#include "famcake/bench.hpp"
#include "famcake/errors.hpp"
#include "famcake/exact.hpp"
#include "famcake/json_io.hpp"
#include "famcake/oracle.hpp"
#include "famcake/protocols.hpp"
#include "famcake/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace famcake;

namespace {

// Rationals cross the boundary as "p/q" strings.
Rational rat(const std::string& s) { return Rational::parse(s); }

std::vector<std::string> rat_list(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const Rational& x : xs) out.push_back(x.str());
    return out;
}

Piece piece_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<Interval> intervals;
    intervals.reserve(pairs.size());
    for (const auto& [lo, hi] : pairs) intervals.push_back({rat(lo), rat(hi)});
    return Piece::from_intervals(std::move(intervals));
}

Allocation allocation_from_lists(
    const std::vector<std::vector<std::pair<std::string, std::string>>>& lists) {
    std::vector<Piece> pieces;
    pieces.reserve(lists.size());
    for (const auto& l : lists) pieces.push_back(piece_from_pairs(l));
    return Allocation(std::move(pieces));
}

std::vector<std::vector<std::pair<std::string, std::string>>> allocation_to_lists(
    const Allocation& x) {
    std::vector<std::vector<std::pair<std::string, std::string>>> out;
    for (const Piece& p : x.pieces()) {
        std::vector<std::pair<std::string, std::string>> piece;
        for (const Interval& iv : p.intervals()) piece.emplace_back(iv.lo.str(), iv.hi.str());
        out.push_back(std::move(piece));
    }
    return out;
}

py::dict report_to_dict(const FairnessReport& report) {
    py::dict out;
    py::list values;
    for (const auto& row : report.member_values) values.append(rat_list(row));
    out["member_values"] = values;
    out["family_avg"] = rat_list(report.family_avg);
    out["family_min"] = rat_list(report.family_min);
    out["family_median"] = rat_list(report.family_median);
    out["satisfied_counts"] = report.satisfied_counts;
    py::dict verdicts;
    for (const auto& [criterion, ok] : report.verdicts) {
        verdicts[py::str(criterion_name(criterion))] = ok;
    }
    out["verdicts"] = verdicts;
    return out;
}

py::dict protocol_result_to_dict(const ProtocolResult& result) {
    py::dict out;
    out["allocation"] = allocation_to_lists(result.allocation);
    out["comp"] = result.comp;
    out["theory_bound"] = result.theory_bound ? py::cast(*result.theory_bound) : py::none();
    out["impl_bound"] = result.impl_bound;
    out["trace"] = result.trace;
    return out;
}

py::dict oracle_result_to_dict(const OracleResult& result) {
    py::dict out;
    out["criterion"] = result.criterion;
    out["min_components"] = result.min_components ? py::cast(*result.min_components) : py::none();
    out["witness"] = result.witness ? py::cast(allocation_to_lists(*result.witness)) : py::none();
    out["nodes_searched"] = result.nodes_searched;
    return out;
}

} // namespace

PYBIND11_MODULE(_famcake, m) {
    m.doc() = "Exact proportional cake-cutting among families";

    py::register_exception<search_limit_error>(m, "SearchLimitError");
    py::register_exception<infeasible_target_error>(m, "InfeasibleTargetError");

    py::class_<ValueMeasure>(m, "ValueMeasure")
        .def(py::init([](const std::vector<std::pair<std::string, std::string>>& segments) {
                 std::vector<MeasureSegment> segs;
                 for (const auto& [until, density] : segments) {
                     segs.push_back({rat(until), rat(density)});
                 }
                 return ValueMeasure(std::move(segs));
             }),
             py::arg("segments"), "segments: list of (until, density) rational strings")
        .def_static("uniform", &ValueMeasure::uniform)
        .def_static("from_district_values",
                    [](const std::vector<std::string>& values) {
                        std::vector<Rational> vals;
                        for (const std::string& v : values) vals.push_back(rat(v));
                        return ValueMeasure::from_district_values(vals);
                    })
        .def("segments",
             [](const ValueMeasure& mv) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const MeasureSegment& seg : mv.segments()) {
                     out.emplace_back(seg.until.str(), seg.density.str());
                 }
                 return out;
             })
        .def("value",
             [](const ValueMeasure& mv,
                const std::vector<std::pair<std::string, std::string>>& piece) {
                 return mv.value(piece_from_pairs(piece)).str();
             })
        .def("mark", [](const ValueMeasure& mv, const std::string& start,
                        const std::string& target) {
            return mv.mark(rat(start), rat(target)).str();
        });

    py::class_<Instance>(m, "Instance")
        .def_static("from_json",
                    [](const std::string& text) { return jsonio::parse_instance(text); })
        .def("to_json", [](const Instance& inst) { return jsonio::dump(jsonio::to_json(inst)); })
        .def("family_count", &Instance::family_count)
        .def("total_agents", &Instance::total_agents)
        .def("equal_entitlements", &Instance::equal_entitlements)
        .def("family_names", [](const Instance& inst) {
            std::vector<std::string> names;
            for (const Family& fam : inst.families()) names.push_back(fam.name);
            return names;
        })
        .def("weights", [](const Instance& inst) {
            std::vector<std::string> ws;
            for (const Family& fam : inst.families()) ws.push_back(fam.weight.str());
            return ws;
        });

    m.def(
        "gen_preset",
        [](const std::string& name, const std::map<std::string, long long>& params) {
            return gen_preset(name, params);
        },
        py::arg("name"), py::arg("params") = std::map<std::string, long long>{});
    m.def(
        "gen_random",
        [](int k, const std::vector<int>& sizes, int max_segments, uint64_t seed,
           const std::optional<std::vector<std::string>>& weights) {
            std::optional<std::vector<Rational>> ws;
            if (weights) {
                std::vector<Rational> parsed;
                for (const std::string& w : *weights) parsed.push_back(rat(w));
                ws = std::move(parsed);
            }
            return gen_random(k, sizes, max_segments, seed, ws);
        },
        py::arg("k"), py::arg("family_sizes"), py::arg("max_segments") = 3, py::arg("seed") = 1,
        py::arg("weights") = std::nullopt);

    m.def("average_measure", [](const std::vector<ValueMeasure>& measures) {
        return average_measure(measures);
    });
    m.def(
        "common_refinement",
        [](const std::vector<ValueMeasure>& measures,
           const std::vector<std::pair<std::string, std::string>>& within) {
            std::vector<std::string> out;
            for (const Rational& p : common_refinement(measures, piece_from_pairs(within))) {
                out.push_back(p.str());
            }
            return out;
        },
        py::arg("measures"),
        py::arg("within") = std::vector<std::pair<std::string, std::string>>{{"0/1", "1/1"}});

    m.def("evaluate",
          [](const Instance& inst,
             const std::vector<std::vector<std::pair<std::string, std::string>>>& alloc) {
              return report_to_dict(evaluate(inst, allocation_from_lists(alloc)));
          });
    m.def("nonadditivity_witness", []() {
        NonadditivityFixture fixture = nonadditivity_witness();
        py::dict out;
        out["instance"] = fixture.instance;
        std::vector<std::vector<std::pair<std::string, std::string>>> districts;
        for (const Piece& p : fixture.districts) {
            std::vector<std::pair<std::string, std::string>> piece;
            for (const Interval& iv : p.intervals()) piece.emplace_back(iv.lo.str(), iv.hi.str());
            districts.push_back(std::move(piece));
        }
        out["districts"] = districts;
        return out;
    });
    m.def("validate_partition",
          [](const std::vector<std::vector<std::pair<std::string, std::string>>>& alloc) {
              return validate_partition(allocation_from_lists(alloc)).str();
          });
    m.def("comp", [](const std::vector<std::vector<std::pair<std::string, std::string>>>& alloc) {
        return comp(allocation_from_lists(alloc));
    });

    m.def("divide_average",
          [](const Instance& inst) { return protocol_result_to_dict(divide_average(inst)); });
    m.def(
        "divide_unanimous",
        [](const Instance& inst, const std::string& method) {
            return protocol_result_to_dict(divide_unanimous(inst, parse_unanimous_method(method)));
        },
        py::arg("instance"), py::arg("method") = "recursive");
    m.def("divide_democratic_two", [](const Instance& inst) {
        return protocol_result_to_dict(divide_democratic_two(inst));
    });
    m.def(
        "divide_democratic_k",
        [](const Instance& inst, const std::string& mode) {
            return protocol_result_to_dict(divide_democratic_k(inst, parse_democratic_mode(mode)));
        },
        py::arg("instance"), py::arg("mode") = "equal");

    m.def(
        "exact_ratio_cut",
        [](const Instance& inst, const std::string& ratio) {
            std::vector<ValueMeasure> measures;
            for (const Family& fam : inst.families()) {
                for (const Agent& agent : fam.members) measures.push_back(agent.measure);
            }
            auto [first, second] = exact_ratio_cut(measures, Piece::whole(), rat(ratio));
            return allocation_to_lists(Allocation({first, second}));
        },
        "cut the whole cake so every agent of the instance values the first piece at "
        "exactly `ratio`");
    m.def(
        "min_cut_exact_search",
        [](const Instance& inst, int pieces, int budget) {
            std::vector<ValueMeasure> measures;
            for (const Family& fam : inst.families()) {
                for (const Agent& agent : fam.members) measures.push_back(agent.measure);
            }
            ExactSearchResult found = min_cut_exact_search(measures, pieces, budget);
            py::dict out;
            out["feasible"] = found.feasible();
            out["nodes_searched"] = found.nodes_searched;
            out["components"] =
                found.plan ? py::cast(found.plan->achieved_components) : py::none();
            out["allocation"] =
                found.plan ? py::cast(allocation_to_lists(found.plan->allocation)) : py::none();
            return out;
        },
        py::arg("instance"), py::arg("pieces"), py::arg("budget"));

    m.def("min_components", [](const Instance& inst, const std::string& criterion, int max_comp) {
        return oracle_result_to_dict(min_components(inst, parse_criterion(criterion), max_comp));
    });
    m.def("positivity_min_components", [](const Instance& inst, int q, int max_comp) {
        return oracle_result_to_dict(positivity_min_components(inst, q, max_comp));
    });

    m.def("render_text",
          [](const Instance& inst,
             const std::vector<std::vector<std::pair<std::string, std::string>>>& alloc) {
              return render_text(inst, allocation_from_lists(alloc));
          });
    m.def("render_svg",
          [](const Instance& inst,
             const std::vector<std::vector<std::pair<std::string, std::string>>>& alloc) {
              return render_svg(inst, allocation_from_lists(alloc));
          });

    m.def("run_bench", [](int trials, uint64_t seed) {
        BenchOptions options;
        options.trials = trials;
        options.seed = seed;
        return jsonio::dump(run_bench(default_bench_configs(), options));
    });

#ifdef VERSION_INFO
#define FAMCAKE_STR2(x) #x
#define FAMCAKE_STR(x) FAMCAKE_STR2(x)
    m.attr("__version__") = FAMCAKE_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
