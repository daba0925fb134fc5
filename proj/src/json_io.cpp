#include "famcake/json_io.hpp"

#include <stdexcept>

namespace famcake::jsonio {

namespace {

const json& field(const json& j, const char* name, const std::string& path) {
    if (!j.is_object()) {
        throw std::invalid_argument(path + ": expected an object");
    }
    auto it = j.find(name);
    if (it == j.end()) {
        throw std::invalid_argument(path + ": missing field '" + name + "'");
    }
    return *it;
}

void expect_array(const json& j, const std::string& path) {
    if (!j.is_array()) {
        throw std::invalid_argument(path + ": expected an array");
    }
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) {
        throw std::invalid_argument(path + ": expected a string");
    }
    return j.get<std::string>();
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const ValueMeasure& m) {
    json out = json::array();
    for (const MeasureSegment& seg : m.segments()) {
        out.push_back({{"until", to_json(seg.until)}, {"density", to_json(seg.density)}});
    }
    return out;
}

json to_json(const Piece& p) {
    json out = json::array();
    for (const Interval& iv : p.intervals()) {
        out.push_back(json::array({to_json(iv.lo), to_json(iv.hi)}));
    }
    return out;
}

json to_json(const Allocation& x) {
    json out = json::array();
    for (const Piece& p : x.pieces()) out.push_back(to_json(p));
    return out;
}

json to_json(const Instance& inst) {
    json families = json::array();
    for (const Family& fam : inst.families()) {
        json members = json::array();
        for (const Agent& agent : fam.members) {
            members.push_back({{"name", agent.name}, {"density", to_json(agent.measure)}});
        }
        families.push_back(
            {{"name", fam.name}, {"weight", to_json(fam.weight)}, {"members", members}});
    }
    return {{"families", families}};
}

json to_json(const FairnessReport& report) {
    json values = json::array();
    for (const auto& row : report.member_values) {
        json vals = json::array();
        for (const Rational& v : row) vals.push_back(to_json(v));
        values.push_back(vals);
    }
    auto list = [](const std::vector<Rational>& xs) {
        json out = json::array();
        for (const Rational& x : xs) out.push_back(x.str());
        return out;
    };
    json verdicts;
    for (const auto& [criterion, ok] : report.verdicts) {
        verdicts[criterion_name(criterion)] = ok;
    }
    return {{"member_values", values},
            {"family_avg", list(report.family_avg)},
            {"family_min", list(report.family_min)},
            {"family_median", list(report.family_median)},
            {"satisfied_counts", report.satisfied_counts},
            {"verdicts", verdicts}};
}

json to_json(const ProtocolResult& result) {
    json out{{"allocation", to_json(result.allocation)},
             {"comp", result.comp},
             {"impl_bound", result.impl_bound},
             {"trace", result.trace}};
    out["theory_bound"] = result.theory_bound ? json(*result.theory_bound) : json(nullptr);
    return out;
}

json to_json(const OracleResult& result) {
    json out{{"criterion", result.criterion}, {"nodes_searched", result.nodes_searched}};
    out["min_components"] = result.min_components ? json(*result.min_components) : json(nullptr);
    out["witness"] = result.witness ? to_json(*result.witness) : json(nullptr);
    return out;
}

Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (!j.is_string()) {
        throw std::invalid_argument(path + ": expected a rational as \"p/q\"");
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

ValueMeasure measure_from_json(const json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<MeasureSegment> segments;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        segments.push_back({rational_from_json(field(j[i], "until", at), at + ".until"),
                            rational_from_json(field(j[i], "density", at), at + ".density")});
    }
    try {
        return ValueMeasure(std::move(segments));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

Piece piece_from_json(const json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<Interval> intervals;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        expect_array(j[i], at);
        if (j[i].size() != 2) {
            throw std::invalid_argument(at + ": expected [lo, hi]");
        }
        intervals.push_back({rational_from_json(j[i][0], at + "[0]"),
                             rational_from_json(j[i][1], at + "[1]")});
    }
    try {
        return Piece::from_intervals(std::move(intervals));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

Allocation allocation_from_json(const json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<Piece> pieces;
    for (size_t i = 0; i < j.size(); ++i) {
        pieces.push_back(piece_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return Allocation(std::move(pieces));
}

Instance instance_from_json(const json& j, const std::string& path) {
    const json& fams = field(j, "families", path);
    expect_array(fams, path + ".families");
    std::vector<Family> families;
    for (size_t f = 0; f < fams.size(); ++f) {
        const std::string at = path + ".families[" + std::to_string(f) + "]";
        Family fam;
        fam.name = get_string(field(fams[f], "name", at), at + ".name");
        fam.weight = rational_from_json(field(fams[f], "weight", at), at + ".weight");
        const json& members = field(fams[f], "members", at);
        expect_array(members, at + ".members");
        for (size_t i = 0; i < members.size(); ++i) {
            const std::string mat = at + ".members[" + std::to_string(i) + "]";
            fam.members.push_back(
                {get_string(field(members[i], "name", mat), mat + ".name"),
                 measure_from_json(field(members[i], "density", mat), mat + ".density")});
        }
        families.push_back(std::move(fam));
    }
    try {
        return Instance(std::move(families));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

Instance parse_instance(const std::string& text) {
    return instance_from_json(json::parse(text));
}

Allocation parse_allocation(const std::string& text) {
    return allocation_from_json(json::parse(text), "$");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace famcake::jsonio
