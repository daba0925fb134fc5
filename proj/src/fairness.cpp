#include "famcake/fairness.hpp"

#include <algorithm>
#include <stdexcept>

namespace famcake {

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::average: return "average";
        case Criterion::unanimous: return "unanimous";
        case Criterion::democratic: return "democratic";
    }
    return "?";
}

Criterion parse_criterion(const std::string& name) {
    if (name == "average" || name == "avg") return Criterion::average;
    if (name == "unanimous" || name == "unan") return Criterion::unanimous;
    if (name == "democratic" || name == "dem") return Criterion::democratic;
    throw std::invalid_argument("unknown criterion '" + name + "'");
}

FairnessReport evaluate(const Instance& inst, const Allocation& x) {
    const int k = inst.family_count();
    if (x.family_count() != k) {
        throw std::invalid_argument("evaluate: allocation has " + std::to_string(x.family_count()) +
                                    " pieces for " + std::to_string(k) + " families");
    }
    FairnessReport report;
    bool avg_ok = true, unan_ok = true, dem_ok = true;
    for (int j = 0; j < k; ++j) {
        const Family& fam = inst.family(j);
        const Piece& piece = x.piece(j);
        std::vector<Rational> values;
        values.reserve(fam.members.size());
        Rational sum(0);
        int satisfied = 0;
        for (const Agent& agent : fam.members) {
            Rational v = agent.measure.value(piece);
            sum += v;
            if (v >= fam.weight) ++satisfied;
            values.push_back(std::move(v));
        }
        const int n_j = fam.size();
        std::vector<Rational> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        // ceil(n_j/2)-th largest == (floor(n_j/2)+1)-th smallest
        const Rational median = sorted[static_cast<size_t>(n_j / 2)];
        const int majority = (n_j + 1) / 2;

        report.family_avg.push_back(sum / Rational(n_j));
        report.family_min.push_back(sorted.front());
        report.family_median.push_back(median);
        report.satisfied_counts.push_back(satisfied);
        report.member_values.push_back(std::move(values));

        avg_ok = avg_ok && report.family_avg.back() >= fam.weight;
        unan_ok = unan_ok && report.family_min.back() >= fam.weight;
        dem_ok = dem_ok && satisfied >= majority;
    }
    report.verdicts[Criterion::average] = avg_ok;
    report.verdicts[Criterion::unanimous] = unan_ok;
    report.verdicts[Criterion::democratic] = dem_ok;
    return report;
}

NonadditivityFixture nonadditivity_witness() {
    auto agent = [](const std::string& name, std::vector<Rational> vals) {
        return Agent{name, ValueMeasure::from_district_values(vals)};
    };
    Instance inst({Family{"F1",
                          Rational(1),
                          {agent("Alice", {1, 1, 1}), agent("Bob", {0, 2, 1}),
                           agent("Charlie", {0, 1, 2})}}});
    return NonadditivityFixture{
        std::move(inst),
        {Piece::interval(Rational(0), Rational(1, 3)),
         Piece::interval(Rational(1, 3), Rational(2, 3)),
         Piece::interval(Rational(2, 3), Rational(1))}};
}

} // namespace famcake
