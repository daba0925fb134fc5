#pragma once

#include "famcake/allocation.hpp"
#include "famcake/instance.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace famcake {

enum class Criterion { average, unanimous, democratic };

std::string criterion_name(Criterion c);
Criterion parse_criterion(const std::string& name);

// Everything there is to know about one (instance, allocation) pair:
// per-member values of the own family's piece, the three family aggregates,
// and the exact verdict for each proportionality criterion.
struct FairnessReport {
    std::vector<std::vector<Rational>> member_values; // [family][member]
    std::vector<Rational> family_avg;                 // W^avg_j
    std::vector<Rational> family_min;                 // W^min_j
    std::vector<Rational> family_median;              // W^med_j
    std::vector<int> satisfied_counts;                // members with V_i(X_j) >= w_j
    std::map<Criterion, bool> verdicts;

    bool verdict(Criterion c) const { return verdicts.at(c); }
};

// Exact verdicts, zero tolerance:
//   average:    W^avg_j(X_j) >= w_j for every family
//   unanimous:  V_i(X_j) >= w_j for every member of every family
//   democratic: at least ceil(n_j/2) members of every family have
//               V_i(X_j) >= w_j
// W^med is the ceil(n_j/2)-th largest member value, which makes
// W^med_j >= w_j equivalent to the democratic count condition for both odd
// and even family sizes.
FairnessReport evaluate(const Instance& inst, const Allocation& x);

// The 3-agent, 3-district family showing that W^min (and W^med) fail
// additivity: the districts are worth 0, 1/3, 1/3 to the family minimum but
// the whole cake is worth 1.
struct NonadditivityFixture {
    Instance instance;
    std::array<Piece, 3> districts;
};
NonadditivityFixture nonadditivity_witness();

} // namespace famcake
