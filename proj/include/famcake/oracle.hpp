#pragma once

#include "famcake/allocation.hpp"
#include "famcake/fairness.hpp"
#include "famcake/instance.hpp"

#include <optional>
#include <string>

namespace famcake {

struct OracleResult {
    std::string criterion;
    std::optional<int> min_components; // empty: infeasible within max_comp
    std::optional<Allocation> witness;
    long long nodes_searched = 0;

    bool feasible() const { return min_components.has_value(); }
};

// Exhaustive minimum-component search: the smallest total component count
// <= max_comp for which an allocation satisfying the criterion exists, with
// a witness. Enumerates piece-label sequences and cut placements over the
// instance's common refinement, deciding each candidate's linear constraints
// exactly. Honors FAMCAKE_SEARCH_LIMIT; throws search_limit_error past it.
OracleResult min_components(const Instance& inst, Criterion criterion, int max_comp);

// Minimum component count such that at least q members of every family
// assign positive value to their family's piece. Requires an instance shaped
// like the lemma5 preset (single-minded members over an m*k district grid);
// on that shape positivity is a purely combinatorial question, searched
// directly over district-run patterns.
OracleResult positivity_min_components(const Instance& inst, int q, int max_comp);

} // namespace famcake
