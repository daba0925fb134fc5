#pragma once

#include "famcake/rational.hpp"

#include <optional>
#include <vector>

namespace famcake::lp {

enum class Rel { le, ge, eq };

struct Row {
    std::vector<Rational> coeffs; // one per variable
    Rel rel;
    Rational rhs;
};

// Finds x >= 0 satisfying every row, or nullopt if the system is infeasible.
// Exact rational phase-1 simplex with Bland's rule, so it terminates and the
// returned vertex is deterministic.
std::optional<std::vector<Rational>> find_feasible(int num_vars, const std::vector<Row>& rows);

} // namespace famcake::lp
