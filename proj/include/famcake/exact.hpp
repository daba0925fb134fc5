#pragma once

#include "famcake/allocation.hpp"
#include "famcake/measure.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace famcake {

// Splits `within` into (P, Q) with value(m, P) == r * value(m, within) for
// every measure simultaneously, by taking an r-fraction of each
// common-refinement segment by length. For r <= 1/2 the fraction is taken
// from the left of each segment; for r > 1/2 the piece is the complement of
// the leftmost (1-r)-fraction, so cuts at r and 1-r mirror each other.
// Each piece has at most S components, S = number of refinement segments.
std::pair<Piece, Piece> exact_ratio_cut(std::span<const ValueMeasure> measures,
                                        const Piece& within, const Rational& r);
std::pair<Piece, Piece> exact_ratio_cut(const std::vector<const ValueMeasure*>& measures,
                                        const Piece& within, const Rational& r);

// Partition of `within` into K pieces such that every measure values piece j
// at exactly shares[j] * value(m, within). Default shares are 1/K each.
// Total components <= K*S.
Allocation exact_division(std::span<const ValueMeasure> measures, int K, const Piece& within,
                          const std::optional<std::vector<Rational>>& shares = std::nullopt);
Allocation exact_division(const std::vector<const ValueMeasure*>& measures, int K,
                          const Piece& within,
                          const std::optional<std::vector<Rational>>& shares = std::nullopt);

int refinement_segment_count(const std::vector<const ValueMeasure*>& measures,
                             const Piece& within);

// One refinement segment partitioned into labeled parts (piece index per
// part, left to right).
struct SegmentSplit {
    Interval segment;
    std::vector<std::pair<Interval, int>> parts;
};

struct ExactCutPlan {
    std::vector<SegmentSplit> per_segment_splits;
    Allocation allocation;
    int achieved_components = 0;
};

struct ExactSearchResult {
    std::optional<ExactCutPlan> plan; // empty: no exact division within the cut budget
    long long nodes_searched = 0;

    bool feasible() const { return plan.has_value(); }
};

// Exhaustive search for an equal-shares exact division of the whole cake
// with at most `budget` cuts, minimizing the component count. Enumerates
// piece-label sequences and cut-to-segment assignments, solving each
// candidate's exactness constraints as a rational LP. Desk scale only:
// requires S*K <= 24. Honors FAMCAKE_SEARCH_LIMIT; throws search_limit_error
// past it.
ExactSearchResult min_cut_exact_search(std::span<const ValueMeasure> measures, int K, int budget);

} // namespace famcake
