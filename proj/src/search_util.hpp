#pragma once

// Internal helpers shared by the exact-division search and the component
// oracle: both enumerate (piece-label sequence, cut-to-segment assignment)
// patterns over the common refinement of the whole cake and hand each
// pattern's linear constraints to the rational LP solver.

#include "famcake/lp.hpp"
#include "famcake/measure.hpp"

#include <functional>
#include <vector>

namespace famcake::detail {

struct SegmentTable {
    std::vector<Interval> segments;
    // density[i][s], prefix[i][s]: measure i's density on segment s and its
    // value of [0, seg_lo(s)].
    std::vector<std::vector<Rational>> density;
    std::vector<std::vector<Rational>> prefix;

    int segment_count() const { return static_cast<int>(segments.size()); }
    int measure_count() const { return static_cast<int>(density.size()); }
};

SegmentTable build_segment_table(const std::vector<const ValueMeasure*>& measures);

// Bound and ordering rows for cut variables u_t (u_t = y_t - seg_lo).
std::vector<lp::Row> base_cut_rows(const SegmentTable& table, const std::vector<int>& cut_seg);

struct LinExpr {
    std::vector<Rational> coeffs; // per cut variable
    Rational constant;
};

// value_i(piece j) as a linear expression in the cut variables, for the run
// pattern (labels, cut_seg). Run t spans (y_{t-1}, y_t) with y_0 = 0,
// y_R = 1.
LinExpr piece_value_expr(const SegmentTable& table, int measure, const std::vector<int>& labels,
                         const std::vector<int>& cut_seg, int piece);

// Label sequences of length R over {0..K-1}, adjacent labels distinct, all
// labels present. With canonical=true the first occurrences appear in
// increasing label order (for interchangeable pieces). Enumeration is
// lexicographic; the visitor returns true to stop.
bool for_each_label_sequence(int R, int K, bool canonical,
                             const std::function<bool(const std::vector<int>&)>& visit);

// Nondecreasing assignments of `cuts` cut points to segments 0..S-1,
// lexicographic; the visitor returns true to stop.
bool for_each_cut_assignment(int cuts, int S,
                             const std::function<bool(const std::vector<int>&)>& visit);

// Concrete cut positions from an LP solution over the shifted variables.
std::vector<Rational> cut_positions(const SegmentTable& table, const std::vector<int>& cut_seg,
                                    const std::vector<Rational>& solution);

long long search_limit_from_env();

} // namespace famcake::detail
