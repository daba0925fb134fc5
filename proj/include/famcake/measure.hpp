#pragma once

#include "famcake/allocation.hpp"
#include "famcake/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace famcake {

// One constant-density span of a measure. The segment covers (prev.until,
// until]; the first segment starts at 0.
struct MeasureSegment {
    Rational until;   // right breakpoint, in (0,1]; strictly increasing; last is 1
    Rational density; // >= 0

    friend bool operator==(const MeasureSegment&, const MeasureSegment&) = default;
};

// A value measure on the cake [0,1]: a piecewise-constant density with
// rational breakpoints, normalized so the whole cake is worth exactly 1.
// Adjacent segments with equal density are merged at construction, so equal
// measures compare equal segment-by-segment.
class ValueMeasure {
  public:
    // Requires total integral exactly 1; rejects unnormalized input.
    explicit ValueMeasure(std::vector<MeasureSegment> segments);

    // Accepts any nonnegative density with positive total and rescales it to
    // integral 1.
    static ValueMeasure rescaled(std::vector<MeasureSegment> segments);

    static ValueMeasure uniform();

    // Builds a measure from per-district values over `districts` equal-length
    // subintervals of [0,1], rescaled to total 1.
    static ValueMeasure from_district_values(const std::vector<Rational>& values);

    const std::vector<MeasureSegment>& segments() const { return segments_; }

    // Integral of the density over an interval/piece within [0,1].
    Rational value(const Interval& iv) const;
    Rational value(const Piece& p) const;

    // Value of the prefix [0,x].
    Rational prefix_value(const Rational& x) const;

    // Leftmost x >= start with value([start,x]) == target. The leftmost rule
    // resolves zero-density plateaus deterministically.
    Rational mark(const Rational& start, const Rational& target) const;

    friend bool operator==(const ValueMeasure&, const ValueMeasure&) = default;

  private:
    ValueMeasure() = default;
    std::vector<MeasureSegment> segments_;
};

// Sorted union of every measure's breakpoints restricted to `within`, plus
// the endpoints of `within`'s own intervals. Every measure has constant
// density between consecutive points that lie in the same interval of
// `within`.
std::vector<Rational> common_refinement(std::span<const ValueMeasure> measures,
                                        const Piece& within);

// The refinement as a list of segments (subintervals of `within`), left to
// right. Each segment lies inside a single interval of `within` and every
// measure is constant on it.
std::vector<Interval> refinement_segments(std::span<const ValueMeasure> measures,
                                          const Piece& within);

// Pointwise arithmetic mean of the densities; the W^avg carrier.
ValueMeasure average_measure(std::span<const ValueMeasure> measures);

} // namespace famcake
