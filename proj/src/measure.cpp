#include "famcake/measure.hpp"

#include "famcake/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace famcake {

namespace {

const Rational kZero(0);
const Rational kOne(1);

void check_segments(const std::vector<MeasureSegment>& segments) {
    if (segments.empty()) {
        throw std::invalid_argument("ValueMeasure: no segments");
    }
    Rational prev = kZero;
    for (const MeasureSegment& seg : segments) {
        if (seg.until <= prev) {
            throw std::invalid_argument("ValueMeasure: breakpoints must be strictly increasing");
        }
        if (seg.until > kOne) {
            throw std::invalid_argument("ValueMeasure: breakpoint beyond 1: " + seg.until.str());
        }
        if (seg.density.is_negative()) {
            throw std::invalid_argument("ValueMeasure: negative density " + seg.density.str());
        }
        prev = seg.until;
    }
    if (prev != kOne) {
        throw std::invalid_argument("ValueMeasure: last breakpoint must be 1, got " + prev.str());
    }
}

Rational total_integral(const std::vector<MeasureSegment>& segments) {
    Rational total(0);
    Rational left = kZero;
    for (const MeasureSegment& seg : segments) {
        total += seg.density * (seg.until - left);
        left = seg.until;
    }
    return total;
}

std::vector<MeasureSegment> merge_equal_density(std::vector<MeasureSegment> segments) {
    std::vector<MeasureSegment> out;
    for (MeasureSegment& seg : segments) {
        if (!out.empty() && out.back().density == seg.density) {
            out.back().until = std::move(seg.until);
        } else {
            out.push_back(std::move(seg));
        }
    }
    return out;
}

} // namespace

ValueMeasure::ValueMeasure(std::vector<MeasureSegment> segments) {
    check_segments(segments);
    if (total_integral(segments) != kOne) {
        throw std::invalid_argument(
            "ValueMeasure: density does not integrate to 1 (use ValueMeasure::rescaled)");
    }
    segments_ = merge_equal_density(std::move(segments));
}

ValueMeasure ValueMeasure::rescaled(std::vector<MeasureSegment> segments) {
    check_segments(segments);
    Rational total = total_integral(segments);
    if (!(total > kZero)) {
        throw std::invalid_argument("ValueMeasure: total value must be positive");
    }
    for (MeasureSegment& seg : segments) seg.density /= total;
    ValueMeasure m;
    m.segments_ = merge_equal_density(std::move(segments));
    return m;
}

ValueMeasure ValueMeasure::uniform() {
    return ValueMeasure({{kOne, kOne}});
}

ValueMeasure ValueMeasure::from_district_values(const std::vector<Rational>& values) {
    if (values.empty()) {
        throw std::invalid_argument("from_district_values: no districts");
    }
    const auto d = static_cast<long long>(values.size());
    std::vector<MeasureSegment> segments;
    segments.reserve(values.size());
    for (long long i = 0; i < d; ++i) {
        // density = value / length, with length 1/d
        segments.push_back({Rational(i + 1, d), values[static_cast<size_t>(i)] * Rational(d)});
    }
    return rescaled(std::move(segments));
}

Rational ValueMeasure::value(const Interval& iv) const {
    if (iv.lo < kZero || iv.hi > kOne || iv.lo > iv.hi) {
        throw std::domain_error("value: interval [" + iv.lo.str() + "," + iv.hi.str() +
                                "] outside [0,1]");
    }
    Rational total(0);
    Rational left = kZero;
    for (const MeasureSegment& seg : segments_) {
        Rational lo = max(left, iv.lo);
        Rational hi = min(seg.until, iv.hi);
        if (lo < hi && !seg.density.is_zero()) {
            total += seg.density * (hi - lo);
        }
        left = seg.until;
        if (left >= iv.hi) break;
    }
    return total;
}

Rational ValueMeasure::value(const Piece& p) const {
    Rational total(0);
    for (const Interval& iv : p.intervals()) total += value(iv);
    return total;
}

Rational ValueMeasure::prefix_value(const Rational& x) const {
    return value(Interval{kZero, x});
}

Rational ValueMeasure::mark(const Rational& start, const Rational& target) const {
    if (start < kZero || start > kOne) {
        throw std::domain_error("mark: start " + start.str() + " outside [0,1]");
    }
    if (target.is_negative()) {
        throw std::domain_error("mark: negative target " + target.str());
    }
    if (target.is_zero()) return start;
    Rational acc(0);
    Rational left = kZero;
    for (const MeasureSegment& seg : segments_) {
        Rational lo = max(left, start);
        left = seg.until;
        if (lo >= seg.until) continue;
        if (seg.density.is_zero()) continue;
        Rational contribution = seg.density * (seg.until - lo);
        if (acc + contribution >= target) {
            return lo + (target - acc) / seg.density;
        }
        acc += contribution;
    }
    throw infeasible_target_error("mark: target " + target.str() + " exceeds remaining value " +
                                  acc.str() + " after " + start.str());
}

std::vector<Rational> common_refinement(std::span<const ValueMeasure> measures,
                                        const Piece& within) {
    if (measures.empty()) {
        throw std::invalid_argument("common_refinement: need at least one measure");
    }
    std::vector<Rational> points;
    for (const Interval& iv : within.intervals()) {
        points.push_back(iv.lo);
        points.push_back(iv.hi);
    }
    for (const ValueMeasure& m : measures) {
        for (const MeasureSegment& seg : m.segments()) {
            for (const Interval& iv : within.intervals()) {
                if (iv.lo < seg.until && seg.until < iv.hi) {
                    points.push_back(seg.until);
                }
            }
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::vector<Interval> refinement_segments(std::span<const ValueMeasure> measures,
                                          const Piece& within) {
    std::vector<Rational> points = common_refinement(measures, within);
    std::vector<Interval> segments;
    for (const Interval& iv : within.intervals()) {
        Rational cursor = iv.lo;
        for (const Rational& p : points) {
            if (p <= cursor) continue;
            if (p > iv.hi) break;
            segments.push_back({cursor, p});
            cursor = p;
        }
    }
    return segments;
}

ValueMeasure average_measure(std::span<const ValueMeasure> measures) {
    if (measures.empty()) {
        throw std::invalid_argument("average_measure: empty list");
    }
    const Rational n(static_cast<long long>(measures.size()));
    std::vector<Interval> segments = refinement_segments(measures, Piece::whole());
    std::vector<MeasureSegment> out;
    out.reserve(segments.size());
    for (const Interval& seg : segments) {
        Rational sum(0);
        for (const ValueMeasure& m : measures) {
            sum += m.value(seg);
        }
        out.push_back({seg.hi, sum / (n * seg.length())});
    }
    return ValueMeasure(std::move(out));
}

} // namespace famcake
