#include "famcake/exact.hpp"

#include "famcake/errors.hpp"
#include "famcake/lp.hpp"
#include "search_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace famcake {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::vector<const ValueMeasure*> as_pointers(std::span<const ValueMeasure> measures) {
    std::vector<const ValueMeasure*> out;
    out.reserve(measures.size());
    for (const ValueMeasure& m : measures) out.push_back(&m);
    return out;
}

std::vector<Interval> refinement_of(const std::vector<const ValueMeasure*>& measures,
                                    const Piece& within) {
    if (measures.empty()) {
        throw std::invalid_argument("exact: need at least one measure");
    }
    std::vector<Rational> points;
    for (const Interval& iv : within.intervals()) {
        points.push_back(iv.lo);
        points.push_back(iv.hi);
    }
    for (const ValueMeasure* m : measures) {
        for (const MeasureSegment& seg : m->segments()) {
            for (const Interval& iv : within.intervals()) {
                if (iv.lo < seg.until && seg.until < iv.hi) points.push_back(seg.until);
            }
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
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

void require_positive_on(const std::vector<const ValueMeasure*>& measures, const Piece& within) {
    for (const ValueMeasure* m : measures) {
        if (!(m->value(within) > kZero)) {
            throw std::invalid_argument("exact: a measure has zero value on the target piece");
        }
    }
}

// Leftmost f-fraction (by length) of every segment.
Piece leftmost_fraction(const std::vector<Interval>& segments, const Rational& f) {
    std::vector<Interval> parts;
    if (f.is_zero()) return Piece();
    parts.reserve(segments.size());
    for (const Interval& seg : segments) {
        parts.push_back({seg.lo, seg.lo + f * seg.length()});
    }
    return Piece::from_intervals(std::move(parts));
}

} // namespace

std::pair<Piece, Piece> exact_ratio_cut(const std::vector<const ValueMeasure*>& measures,
                                        const Piece& within, const Rational& r) {
    if (r < kZero || r > kOne) {
        throw std::invalid_argument("exact_ratio_cut: ratio " + r.str() + " outside [0,1]");
    }
    require_positive_on(measures, within);
    std::vector<Interval> segments = refinement_of(measures, within);
    if (r * Rational(2) <= kOne) {
        Piece first = leftmost_fraction(segments, r);
        return {first, Piece::complement_in(first, within)};
    }
    Piece second = leftmost_fraction(segments, kOne - r);
    return {Piece::complement_in(second, within), second};
}

std::pair<Piece, Piece> exact_ratio_cut(std::span<const ValueMeasure> measures,
                                        const Piece& within, const Rational& r) {
    return exact_ratio_cut(as_pointers(measures), within, r);
}

Allocation exact_division(const std::vector<const ValueMeasure*>& measures, int K,
                          const Piece& within,
                          const std::optional<std::vector<Rational>>& shares) {
    if (K < 1) throw std::invalid_argument("exact_division: K must be >= 1");
    std::vector<Rational> share_list;
    if (shares) {
        share_list = *shares;
        if (static_cast<int>(share_list.size()) != K) {
            throw std::invalid_argument("exact_division: need exactly K shares");
        }
        Rational total(0);
        for (const Rational& s : share_list) {
            if (s.is_negative()) throw std::invalid_argument("exact_division: negative share");
            total += s;
        }
        if (total != kOne) {
            throw std::invalid_argument("exact_division: shares sum to " + total.str());
        }
    } else {
        share_list.assign(static_cast<size_t>(K), Rational(1, K));
    }
    require_positive_on(measures, within);
    std::vector<Interval> segments = refinement_of(measures, within);

    std::vector<Rational> cumulative{kZero};
    for (const Rational& s : share_list) cumulative.push_back(cumulative.back() + s);

    std::vector<Piece> pieces;
    pieces.reserve(static_cast<size_t>(K));
    for (int j = 0; j < K; ++j) {
        std::vector<Interval> parts;
        for (const Interval& seg : segments) {
            Rational lo = seg.lo + cumulative[static_cast<size_t>(j)] * seg.length();
            Rational hi = seg.lo + cumulative[static_cast<size_t>(j) + 1] * seg.length();
            if (lo < hi) parts.push_back({lo, hi});
        }
        pieces.push_back(Piece::from_intervals(std::move(parts)));
    }
    return Allocation(std::move(pieces));
}

Allocation exact_division(std::span<const ValueMeasure> measures, int K, const Piece& within,
                          const std::optional<std::vector<Rational>>& shares) {
    return exact_division(as_pointers(measures), K, within, shares);
}

int refinement_segment_count(const std::vector<const ValueMeasure*>& measures,
                             const Piece& within) {
    return static_cast<int>(refinement_of(measures, within).size());
}

ExactSearchResult min_cut_exact_search(std::span<const ValueMeasure> measures, int K, int budget) {
    if (K < 1) throw std::invalid_argument("min_cut_exact_search: K must be >= 1");
    if (budget < 0) throw std::invalid_argument("min_cut_exact_search: negative budget");
    auto ptrs = as_pointers(measures);
    detail::SegmentTable table = detail::build_segment_table(ptrs);
    const int S = table.segment_count();
    const int N = table.measure_count();
    if (S * K > 24) {
        throw std::invalid_argument("min_cut_exact_search: instance too large (S*K = " +
                                    std::to_string(S * K) + " > 24)");
    }

    const long long limit = detail::search_limit_from_env();
    ExactSearchResult result;
    const Rational share(1, K);

    for (int R = K; R <= budget + 1 && !result.plan; ++R) {
        const int cuts = R - 1;
        detail::for_each_label_sequence(R, K, /*canonical=*/true, [&](const std::vector<int>&
                                                                          label_seq) {
            return detail::for_each_cut_assignment(cuts, S, [&](const std::vector<int>& cut_seg) {
                if (++result.nodes_searched > limit) {
                    throw search_limit_error("min_cut_exact_search: FAMCAKE_SEARCH_LIMIT exceeded");
                }
                std::vector<lp::Row> rows = detail::base_cut_rows(table, cut_seg);
                for (int i = 0; i < N; ++i) {
                    for (int j = 0; j < K; ++j) {
                        detail::LinExpr expr =
                            detail::piece_value_expr(table, i, label_seq, cut_seg, j);
                        rows.push_back({std::move(expr.coeffs), lp::Rel::eq, share - expr.constant});
                    }
                }
                auto solution = lp::find_feasible(cuts, rows);
                if (!solution) return false;

                std::vector<Rational> ys{kZero};
                for (const Rational& y : detail::cut_positions(table, cut_seg, *solution)) {
                    ys.push_back(y);
                }
                ys.push_back(kOne);
                std::vector<std::vector<Interval>> piece_parts(static_cast<size_t>(K));
                for (int t = 0; t < R; ++t) {
                    if (ys[static_cast<size_t>(t)] < ys[static_cast<size_t>(t) + 1]) {
                        piece_parts[static_cast<size_t>(label_seq[static_cast<size_t>(t)])].push_back(
                            {ys[static_cast<size_t>(t)], ys[static_cast<size_t>(t) + 1]});
                    }
                }
                std::vector<Piece> pieces;
                for (auto& parts : piece_parts) {
                    pieces.push_back(Piece::from_intervals(std::move(parts)));
                }
                Allocation alloc(std::move(pieces));
                for (const ValueMeasure* mp : ptrs) {
                    for (const Piece& p : alloc.pieces()) {
                        if (mp->value(p) != share) {
                            throw std::logic_error("min_cut_exact_search: inexact LP witness");
                        }
                    }
                }
                ExactCutPlan plan;
                plan.allocation = alloc;
                plan.achieved_components = comp(alloc);
                for (int s = 0; s < S; ++s) {
                    SegmentSplit split{table.segments[static_cast<size_t>(s)], {}};
                    for (int t = 0; t < R; ++t) {
                        Rational lo = max(ys[static_cast<size_t>(t)], split.segment.lo);
                        Rational hi = min(ys[static_cast<size_t>(t) + 1], split.segment.hi);
                        if (lo < hi) {
                            split.parts.push_back({{lo, hi}, label_seq[static_cast<size_t>(t)]});
                        }
                    }
                    plan.per_segment_splits.push_back(std::move(split));
                }
                result.plan = std::move(plan);
                return true;
            });
        });
    }
    return result;
}

} // namespace famcake
