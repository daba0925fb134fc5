#include "search_util.hpp"

#include <algorithm>
#include <cstdlib>

namespace famcake::detail {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool canonical_labels_rec(int R, int K, std::vector<int>& current, int used,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    const int pos = static_cast<int>(current.size());
    if (pos == R) {
        return used == K && visit(current);
    }
    if (K - used > R - pos) return false; // not enough room for unused labels
    const int max_label = std::min(K - 1, used); // next unused label is `used`
    for (int label = 0; label <= max_label; ++label) {
        if (pos > 0 && current.back() == label) continue;
        current.push_back(label);
        if (canonical_labels_rec(R, K, current, std::max(used, label + 1), visit)) return true;
        current.pop_back();
    }
    return false;
}

bool non_canonical_labels_rec(int R, int K, std::vector<int>& current, unsigned seen_mask,
                              const std::function<bool(const std::vector<int>&)>& visit) {
    const int pos = static_cast<int>(current.size());
    const int seen = __builtin_popcount(seen_mask);
    if (pos == R) {
        return seen == K && visit(current);
    }
    if (K - seen > R - pos) return false;
    for (int label = 0; label < K; ++label) {
        if (pos > 0 && current.back() == label) continue;
        current.push_back(label);
        if (non_canonical_labels_rec(R, K, current, seen_mask | (1u << label), visit)) return true;
        current.pop_back();
    }
    return false;
}

bool cuts_rec(int cuts, int S, int min_segment, std::vector<int>& current,
              const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<int>(current.size()) == cuts) {
        return visit(current);
    }
    for (int s = min_segment; s < S; ++s) {
        current.push_back(s);
        if (cuts_rec(cuts, S, s, current, visit)) return true;
        current.pop_back();
    }
    return false;
}

} // namespace

SegmentTable build_segment_table(const std::vector<const ValueMeasure*>& measures) {
    SegmentTable table;
    std::vector<Rational> points{kZero, kOne};
    for (const ValueMeasure* m : measures) {
        for (const MeasureSegment& seg : m->segments()) {
            if (kZero < seg.until && seg.until < kOne) points.push_back(seg.until);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (size_t p = 0; p + 1 < points.size(); ++p) {
        table.segments.push_back({points[p], points[p + 1]});
    }
    table.density.resize(measures.size());
    table.prefix.resize(measures.size());
    for (size_t i = 0; i < measures.size(); ++i) {
        for (const Interval& seg : table.segments) {
            table.prefix[i].push_back(measures[i]->prefix_value(seg.lo));
            table.density[i].push_back(measures[i]->value(seg) / seg.length());
        }
    }
    return table;
}

std::vector<lp::Row> base_cut_rows(const SegmentTable& table, const std::vector<int>& cut_seg) {
    const int cuts = static_cast<int>(cut_seg.size());
    std::vector<lp::Row> rows;
    for (int t = 0; t < cuts; ++t) {
        lp::Row bound{std::vector<Rational>(static_cast<size_t>(cuts)), lp::Rel::le,
                      table.segments[static_cast<size_t>(cut_seg[static_cast<size_t>(t)])].length()};
        bound.coeffs[static_cast<size_t>(t)] = kOne;
        rows.push_back(std::move(bound));
        if (t + 1 < cuts && cut_seg[static_cast<size_t>(t)] == cut_seg[static_cast<size_t>(t + 1)]) {
            lp::Row order{std::vector<Rational>(static_cast<size_t>(cuts)), lp::Rel::le, kZero};
            order.coeffs[static_cast<size_t>(t)] = kOne;
            order.coeffs[static_cast<size_t>(t + 1)] = Rational(-1);
            rows.push_back(std::move(order));
        }
    }
    return rows;
}

LinExpr piece_value_expr(const SegmentTable& table, int measure, const std::vector<int>& labels,
                         const std::vector<int>& cut_seg, int piece) {
    const int R = static_cast<int>(labels.size());
    LinExpr expr{std::vector<Rational>(cut_seg.size()), kZero};
    const auto& dens = table.density[static_cast<size_t>(measure)];
    const auto& pref = table.prefix[static_cast<size_t>(measure)];
    for (int t = 0; t < R; ++t) {
        if (labels[static_cast<size_t>(t)] != piece) continue;
        // + cdf(y_t)
        if (t == R - 1) {
            expr.constant += kOne;
        } else {
            const int s = cut_seg[static_cast<size_t>(t)];
            expr.constant += pref[static_cast<size_t>(s)];
            expr.coeffs[static_cast<size_t>(t)] += dens[static_cast<size_t>(s)];
        }
        // - cdf(y_{t-1})
        if (t > 0) {
            const int s = cut_seg[static_cast<size_t>(t - 1)];
            expr.constant -= pref[static_cast<size_t>(s)];
            expr.coeffs[static_cast<size_t>(t - 1)] -= dens[static_cast<size_t>(s)];
        }
    }
    return expr;
}

bool for_each_label_sequence(int R, int K, bool canonical,
                             const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    current.reserve(static_cast<size_t>(R));
    if (canonical) {
        return canonical_labels_rec(R, K, current, 0, visit);
    }
    return non_canonical_labels_rec(R, K, current, 0u, visit);
}

bool for_each_cut_assignment(int cuts, int S,
                             const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    current.reserve(static_cast<size_t>(cuts));
    return cuts_rec(cuts, S, 0, current, visit);
}

std::vector<Rational> cut_positions(const SegmentTable& table, const std::vector<int>& cut_seg,
                                    const std::vector<Rational>& solution) {
    std::vector<Rational> ys;
    ys.reserve(cut_seg.size());
    for (size_t t = 0; t < cut_seg.size(); ++t) {
        ys.push_back(table.segments[static_cast<size_t>(cut_seg[t])].lo + solution[t]);
    }
    return ys;
}

long long search_limit_from_env() {
    if (const char* env = std::getenv("FAMCAKE_SEARCH_LIMIT")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 20'000'000;
}

} // namespace famcake::detail
