#include "famcake/allocation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace famcake {

Piece Piece::from_intervals(std::vector<Interval> intervals) {
    const Rational zero(0), one(1);
    std::erase_if(intervals, [](const Interval& iv) { return iv.lo == iv.hi; });
    for (const Interval& iv : intervals) {
        if (iv.lo > iv.hi) {
            throw std::invalid_argument("Piece: interval with lo > hi: [" + iv.lo.str() + "," +
                                        iv.hi.str() + "]");
        }
        if (iv.lo < zero || iv.hi > one) {
            throw std::invalid_argument("Piece: interval outside [0,1]: [" + iv.lo.str() + "," +
                                        iv.hi.str() + "]");
        }
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Piece out;
    for (Interval& iv : intervals) {
        if (!out.intervals_.empty()) {
            Interval& prev = out.intervals_.back();
            if (iv.lo < prev.hi) {
                throw std::invalid_argument("Piece: overlapping intervals near [" + iv.lo.str() +
                                            "," + min(iv.hi, prev.hi).str() + "]");
            }
            if (iv.lo == prev.hi) {
                prev.hi = std::move(iv.hi);
                continue;
            }
        }
        out.intervals_.push_back(std::move(iv));
    }
    return out;
}

Rational Piece::length() const {
    Rational total(0);
    for (const Interval& iv : intervals_) total += iv.length();
    return total;
}

Piece Piece::intersect(const Piece& a, const Piece& b) {
    std::vector<Interval> out;
    size_t i = 0, j = 0;
    while (i < a.intervals_.size() && j < b.intervals_.size()) {
        const Interval& x = a.intervals_[i];
        const Interval& y = b.intervals_[j];
        Rational lo = max(x.lo, y.lo);
        Rational hi = min(x.hi, y.hi);
        if (lo < hi) out.push_back({lo, hi});
        if (x.hi <= y.hi) ++i; else ++j;
    }
    return from_intervals(std::move(out));
}

Piece Piece::complement_in(const Piece& inner, const Piece& outer) {
    std::vector<Interval> out;
    for (const Interval& o : outer.intervals_) {
        Rational cursor = o.lo;
        for (const Interval& iv : inner.intervals_) {
            if (iv.hi <= cursor) continue;
            if (iv.lo >= o.hi) break;
            if (iv.lo > cursor) out.push_back({cursor, iv.lo});
            cursor = max(cursor, min(iv.hi, o.hi));
        }
        if (cursor < o.hi) out.push_back({cursor, o.hi});
    }
    return from_intervals(std::move(out));
}

Piece Piece::unite(const Piece& a, const Piece& b) {
    // Merge rather than canonicalize, so positive-length overlap is legal here.
    std::vector<Interval> all = a.intervals_;
    all.insert(all.end(), b.intervals_.begin(), b.intervals_.end());
    std::sort(all.begin(), all.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> merged;
    for (Interval& iv : all) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return from_intervals(std::move(merged));
}

bool Piece::contains(const Piece& other) const {
    return intersect(*this, other) == other;
}

std::string Piece::str() const {
    if (intervals_.empty()) return "(empty)";
    std::ostringstream os;
    for (size_t i = 0; i < intervals_.size(); ++i) {
        if (i > 0) os << " u ";
        os << "[" << intervals_[i].lo.str() << "," << intervals_[i].hi.str() << "]";
    }
    return os.str();
}

int comp(const Allocation& x) {
    int total = 0;
    for (const Piece& p : x.pieces()) total += p.components();
    return total;
}

std::string PartitionVerdict::str() const {
    switch (kind) {
        case Kind::valid: return "valid";
        case Kind::gap:
            return "gap at [" + where->lo.str() + "," + where->hi.str() + "]";
        case Kind::overlap:
            return "overlap at [" + where->lo.str() + "," + where->hi.str() + "]";
    }
    return "?";
}

PartitionVerdict validate_partition(const Allocation& x) {
    std::vector<Interval> all;
    for (const Piece& p : x.pieces()) {
        all.insert(all.end(), p.intervals().begin(), p.intervals().end());
    }
    std::sort(all.begin(), all.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    const Rational zero(0), one(1);
    Rational cursor = zero;
    for (const Interval& iv : all) {
        if (iv.lo > cursor) {
            return {PartitionVerdict::Kind::gap, Interval{cursor, iv.lo}};
        }
        if (iv.lo < cursor) {
            return {PartitionVerdict::Kind::overlap, Interval{iv.lo, min(cursor, iv.hi)}};
        }
        cursor = iv.hi;
    }
    if (cursor < one) {
        return {PartitionVerdict::Kind::gap, Interval{cursor, one}};
    }
    return {};
}

} // namespace famcake
