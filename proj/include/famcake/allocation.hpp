#pragma once

#include "famcake/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace famcake {

// Closed subinterval of the cake [0,1]. Canonical intervals have lo < hi;
// single points carry no value (all measures are non-atomic), so degenerate
// intervals are dropped during canonicalization.
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of intervals, kept sorted, pairwise disjoint and with adjacent
// intervals merged. A piece may be empty.
class Piece {
  public:
    Piece() = default;

    // Canonicalizes: sorts, drops degenerate intervals, merges intervals that
    // share an endpoint. Intervals that overlap with positive length are
    // rejected as malformed, as are intervals outside [0,1].
    static Piece from_intervals(std::vector<Interval> intervals);

    static Piece whole() { return from_intervals({Interval{Rational(0), Rational(1)}}); }
    static Piece interval(Rational lo, Rational hi) {
        return from_intervals({Interval{std::move(lo), std::move(hi)}});
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    int components() const { return static_cast<int>(intervals_.size()); }
    Rational length() const;

    // Set difference outer \ inner. inner need not be contained in outer.
    static Piece complement_in(const Piece& inner, const Piece& outer);
    static Piece intersect(const Piece& a, const Piece& b);
    static Piece unite(const Piece& a, const Piece& b);

    bool contains(const Piece& other) const;

    std::string str() const;
    friend bool operator==(const Piece&, const Piece&) = default;

  private:
    std::vector<Interval> intervals_;
};

// One piece per family, indexed like the instance's family list.
class Allocation {
  public:
    Allocation() = default;
    explicit Allocation(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

    const std::vector<Piece>& pieces() const { return pieces_; }
    const Piece& piece(int j) const { return pieces_.at(static_cast<size_t>(j)); }
    int family_count() const { return static_cast<int>(pieces_.size()); }

    friend bool operator==(const Allocation&, const Allocation&) = default;

  private:
    std::vector<Piece> pieces_;
};

// Total number of connected components over all pieces.
int comp(const Allocation& x);

struct PartitionVerdict {
    enum class Kind { valid, gap, overlap };
    Kind kind = Kind::valid;
    std::optional<Interval> where; // first offending gap or overlap

    bool valid() const { return kind == Kind::valid; }
    std::string str() const;
};

// Checks that the pieces are pairwise disjoint (up to shared endpoints) and
// that their union covers [0,1]. Returns the first violation found, scanning
// left to right.
PartitionVerdict validate_partition(const Allocation& x);

} // namespace famcake
