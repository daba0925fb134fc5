#include "famcake/exact.hpp"

#include "famcake/errors.hpp"
#include "famcake/fairness.hpp"
#include "famcake/instance.hpp"
#include "famcake/prng.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace famcake;

namespace {

std::vector<ValueMeasure> all_measures(const Instance& inst) {
    std::vector<ValueMeasure> ms;
    for (const Family& fam : inst.families()) {
        for (const Agent& agent : fam.members) ms.push_back(agent.measure);
    }
    return ms;
}

} // namespace

TEST_CASE("ratio cut on a single uniform agent") {
    std::vector<ValueMeasure> ms{ValueMeasure::uniform()};
    auto [p, q] = exact_ratio_cut(ms, Piece::whole(), Rational(1, 3));
    CHECK(p == Piece::interval(Rational(0), Rational(1, 3)));
    CHECK(q == Piece::interval(Rational(1, 3), Rational(1)));
}

TEST_CASE("ratio cut at 1/2 for all six section-2 agents") {
    std::vector<ValueMeasure> ms = all_measures(gen_preset("section2"));
    auto [p, q] = exact_ratio_cut(ms, Piece::whole(), Rational(1, 2));
    CHECK(p == Piece::from_intervals({{Rational(0), Rational(1, 8)},
                                      {Rational(1, 4), Rational(3, 8)},
                                      {Rational(1, 2), Rational(5, 8)},
                                      {Rational(3, 4), Rational(7, 8)}}));
    // Every agent values the piece at exactly one half; checked by direct
    // evaluation, independently of the construction.
    for (const ValueMeasure& m : ms) {
        CHECK(m.value(p) == Rational(1, 2));
        CHECK(m.value(q) == Rational(1, 2));
    }
}

TEST_CASE("degenerate ratios") {
    std::vector<ValueMeasure> ms = all_measures(gen_random(2, {2, 2}, 3, 5));
    Piece within = Piece::from_intervals({{Rational(1, 8), Rational(1, 2)},
                                          {Rational(5, 8), Rational(1)}});
    auto [p0, q0] = exact_ratio_cut(ms, within, Rational(0));
    CHECK(p0.empty());
    CHECK(q0 == within);
    auto [p1, q1] = exact_ratio_cut(ms, within, Rational(1));
    CHECK(p1 == within);
    CHECK(q1.empty());
}

TEST_CASE("ratio cut rejects bad inputs") {
    std::vector<ValueMeasure> ms{ValueMeasure::uniform()};
    CHECK_THROWS_AS(exact_ratio_cut(ms, Piece::whole(), Rational(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(exact_ratio_cut(ms, Piece::whole(), Rational(-1, 2)), std::invalid_argument);
    // A measure with zero value on `within` cannot take part in the cut.
    std::vector<ValueMeasure> single_minded{
        ValueMeasure::from_district_values({1, 0, 0, 0})};
    CHECK_THROWS_AS(exact_ratio_cut(single_minded,
                                    Piece::interval(Rational(1, 2), Rational(1)), Rational(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("cuts at r and 1-r mirror each other") {
    for (uint64_t seed = 11; seed <= 15; ++seed) {
        std::vector<ValueMeasure> ms = all_measures(gen_random(2, {2, 1}, 4, seed));
        Piece within = Piece::whole();
        for (const Rational& r : {Rational(1, 5), Rational(2, 5), Rational(7, 9)}) {
            auto cut = exact_ratio_cut(ms, within, r);
            auto mirror = exact_ratio_cut(ms, within, Rational(1) - r);
            CHECK(cut.first == mirror.second);
            CHECK(cut.second == mirror.first);
        }
        // At exactly 1/2 the two calls coincide, so only values mirror.
        auto half = exact_ratio_cut(ms, within, Rational(1, 2));
        for (const ValueMeasure& m : ms) CHECK(m.value(half.first) == m.value(half.second));
    }
}

TEST_CASE("exact division into equal and weighted shares") {
    std::vector<ValueMeasure> uniform{ValueMeasure::uniform()};
    Allocation thirds = exact_division(uniform, 3, Piece::whole());
    CHECK(thirds.piece(0) == Piece::interval(Rational(0), Rational(1, 3)));
    CHECK(thirds.piece(1) == Piece::interval(Rational(1, 3), Rational(2, 3)));
    CHECK(thirds.piece(2) == Piece::interval(Rational(2, 3), Rational(1)));

    std::vector<ValueMeasure> ms = all_measures(gen_preset("section2"));
    Allocation halves = exact_division(ms, 2, Piece::whole());
    CHECK(comp(halves) == 8); // K*S with S = 4 refinement segments

    std::vector<ValueMeasure> two{ValueMeasure::uniform(), ValueMeasure::uniform()};
    Allocation weighted = exact_division(two, 2, Piece::whole(),
                                         std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
    CHECK(weighted.piece(0) == Piece::interval(Rational(0), Rational(1, 3)));
    CHECK(weighted.piece(1) == Piece::interval(Rational(1, 3), Rational(1)));

    CHECK_THROWS_AS(exact_division(uniform, 2, Piece::whole(),
                                   std::vector<Rational>{Rational(1, 3), Rational(1, 3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_division(uniform, 0, Piece::whole()), std::invalid_argument);
}

TEST_CASE("exact division is exact for every measure and share") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const int K = 1 + static_cast<int>(rng.below(4));
        Instance inst = gen_random(1, {n}, 3, rng.next());
        std::vector<ValueMeasure> ms = all_measures(inst);

        std::vector<Rational> shares;
        long long total = 0;
        std::vector<long long> raw;
        for (int j = 0; j < K; ++j) {
            raw.push_back(1 + static_cast<long long>(rng.below(5)));
            total += raw.back();
        }
        for (long long r : raw) shares.emplace_back(r, total);

        Allocation division = exact_division(ms, K, Piece::whole(), shares);
        std::vector<const ValueMeasure*> ptrs;
        for (const ValueMeasure& m : ms) ptrs.push_back(&m);
        const int S = refinement_segment_count(ptrs, Piece::whole());
        CHECK(comp(division) <= K * S);
        CHECK(validate_partition(division).valid());
        for (const ValueMeasure& m : ms) {
            for (int j = 0; j < K; ++j) {
                CHECK(m.value(division.piece(j)) == shares[static_cast<size_t>(j)]);
            }
        }
    }
}

TEST_CASE("dropping a measure never increases the refinement") {
    for (uint64_t seed = 21; seed <= 25; ++seed) {
        std::vector<ValueMeasure> ms = all_measures(gen_random(2, {2, 2}, 4, seed));
        std::vector<const ValueMeasure*> all;
        for (const ValueMeasure& m : ms) all.push_back(&m);
        const int with_all = refinement_segment_count(all, Piece::whole());
        for (size_t drop = 0; drop < ms.size(); ++drop) {
            std::vector<const ValueMeasure*> fewer;
            for (size_t i = 0; i < ms.size(); ++i) {
                if (i != drop) fewer.push_back(&ms[i]);
            }
            CHECK(refinement_segment_count(fewer, Piece::whole()) <= with_all);
        }
    }
}

TEST_CASE("min-cut search: single uniform agent halves with one cut") {
    std::vector<ValueMeasure> ms{ValueMeasure::uniform()};
    ExactSearchResult found = min_cut_exact_search(ms, 2, 1);
    REQUIRE(found.feasible());
    CHECK(found.plan->achieved_components == 2);
    CHECK(found.plan->allocation.piece(0) == Piece::interval(Rational(0), Rational(1, 2)));
}

TEST_CASE("min-cut search: opposed supports need three components") {
    std::vector<ValueMeasure> ms{
        ValueMeasure({{Rational(1, 2), Rational(2)}, {Rational(1), Rational(0)}}),
        ValueMeasure({{Rational(1, 2), Rational(0)}, {Rational(1), Rational(2)}})};
    CHECK_FALSE(min_cut_exact_search(ms, 2, 1).feasible());
    ExactSearchResult found = min_cut_exact_search(ms, 2, 2);
    REQUIRE(found.feasible());
    CHECK(found.plan->achieved_components == 3);
    for (const ValueMeasure& m : ms) {
        for (const Piece& p : found.plan->allocation.pieces()) {
            CHECK(m.value(p) == Rational(1, 2));
        }
    }
}

TEST_CASE("min-cut search on the section-2 agents (regression fixture)") {
    // All six agents can agree on an exact halving with 5 components, two
    // fewer than the N(K-1)+1 = 7 worst-case line (David and Eva share a
    // measure, and the families' low-interest districts leave slack).
    std::vector<ValueMeasure> ms = all_measures(gen_preset("section2"));
    ExactSearchResult found = min_cut_exact_search(ms, 2, 5);
    REQUIRE(found.feasible());
    CHECK(found.plan->achieved_components == 5);
    for (const ValueMeasure& m : ms) {
        for (const Piece& p : found.plan->allocation.pieces()) {
            CHECK(m.value(p) == Rational(1, 2));
        }
    }
    // The plan's per-segment view partitions each refinement segment.
    for (const SegmentSplit& split : found.plan->per_segment_splits) {
        Rational covered(0);
        for (const auto& [part, label] : split.parts) {
            CHECK(part.lo >= split.segment.lo);
            CHECK(part.hi <= split.segment.hi);
            covered += part.length();
        }
        CHECK(covered == split.segment.length());
    }
}

TEST_CASE("min-cut search enforces its desk-scale limit") {
    std::vector<ValueMeasure> ms = all_measures(gen_random(2, {4, 4}, 6, 3));
    CHECK_THROWS_AS(min_cut_exact_search(ms, 4, 3), std::invalid_argument);
}

TEST_CASE("min-cut search honors FAMCAKE_SEARCH_LIMIT") {
    std::vector<ValueMeasure> ms = all_measures(gen_preset("section2"));
    setenv("FAMCAKE_SEARCH_LIMIT", "2", 1);
    CHECK_THROWS_AS(min_cut_exact_search(ms, 2, 5), search_limit_error);
    unsetenv("FAMCAKE_SEARCH_LIMIT");
}
