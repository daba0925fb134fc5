#include "famcake/fairness.hpp"

#include "famcake/prng.hpp"

#include <doctest.h>

using namespace famcake;

namespace {

Allocation split_at(const Rational& c) {
    return Allocation({Piece::interval(Rational(0), c), Piece::interval(c, Rational(1))});
}

} // namespace

TEST_CASE("section-2 worked example classifies exactly") {
    Instance inst = gen_preset("section2");

    // Two leftmost districts to family 1: unanimous, hence everything.
    FairnessReport a = evaluate(inst, split_at(Rational(1, 2)));
    CHECK(a.verdict(Criterion::unanimous));
    CHECK(a.verdict(Criterion::average));
    CHECK(a.verdict(Criterion::democratic));
    for (const auto& row : a.member_values) {
        for (const Rational& v : row) CHECK(v == Rational(90, 96));
    }

    // Only the leftmost district to family 1: democratic but nothing else.
    FairnessReport b = evaluate(inst, split_at(Rational(1, 4)));
    CHECK(b.verdict(Criterion::democratic));
    CHECK_FALSE(b.verdict(Criterion::unanimous));
    CHECK_FALSE(b.verdict(Criterion::average));
    CHECK(b.family_avg[0] == Rational(40, 96));
    CHECK(b.satisfied_counts[0] == 2); // Alice and Bob
    CHECK(b.family_min[0] == Rational(10, 96));

    // Three leftmost districts to family 1: average but not democratic.
    FairnessReport c = evaluate(inst, split_at(Rational(3, 4)));
    CHECK(c.verdict(Criterion::average));
    CHECK_FALSE(c.verdict(Criterion::democratic));
    CHECK_FALSE(c.verdict(Criterion::unanimous));
    CHECK(c.family_avg[1] == Rational(50, 96));
    CHECK(c.satisfied_counts[1] == 1); // only Frankie
    CHECK(c.member_values[1][0] == Rational(30, 96));
}

TEST_CASE("evaluate rejects a piece-count mismatch") {
    Instance inst = gen_preset("section2");
    CHECK_THROWS_AS(evaluate(inst, Allocation({Piece::whole()})), std::invalid_argument);
}

TEST_CASE("nonadditivity fixture: W^min fails additivity, W^avg keeps it") {
    NonadditivityFixture fixture = nonadditivity_witness();
    const Family& fam = fixture.instance.family(0);
    REQUIRE(fam.size() == 3);

    auto family_stats = [&](const Piece& piece) {
        std::vector<Rational> values;
        for (const Agent& agent : fam.members) values.push_back(agent.measure.value(piece));
        std::sort(values.begin(), values.end());
        return values;
    };

    Rational min_sum(0), avg_sum(0);
    for (int d = 0; d < 3; ++d) {
        auto values = family_stats(fixture.districts[static_cast<size_t>(d)]);
        const Rational w_min = values.front();
        const Rational w_med = values[1];
        const Rational w_avg = (values[0] + values[1] + values[2]) / Rational(3);
        CHECK(w_med == w_min); // the fixture's medians coincide with the minima
        min_sum += w_min;
        avg_sum += w_avg;
        if (d == 0) CHECK(w_min == Rational(0));
        else CHECK(w_min == Rational(1, 3));
        if (d == 0) CHECK(w_avg == Rational(1, 9));
        else CHECK(w_avg == Rational(4, 9));
    }
    CHECK(min_sum == Rational(2, 3));
    auto whole = family_stats(Piece::whole());
    CHECK(whole.front() == Rational(1)); // W^min(C) = 1 > 2/3: not even subadditive
    CHECK(avg_sum == Rational(1));       // W^avg stays additive
}

TEST_CASE("democratic counts use the ceil(n_j/2) majority") {
    // One of two members suffices; one of three does not.
    ValueMeasure left = ValueMeasure({{Rational(1, 2), Rational(2)}, {Rational(1), Rational(0)}});
    ValueMeasure right = ValueMeasure({{Rational(1, 2), Rational(0)}, {Rational(1), Rational(2)}});
    Instance two({Family{"F1", Rational(1, 2), {{"a", left}, {"b", right}}},
                  Family{"F2", Rational(1, 2), {{"c", ValueMeasure::uniform()}}}});
    FairnessReport r2 = evaluate(two, split_at(Rational(1, 2)));
    CHECK(r2.satisfied_counts[0] == 1);
    CHECK(r2.verdict(Criterion::democratic));

    Instance three({Family{"F1", Rational(1, 2), {{"a", left}, {"b", right}, {"c", right}}},
                    Family{"F2", Rational(1, 2), {{"d", ValueMeasure::uniform()}}}});
    FairnessReport r3 = evaluate(three, split_at(Rational(1, 2)));
    CHECK(r3.satisfied_counts[0] == 1);
    CHECK_FALSE(r3.verdict(Criterion::democratic));
}

TEST_CASE("median aggregate is equivalent to the majority count, odd and even") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(rng.below(2));
        std::vector<int> sizes;
        for (int j = 0; j < k; ++j) sizes.push_back(1 + static_cast<int>(rng.below(4)));
        Instance inst = gen_random(k, sizes, 3, rng.next());
        std::vector<Rational> cuts;
        for (int j = 0; j + 1 < k; ++j) cuts.emplace_back(1 + static_cast<long long>(rng.below(15)), 16);
        std::sort(cuts.begin(), cuts.end());
        std::vector<Piece> pieces;
        Rational prev(0);
        for (const Rational& c : cuts) {
            pieces.push_back(prev == c ? Piece() : Piece::interval(prev, c));
            prev = c;
        }
        pieces.push_back(Piece::interval(prev, Rational(1)));
        FairnessReport report = evaluate(inst, Allocation(std::move(pieces)));
        for (int j = 0; j < k; ++j) {
            const int n_j = inst.family(j).size();
            CHECK((report.family_median[static_cast<size_t>(j)] >= inst.family(j).weight) ==
                  (report.satisfied_counts[static_cast<size_t>(j)] >= (n_j + 1) / 2));
            CHECK(report.family_min[static_cast<size_t>(j)] <=
                  report.family_avg[static_cast<size_t>(j)]);
            CHECK(report.family_min[static_cast<size_t>(j)] <=
                  report.family_median[static_cast<size_t>(j)]);
        }
        // Unanimity is the strongest criterion.
        if (report.verdict(Criterion::unanimous)) {
            CHECK(report.verdict(Criterion::average));
            CHECK(report.verdict(Criterion::democratic));
        }
        // Singleton families: all three criteria coincide.
        bool all_single = true;
        for (int j = 0; j < k; ++j) all_single = all_single && inst.family(j).size() == 1;
        if (all_single) {
            CHECK(report.verdict(Criterion::unanimous) == report.verdict(Criterion::democratic));
        }
    }
}
