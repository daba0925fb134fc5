#include "famcake/protocols.hpp"

#include "famcake/fairness.hpp"
#include "famcake/prng.hpp"

#include <doctest.h>

using namespace famcake;

namespace {

Instance uniform_singletons(int k) {
    std::vector<Family> fams;
    for (int j = 0; j < k; ++j) {
        fams.push_back(Family{"F" + std::to_string(j + 1),
                              Rational(1, k),
                              {{"a" + std::to_string(j + 1), ValueMeasure::uniform()}}});
    }
    return Instance(std::move(fams));
}

void check_sound(const Instance& inst, const ProtocolResult& result, Criterion criterion) {
    CHECK(validate_partition(result.allocation).valid());
    CHECK(evaluate(inst, result.allocation).verdict(criterion));
    CHECK(result.comp <= result.impl_bound);
}

} // namespace

TEST_CASE("average division of the section-2 instance is connected") {
    Instance inst = gen_preset("section2");
    ProtocolResult result = divide_average(inst);
    CHECK(result.comp == 2);
    check_sound(inst, result, Criterion::average);
    FairnessReport report = evaluate(inst, result.allocation);
    CHECK(report.family_avg[0] >= Rational(1, 2));
    CHECK(report.family_avg[1] >= Rational(1, 2));
}

TEST_CASE("identical uniform singleton families split into consecutive equal intervals") {
    for (int k : {2, 3, 4, 5}) {
        Instance inst = uniform_singletons(k);
        ProtocolResult result = divide_average(inst);
        CHECK(result.comp == k);
        for (int j = 0; j < k; ++j) {
            CHECK(result.allocation.piece(j) ==
                  Piece::interval(Rational(j, k), Rational(j + 1, k)));
        }
    }
}

TEST_CASE("average division with unequal entitlements delegates to the weighted recursion") {
    Instance inst = gen_preset("thm2", {{"k", 2}});
    ProtocolResult result = divide_average(inst);
    check_sound(inst, result, Criterion::average);
    CHECK(result.comp >= 3); // connected average division is impossible here
    CHECK(result.theory_bound.has_value());
}

TEST_CASE("unanimous choose method on section 2") {
    Instance inst = gen_preset("section2");
    ProtocolResult result = divide_unanimous(inst, UnanimousMethod::choose);
    check_sound(inst, result, Criterion::unanimous);
    // Frankie (the left-out agent) values the left-halves piece at exactly
    // 48/96 and the tie sends his family to the first piece.
    Piece left_halves = Piece::from_intervals({{Rational(0), Rational(1, 8)},
                                               {Rational(1, 4), Rational(3, 8)},
                                               {Rational(1, 2), Rational(5, 8)},
                                               {Rational(3, 4), Rational(7, 8)}});
    CHECK(result.allocation.piece(1) == left_halves);
    const ValueMeasure& frankie = inst.family(1).members[2].measure;
    CHECK(frankie.value(left_halves) == Rational(48, 96));
    CHECK(result.comp == 8);
    CHECK(result.impl_bound == 8);
    CHECK(result.theory_bound == 5 * 1 + 1); // (n-1)(k-1)+1
}

TEST_CASE("unanimous division of the lemma5 instance") {
    Instance inst = gen_preset("lemma5", {{"k", 2}, {"m", 3}});
    for (auto method : {UnanimousMethod::choose, UnanimousMethod::recursive}) {
        ProtocolResult result = divide_unanimous(inst, method);
        check_sound(inst, result, Criterion::unanimous);
    }
}

TEST_CASE("weighted unanimous recursion on singleton uniform families") {
    Instance inst({Family{"F1", Rational(1, 3), {{"a", ValueMeasure::uniform()}}},
                   Family{"F2", Rational(2, 3), {{"b", ValueMeasure::uniform()}}}});
    ProtocolResult result = divide_unanimous(inst, UnanimousMethod::recursive);
    CHECK(result.allocation.piece(0) == Piece::interval(Rational(0), Rational(1, 3)));
    CHECK(result.allocation.piece(1) == Piece::interval(Rational(1, 3), Rational(1)));
    check_sound(inst, result, Criterion::unanimous);
}

TEST_CASE("the choose method rejects unequal entitlements") {
    Instance inst({Family{"F1", Rational(1, 3), {{"a", ValueMeasure::uniform()}}},
                   Family{"F2", Rational(2, 3), {{"b", ValueMeasure::uniform()}}}});
    CHECK_THROWS_AS(divide_unanimous(inst, UnanimousMethod::choose), std::invalid_argument);
}

TEST_CASE("two-family democratic division: identical uniform families cut at one half") {
    Instance inst = gen_random(2, {1, 1}, 1, 1); // both members uniform (single segment)
    ProtocolResult result = divide_democratic_two(inst);
    CHECK(result.allocation.piece(0) == Piece::interval(Rational(0), Rational(1, 2)));
    CHECK(result.comp == 2);
}

TEST_CASE("two-family democratic division: medians and midpoint cut") {
    Instance inst({Family{"F1", Rational(1, 2), {{"a", ValueMeasure::uniform()}}},
                   Family{"F2",
                          Rational(1, 2),
                          {{"b", ValueMeasure({{Rational(1, 2), Rational(0)},
                                               {Rational(1), Rational(2)}})}}}});
    ProtocolResult result = divide_democratic_two(inst);
    // marks 1/2 and 3/4 -> cut at 5/8
    CHECK(result.allocation.piece(0) == Piece::interval(Rational(0), Rational(5, 8)));
    CHECK(result.allocation.piece(1) == Piece::interval(Rational(5, 8), Rational(1)));
    const ValueMeasure& b = inst.family(1).members[0].measure;
    CHECK(b.value(result.allocation.piece(1)) == Rational(3, 4));
}

TEST_CASE("two-family democratic division on section 2") {
    Instance inst = gen_preset("section2");
    ProtocolResult result = divide_democratic_two(inst);
    // family medians 6/25 and 27/40; cut at their midpoint 183/400
    CHECK(result.allocation.piece(0) == Piece::interval(Rational(0), Rational(183, 400)));
    CHECK(result.comp == 2);
    check_sound(inst, result, Criterion::democratic);
}

TEST_CASE("two-family democratic division validates its preconditions") {
    CHECK_THROWS_AS(divide_democratic_two(uniform_singletons(3)), std::invalid_argument);
    Instance unequal({Family{"F1", Rational(1, 3), {{"a", ValueMeasure::uniform()}}},
                      Family{"F2", Rational(2, 3), {{"b", ValueMeasure::uniform()}}}});
    CHECK_THROWS_AS(divide_democratic_two(unequal), std::invalid_argument);
}

TEST_CASE("k-family democratic division: three uniform singletons") {
    Instance inst = uniform_singletons(3);
    ProtocolResult result = divide_democratic_k(inst, DemocraticMode::equal);
    CHECK(result.comp == 3);
    check_sound(inst, result, Criterion::democratic);
    // Everyone marks 2/3; the west pair splits [0,2/3] into thirds of the cake.
    for (int j = 0; j < 3; ++j) {
        CHECK(inst.family(j).members[0].measure.value(result.allocation.piece(j)) ==
              Rational(1, 3));
    }
}

TEST_CASE("k-family democratic division cuts section 2 at the smaller family median") {
    Instance inst = gen_preset("section2");
    ProtocolResult result = divide_democratic_k(inst, DemocraticMode::equal);
    CHECK(result.allocation.piece(0) == Piece::interval(Rational(0), Rational(6, 25)));
    CHECK(result.allocation.piece(1) == Piece::interval(Rational(6, 25), Rational(1)));
    FairnessReport report = evaluate(inst, result.allocation);
    CHECK(report.member_values[0][0] == Rational(3, 5)); // Alice: 57.6 of 96
    CHECK(report.member_values[0][1] == Rational(1, 2)); // Bob marks exactly here
    CHECK(report.satisfied_counts[0] == 2);              // Charlie is unhappy
    CHECK(report.satisfied_counts[1] == 3);
    CHECK(report.verdict(Criterion::democratic));
}

TEST_CASE("k-family democratic division on the lemma5 grid") {
    Instance inst = gen_preset("lemma5", {{"k", 4}, {"m", 4}});
    ProtocolResult result = divide_democratic_k(inst, DemocraticMode::equal);
    check_sound(inst, result, Criterion::democratic);
    // Known lower bound for this grid shape: n(k/2-1)/(k-1) = 16/3.
    CHECK(result.comp >= 6);
}

TEST_CASE("entitled democratic division serves the counted majority exactly") {
    Instance inst = gen_random(3, {3, 2, 3}, 3, 17, gen_random_weights(3, 17));
    ProtocolResult result = divide_democratic_k(inst, DemocraticMode::entitled);
    check_sound(inst, result, Criterion::democratic);
    FairnessReport report = evaluate(inst, result.allocation);
    for (int j = 0; j < 3; ++j) {
        // The first ceil(n_j/2) members receive exactly w_j.
        for (int i = 0; i < (inst.family(j).size() + 1) / 2; ++i) {
            CHECK(report.member_values[static_cast<size_t>(j)][static_cast<size_t>(i)] ==
                  inst.family(j).weight);
        }
    }
    CHECK_THROWS_AS(divide_democratic_k(inst, DemocraticMode::equal), std::invalid_argument);
}

TEST_CASE("all-singleton families reduce to classic proportionality") {
    // One member per family: the weighted recursion hands family j exactly w_j.
    SplitMix64 rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 2 + static_cast<int>(rng.below(3));
        const uint64_t seed = rng.next();
        Instance inst = gen_random(k, std::vector<int>(static_cast<size_t>(k), 1), 3, seed,
                                   gen_random_weights(k, seed));
        ProtocolResult result = divide_unanimous(inst, UnanimousMethod::recursive);
        FairnessReport report = evaluate(inst, result.allocation);
        for (int j = 0; j < k; ++j) {
            CHECK(report.member_values[static_cast<size_t>(j)][0] >= inst.family(j).weight);
        }
        // Singletons: unanimous, democratic and classic proportionality agree.
        CHECK(report.verdict(Criterion::unanimous));
        CHECK(report.verdict(Criterion::democratic));
    }
}

TEST_CASE("single-family instances take the whole cake under every protocol") {
    Instance inst = gen_random(1, {1}, 3, 7);
    for (const ProtocolResult& result :
         {divide_average(inst), divide_unanimous(inst, UnanimousMethod::recursive),
          divide_unanimous(inst, UnanimousMethod::choose),
          divide_democratic_k(inst, DemocraticMode::equal)}) {
        CHECK(result.comp == 1);
        CHECK(result.allocation.piece(0) == Piece::whole());
    }
}

TEST_CASE("protocol soundness over seeded random instances") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + static_cast<int>(rng.below(3));
        std::vector<int> sizes;
        for (int j = 0; j < k; ++j) sizes.push_back(1 + static_cast<int>(rng.below(3)));
        const uint64_t seed = rng.next();

        Instance equal = gen_random(k, sizes, 3, seed);
        ProtocolResult avg = divide_average(equal);
        check_sound(equal, avg, Criterion::average);
        CHECK(avg.comp == k); // connected under equal entitlements

        ProtocolResult unan = divide_unanimous(equal, UnanimousMethod::recursive);
        check_sound(equal, unan, Criterion::unanimous);
        ProtocolResult chosen = divide_unanimous(equal, UnanimousMethod::choose);
        check_sound(equal, chosen, Criterion::unanimous);

        ProtocolResult dem = divide_democratic_k(equal, DemocraticMode::equal);
        check_sound(equal, dem, Criterion::democratic);
        if (k == 2) {
            ProtocolResult two = divide_democratic_two(equal);
            CHECK(two.comp == 2);
            check_sound(equal, two, Criterion::democratic);
        }

        Instance weighted = gen_random(k, sizes, 3, seed, gen_random_weights(k, seed));
        ProtocolResult wavg = divide_average(weighted);
        check_sound(weighted, wavg, Criterion::average);
        ProtocolResult wunan = divide_unanimous(weighted, UnanimousMethod::recursive);
        check_sound(weighted, wunan, Criterion::unanimous);
        ProtocolResult wdem = divide_democratic_k(weighted, DemocraticMode::entitled);
        check_sound(weighted, wdem, Criterion::democratic);
    }
}
