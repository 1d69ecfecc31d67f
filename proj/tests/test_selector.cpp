#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "rhind/ground_truth.hpp"
#include "rhind/select.hpp"

using namespace rhind;

TEST_CASE("mother table") {
    const auto& rows = mother_table();
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].decomposition == Decomposition{TargetFraction(2, 3), {2, 6}});
    CHECK(rows[1].decomposition == Decomposition{TargetFraction(2, 5), {3, 15}});
    CHECK(rows[1].m2 == 3);
    CHECK(rows[2].decomposition == Decomposition{TargetFraction(2, 7), {4, 28}});
    CHECK(rows[3].decomposition == Decomposition{TargetFraction(2, 11), {6, 66}});
    CHECK(rows[3].m2 == 6);
    for (const MotherRow& row : rows) CHECK(verify_identity(row.decomposition));
}

TEST_CASE("mother_scaling_of") {
    const auto link51 = mother_scaling_of({TargetFraction(2, 51), {34, 102}});
    REQUIRE(link51);
    CHECK(link51->first.d == 3);
    CHECK(link51->second == 17);

    CHECK_FALSE(mother_scaling_of({TargetFraction(2, 91), {70, 130}}));

    const auto link55 = mother_scaling_of({TargetFraction(2, 55), {30, 330}});
    REQUIRE(link55);
    CHECK(link55->first.d == 11);
    CHECK(link55->second == 5);
}

TEST_CASE("resolve_conflict") {
    const TierRow a{10, 30, 2, Rational(2)};
    const TierRow b{12, 20, 2, Rational(4, 3)};
    CHECK(resolve_conflict({a, b}).winner.n1 == 10);
    CHECK(resolve_conflict({b, a}).winner.n1 == 10);

    // 2/91: m2 = 4 sits at distance 2 from 2, mu = 10/7 at distance 4/7
    const TierRow c{52, 364, 6, Rational(4)};
    const TierRow d{70, 130, 6, Rational(10, 7)};
    const ConflictResult r = resolve_conflict({c, d});
    CHECK(r.winner.n1 == 70);
    REQUIRE(r.losers.size() == 1);
    CHECK(r.losers[0].n1 == 52);
    CHECK(DeltaMu(c.multiplicity).value == Rational(-2));
    CHECK(DeltaMu(d.multiplicity).value == Rational(4, 7));
    CHECK(DeltaMu(d.multiplicity).distance == Rational(4, 7));

    const ConflictResult solo = resolve_conflict({d});
    CHECK(solo.winner.n1 == 70);
    CHECK(solo.losers.empty());

    CHECK_THROWS_AS(resolve_conflict({}), std::invalid_argument);
}

TEST_CASE("resolve_conflict is invariant under permutation") {
    std::vector<TierRow> tier{{12, 20, 2, Rational(4, 3)},
                              {10, 30, 2, Rational(2)},
                              {9, 45, 2, Rational(3)}};
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(tier.begin(), tier.end(), rng);
        CHECK(resolve_conflict(tier).winner.n1 == 10);
    }
}

TEST_CASE("apply_precept removes rows with any odd part") {
    const auto rows77 = alternatives(77).rows;
    const auto kept = apply_precept(rows77);
    for (const ClassifiedRow& row : kept) {
        CHECK(row.candidate.n1 % 2 == 0);
        CHECK(row.candidate.n2 % 2 == 0);
    }
    CHECK(kept.size() == rows77.size() - 1); // only (63, 99) goes

    std::vector<ClassifiedRow> countable95;
    for (const ClassifiedRow& row : alternatives(95).rows)
        if (row.countable()) countable95.push_back(row);
    CHECK(apply_precept(countable95).empty());

    CHECK(apply_precept(kept).size() == kept.size()); // idempotent
}

TEST_CASE("select: group A") {
    const SelectionTrace t = select(9);
    CHECK(t.group == Group::A);
    CHECK(t.chosen == Decomposition{TargetFraction(2, 9), {6, 18}});
    CHECK(t.chosen_rank == 2);
    REQUIRE(t.mother_link);
    CHECK(t.mother_link->first.d == 3);
}

TEST_CASE("select: group B conflict for 2/91") {
    const SelectionTrace t = select(91);
    CHECK(t.group == Group::B);
    CHECK(t.chosen.parts() == std::vector<Int>{70, 130});
    bool loserTagged = false;
    for (const Rejection& r : t.rejected)
        if (r.row.candidate.pair() == std::pair<Int, Int>{52, 364})
            loserTagged = r.reason == Reason::conflict_lost;
    CHECK(loserTagged);
    CHECK_FALSE(t.mother_link);
}

TEST_CASE("select: precept case 2/77") {
    const SelectionTrace t = select(77);
    CHECK(t.group == Group::C);
    CHECK(t.chosen.parts() == std::vector<Int>{44, 308});
    CHECK(t.chosen_rank == 6);
    bool oddTagged = false;
    for (const Rejection& r : t.rejected)
        if (r.row.candidate.pair() == std::pair<Int, Int>{63, 99})
            oddTagged = r.reason == Reason::odd_parts;
    CHECK(oddTagged);
}

TEST_CASE("select: three-term fallback for 2/95") {
    const SelectionTrace t = select(95);
    CHECK(t.group == Group::E95);
    CHECK(t.chosen.parts() == std::vector<Int>{60, 380, 570});
    CHECK(verify_identity(t.chosen));
    // part multiplicities of the last two denominators with 95: 4 and 6
    CHECK(t.chosen.parts()[1] == 4 * 95);
    CHECK(t.chosen.parts()[2] == 6 * 95);
}

TEST_CASE("select: mother necessity for 2/55") {
    const SelectionTrace t = select(55);
    CHECK(t.group == Group::D55);
    CHECK(t.chosen.parts() == std::vector<Int>{30, 330});
    REQUIRE(t.mother_link);
    CHECK(t.mother_link->first.d == 11);
    CHECK(t.mother_link->second == 5);
    bool overrideTagged = false;
    for (const Rejection& r : t.rejected)
        if (r.row.candidate.pair() == std::pair<Int, Int>{33, 165})
            overrideTagged = r.reason == Reason::mother_necessity_override;
    CHECK(overrideTagged);
}

TEST_CASE("select matches the ground truth for all 25 composites") {
    const GroundTruthStore& store = default_ground_truth();
    for (Int d : odd_composites_9_99()) {
        CAPTURE(d);
        CHECK(select(d).chosen == store.ahmes.at(d));
    }
}

TEST_CASE("select is deterministic") {
    for (Int d : {15, 55, 77, 91, 95}) {
        const SelectionTrace a = select(d);
        const SelectionTrace b = select(d);
        CHECK(a.chosen == b.chosen);
        CHECK(a.group == b.group);
        CHECK(a.rejected.size() == b.rejected.size());
    }
}

TEST_CASE("select rejects invalid targets") {
    CHECK_THROWS_AS(select(13), std::invalid_argument);  // prime
    CHECK_THROWS_AS(select(12), std::invalid_argument);  // even
    CHECK_THROWS_AS(select(105), std::invalid_argument); // out of range
}

TEST_CASE("selection_order reproduces the stated order") {
    const auto order = selection_order();
    const std::vector<Int> expectedA{9,  21, 27, 33, 35, 39, 51, 57,
                                     69, 81, 87, 93, 25, 65, 85, 49};
    const std::vector<Int> expectedB{15, 45, 63, 75, 99, 91};
    REQUIRE(order.size() == 25);
    CHECK(order.front() == std::pair{Group::A, Int{9}});
    CHECK(order.back() == std::pair{Group::E95, Int{95}});
    for (std::size_t i = 0; i < expectedA.size(); ++i)
        CHECK(order[i] == std::pair{Group::A, expectedA[i]});
    CHECK(order[15].second == 49); // 2/49 closes group A
    for (std::size_t i = 0; i < expectedB.size(); ++i)
        CHECK(order[16 + i] == std::pair{Group::B, expectedB[i]});
    CHECK(order[22] == std::pair{Group::C, Int{77}});
    CHECK(order[23] == std::pair{Group::D55, Int{55}});
}

TEST_CASE("mother usage statistics") {
    const MotherUsage usage = mother_usage_stats(select_all());
    CHECK(usage.counts == std::array<Int, 4>{16, 3, 2, 1});
    CHECK(usage.unscaled == std::set<Int>{35, 91});
    CHECK(usage.three_term == std::set<Int>{95});
}

TEST_CASE("every chosen multiplicity respects the top-flag") {
    for (const SelectionTrace& t : select_all()) {
        const Int q = t.d;
        for (std::size_t i = 1; i < t.chosen.parts().size(); ++i) {
            const Int part = t.chosen.parts()[i];
            if (part % q == 0) CHECK(part / q <= 6);
        }
    }
}

TEST_CASE("the rejected four-term 2/95 row verifies but is never selected") {
    const Decomposition& fourTerm = rejected_four_term_95();
    CHECK(verify_identity(fourTerm));
    CHECK(fourTerm.parts().size() == 4);
    CHECK_FALSE(select(95).chosen == fourTerm);
}

TEST_CASE("embedded 2/19 three-term row") {
    const Decomposition& d = two_nineteen_three_term();
    CHECK(verify_identity(d));
    CHECK(d.parts() == std::vector<Int>{12, 76, 114});
}
