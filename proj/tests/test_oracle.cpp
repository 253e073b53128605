#include <doctest.h>

#include <algorithm>
#include <vector>

#include "stablelattice/generate.hpp"
#include "stablelattice/oracle.hpp"
#include "stablelattice/robust.hpp"
#include "test_support.hpp"

using namespace stablelattice;

TEST_CASE("exhaustive enumeration finds the diamond lattice") {
    auto inst = fixtures::diamond();
    auto snap = enumerate_stable(inst);
    REQUIRE(snap.matchings.size() == 4);
    // Sorted by partner vector: m0 < m1 < m2 < mz.
    CHECK(snap.matchings[0] == fixtures::kM0);
    CHECK(snap.matchings[1] == fixtures::kM1);
    CHECK(snap.matchings[2] == fixtures::kM2);
    CHECK(snap.matchings[3] == fixtures::kMz);
    CHECK(snap.top == 0);
    CHECK(snap.bottom == 3);

    std::vector<std::vector<bool>> expected = {
        {true, true, true, true},
        {false, true, false, true},
        {false, false, true, true},
        {false, false, false, true},
    };
    CHECK(snap.dominance == expected);

    CHECK(snap.index_of(fixtures::kM2) == 2);
    CHECK(snap.index_of(Matching{{2, 3, 0, 1}}) == -1);
    CHECK(snap.contains(fixtures::kMz));
}

TEST_CASE("enumeration refuses instances beyond the bound") {
    GeneratorConfig cfg;
    cfg.n = 9;
    cfg.seed = 7;
    auto big = generate(cfg);
    CHECK_THROWS_AS(enumerate_stable(big), DomainError);
    CHECK_THROWS_AS(enumerate_stable(fixtures::diamond(), 3), DomainError);
    CHECK_NOTHROW(enumerate_stable(big, 9));
}

TEST_CASE("closure checks classify diamond subsets") {
    auto inst = fixtures::diamond();
    auto snap = enumerate_stable(inst);
    using Ms = std::vector<Matching>;

    CHECK(is_sublattice(inst, snap, snap.matchings));
    CHECK(is_sublattice(inst, snap, Ms{fixtures::kM0}));
    CHECK(is_sublattice(inst, snap, Ms{}));
    CHECK(is_sublattice(inst, snap, Ms{fixtures::kM0, fixtures::kM1}));

    // m1 and m2 are incomparable: their join and meet are mz and m0.
    Ms incomparable{fixtures::kM1, fixtures::kM2};
    CHECK_FALSE(is_join_semi(inst, snap, incomparable));
    CHECK_FALSE(is_meet_semi(inst, snap, incomparable));

    Ms lower{fixtures::kM0, fixtures::kM1, fixtures::kM2};
    CHECK(is_meet_semi(inst, snap, lower));
    CHECK_FALSE(is_join_semi(inst, snap, lower));

    Ms upper{fixtures::kM1, fixtures::kM2, fixtures::kMz};
    CHECK(is_join_semi(inst, snap, upper));
    CHECK_FALSE(is_meet_semi(inst, snap, upper));

    CHECK_THROWS_AS(is_sublattice(inst, snap, Ms{Matching{{2, 3, 0, 1}}}), DomainError);
}

TEST_CASE("single errors split the diamond as predicted") {
    auto inst = fixtures::diamond();
    auto girl_err = parse_errors(fixtures::kGirl1Error, inst);
    auto boy_err = parse_errors(fixtures::kBoyAError, inst);
    REQUIRE(girl_err.size() == 1);
    REQUIRE(boy_err.size() == 1);

    // Under the girl-1 swap, (c,1) or (a,1) blocks everything except m0.
    auto robust_girl = brute_force_robust(inst, girl_err);
    CHECK(robust_girl == std::vector<Matching>{fixtures::kM0});

    // Under the boy-a swap, (a,2) blocks m0 and m1.
    auto robust_boy = brute_force_robust(inst, boy_err);
    CHECK(robust_boy == std::vector<Matching>{fixtures::kM2, fixtures::kMz});

    // Both at once leave nothing.
    std::vector<ErrorSpec> both{girl_err[0], boy_err[0]};
    CHECK(brute_force_robust(inst, both).empty());

    // No errors: everything survives.
    CHECK(brute_force_robust(inst, {}).size() == 4);
}

TEST_CASE("sets that stay stable under one error are semi-sublattices") {
    // The complement of the surviving set is join semi-closed for a girl
    // error and meet semi-closed for a boy error; the surviving set itself is
    // a sublattice. Checked across random instances and random single errors.
    SplitMix64 rng(20260816);
    for (int trial = 0; trial < 40; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 2 + static_cast<int>(rng.next_below(5));
        cfg.seed = rng.next();
        auto inst = generate(cfg);
        auto snap = enumerate_stable(inst);

        ErrorSpec err;
        err.side = rng.next_below(2) ? Side::boys : Side::girls;
        err.agent = 1 + static_cast<int>(rng.next_below(cfg.n));
        auto list = random_permutation(cfg.n, rng);
        for (int& x : list) ++x;
        err.new_list = list;

        auto surviving = brute_force_robust(inst, {err});
        CHECK(is_sublattice(inst, snap, surviving));

        std::vector<Matching> broken;
        for (const auto& m : snap.matchings)
            if (std::find(surviving.begin(), surviving.end(), m) == surviving.end())
                broken.push_back(m);
        if (err.side == Side::girls) {
            CHECK(is_join_semi(inst, snap, broken));
        } else {
            CHECK(is_meet_semi(inst, snap, broken));
        }
    }
}
