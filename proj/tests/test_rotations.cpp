#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "stablelattice/generate.hpp"
#include "stablelattice/oracle.hpp"
#include "stablelattice/rotations.hpp"
#include "test_support.hpp"

using namespace stablelattice;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// The diamond's two rotations: ab swap between girls 1,2 and cd swap between
// girls 3,4.
const Rotation kRotAB{Pairs{{0, 0}, {1, 1}}};
const Rotation kRotCD{Pairs{{2, 2}, {3, 3}}};

}  // namespace

TEST_CASE("canonical form rotates the smallest boy to the front") {
    auto r = Rotation::canonical(Pairs{{2, 2}, {0, 0}, {1, 1}});
    CHECK(r.pairs == Pairs{{0, 0}, {1, 1}, {2, 2}});
    CHECK(r.size() == 3);
    CHECK_THROWS_AS(Rotation::canonical(Pairs{{0, 0}}), DomainError);
    CHECK_THROWS_AS(Rotation::canonical(Pairs{{0, 0}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(Rotation::canonical(Pairs{{0, 0}, {1, 0}}), DomainError);
}

TEST_CASE("exposed rotations of the diamond") {
    auto inst = fixtures::diamond();
    auto at_top = exposed_rotations(inst, fixtures::kM0);
    REQUIRE(at_top.size() == 2);
    CHECK(at_top[0] == kRotAB);
    CHECK(at_top[1] == kRotCD);

    CHECK(exposed_rotations(inst, fixtures::kM1) == std::vector<Rotation>{kRotAB});
    CHECK(exposed_rotations(inst, fixtures::kM2) == std::vector<Rotation>{kRotCD});
    CHECK(exposed_rotations(inst, fixtures::kMz).empty());

    CHECK_THROWS_AS(exposed_rotations(inst, Matching{{3, 2, 1, 0}}), DomainError);
}

TEST_CASE("elimination applies an exposed rotation and rejects the rest") {
    auto inst = fixtures::diamond();
    CHECK(eliminate(inst, fixtures::kM0, kRotAB) == fixtures::kM2);
    CHECK(eliminate(inst, fixtures::kM0, kRotCD) == fixtures::kM1);
    CHECK(eliminate(inst, fixtures::kM1, kRotAB) == fixtures::kMz);
    CHECK(eliminate(inst, fixtures::kM2, kRotCD) == fixtures::kMz);

    // Not matched / not exposed.
    CHECK_THROWS_AS(eliminate(inst, fixtures::kMz, kRotAB), DomainError);
    CHECK_THROWS_AS(eliminate(inst, fixtures::kM2, kRotAB), DomainError);
    CHECK_THROWS_AS(eliminate(inst, fixtures::kM0, Rotation{Pairs{{0, 0}, {2, 2}}}), DomainError);
}

TEST_CASE("the diamond rotation poset") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);

    REQUIRE(poset.rotation_count() == 2);
    CHECK(poset.element_count() == 4);
    CHECK(poset.rotation(2) == kRotAB);
    CHECK(poset.rotation(3) == kRotCD);

    using E = std::vector<std::pair<int, int>>;
    CHECK(poset.hasse_edges() == E{{0, 2}, {0, 3}, {2, 1}, {3, 1}});

    CHECK(poset.precedes(0, 2));
    CHECK(poset.precedes(0, 1));
    CHECK(poset.precedes(2, 1));
    CHECK_FALSE(poset.precedes(2, 3));
    CHECK_FALSE(poset.precedes(3, 2));
    CHECK_FALSE(poset.precedes(2, 2));
    CHECK_FALSE(poset.precedes(2, 0));

    CHECK(poset.preds_closed(2).to_vector() == std::vector<int>{0, 2});
    CHECK(poset.succs_closed(2).to_vector() == std::vector<int>{1, 2});
    CHECK(poset.preds_strict(1).to_vector() == std::vector<int>{0, 2, 3});

    // a moves from girl 1 to girl 2 via the ab rotation.
    CHECK(poset.move_to(0, 0) == 0);
    CHECK(poset.move_to(0, 1) == 2);
    CHECK(poset.move_from(0, 0) == 2);
    CHECK(poset.move_from(0, 1) == 1);
    CHECK(poset.move_to(2, 3) == 3);
    CHECK(poset.move_from(2, 2) == 3);
    CHECK_FALSE(poset.move_to(0, 2).has_value());
    CHECK_FALSE(poset.move_from(0, 3).has_value());

    REQUIRE(poset.hops_of_boy(0).size() == 2);
    CHECK(poset.hops_of_boy(0)[0].element == 0);
    CHECK(poset.hops_of_boy(0)[0].girl == 0);
    CHECK(poset.hops_of_boy(0)[1].element == 2);
    CHECK(poset.hops_of_boy(0)[1].girl == 1);
    REQUIRE(poset.hops_of_boy(3).size() == 2);
    CHECK(poset.hops_of_boy(3)[1].girl == 2);
}

TEST_CASE("closed sets of the diamond map to its four matchings") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);

    auto closed = enumerate_proper_closed_sets(poset);
    REQUIRE(closed.size() == 4);
    CHECK(closed[0].members.to_vector() == std::vector<int>{0});
    CHECK(closed[1].members.to_vector() == std::vector<int>{0, 2});
    CHECK(closed[2].members.to_vector() == std::vector<int>{0, 3});
    CHECK(closed[3].members.to_vector() == std::vector<int>{0, 2, 3});

    CHECK(matching_from_closed_set(poset, inst, closed[0]) == fixtures::kM0);
    CHECK(matching_from_closed_set(poset, inst, closed[1]) == fixtures::kM2);
    CHECK(matching_from_closed_set(poset, inst, closed[2]) == fixtures::kM1);
    CHECK(matching_from_closed_set(poset, inst, closed[3]) == fixtures::kMz);

    for (const auto& cs : closed) {
        auto m = matching_from_closed_set(poset, inst, cs);
        CHECK(closed_set_from_matching(poset, inst, m) == cs);
    }

    // Improper inputs: missing s, containing t, not downward closed.
    DynBitset no_s(4);
    CHECK_FALSE(is_proper_closed(poset, no_s));
    DynBitset with_t = DynBitset::full(4);
    CHECK_FALSE(is_proper_closed(poset, with_t));
    CHECK_THROWS_AS(matching_from_closed_set(poset, inst, ClosedSet{no_s}), DomainError);
    CHECK_THROWS_AS(closed_set_from_matching(poset, inst, Matching{{3, 2, 1, 0}}), DomainError);
}

TEST_CASE("deep chains keep closed sets downward closed") {
    GeneratorConfig cfg;
    cfg.n = 4;
    cfg.mode = GeneratorConfig::Mode::adversarial_swap;
    auto inst = generate(cfg);
    auto poset = build_rotation_poset(inst);

    // Three full-length rotations in one chain.
    REQUIRE(poset.rotation_count() == 3);
    for (const auto& rho : poset.rotations()) CHECK(rho.size() == 4);
    CHECK(poset.precedes(2, 3));
    CHECK(poset.precedes(3, 4));
    using E = std::vector<std::pair<int, int>>;
    CHECK(poset.hasse_edges() == E{{0, 2}, {2, 3}, {3, 4}, {4, 1}});

    DynBitset skip(5);
    skip.set(0);
    skip.set(3);  // middle rotation without its predecessor
    CHECK_FALSE(is_proper_closed(poset, skip));
    skip.set(2);
    CHECK(is_proper_closed(poset, skip));
    CHECK(enumerate_proper_closed_sets(poset).size() == 4);
}

TEST_CASE("trivial poset of a single-matching instance") {
    Instance inst({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}});
    auto poset = build_rotation_poset(inst);
    CHECK(poset.rotation_count() == 0);
    using E = std::vector<std::pair<int, int>>;
    CHECK(poset.hasse_edges() == E{{0, 1}});
    auto closed = enumerate_proper_closed_sets(poset);
    REQUIRE(closed.size() == 1);
    CHECK(matching_from_closed_set(poset, inst, closed[0]) == Matching{{0, 1}});
}

TEST_CASE("rotation structure matches exhaustive enumeration on random instances") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 2 + static_cast<int>(rng.next_below(6));
        cfg.seed = rng.next();
        auto inst = generate(cfg);
        auto snap = enumerate_stable(inst);
        auto poset = build_rotation_poset(inst);

        CAPTURE(cfg.n);
        CAPTURE(cfg.seed);
        CHECK(poset.rotation_count() <= cfg.n * (cfg.n - 1) / 2);

        auto closed = enumerate_proper_closed_sets(poset);
        REQUIRE(closed.size() == snap.matchings.size());

        // The bijection onto stable matchings inverts both ways, and set
        // inclusion mirrors dominance: fewer rotations eliminated means a
        // better matching for the boys.
        std::vector<Matching> mapped;
        for (const auto& cs : closed) {
            auto m = matching_from_closed_set(poset, inst, cs);
            CHECK(closed_set_from_matching(poset, inst, m) == cs);
            mapped.push_back(m);
        }
        auto sorted = mapped;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == snap.matchings);

        for (std::size_t i = 0; i < closed.size(); ++i) {
            for (std::size_t j = 0; j < closed.size(); ++j) {
                bool included = closed[i].members.is_subset_of(closed[j].members);
                CHECK(included == dominates(inst, mapped[i], mapped[j]));
            }
        }

        // Intersections and unions of closed sets track meet and join.
        for (std::size_t i = 0; i < closed.size(); ++i) {
            for (std::size_t j = i + 1; j < closed.size(); ++j) {
                ClosedSet lo{closed[i].members & closed[j].members};
                ClosedSet hi{closed[i].members | closed[j].members};
                CHECK(matching_from_closed_set(poset, inst, lo) ==
                      meet(inst, mapped[i], mapped[j]));
                CHECK(matching_from_closed_set(poset, inst, hi) ==
                      join(inst, mapped[i], mapped[j]));
            }
        }

        // Ladder sanity: every boy walks strictly down his own list, from his
        // best stable partner to his worst, one poset element per hop.
        auto m0 = deferred_acceptance(inst, Side::boys);
        auto mz = deferred_acceptance(inst, Side::girls);
        for (int b = 0; b < cfg.n; ++b) {
            const auto& hops = poset.hops_of_boy(b);
            REQUIRE(!hops.empty());
            CHECK(hops.front().girl == m0.partner(b));
            CHECK(hops.back().girl == mz.partner(b));
            for (std::size_t h = 1; h < hops.size(); ++h) {
                CHECK(inst.boy_prefers(b, hops[h - 1].girl, hops[h].girl));
                int from = hops[h - 1].girl, to = hops[h].girl;
                CHECK(poset.move_from(b, from) == hops[h].element);
                CHECK(poset.move_to(b, to) == hops[h].element);
                CHECK(poset.precedes(hops[h - 1].element, hops[h].element));
            }
        }
    }
}
