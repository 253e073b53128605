#include <doctest.h>

#include <algorithm>
#include <vector>

#include "stablelattice/compression.hpp"
#include "stablelattice/generate.hpp"
#include "stablelattice/oracle.hpp"
#include "stablelattice/rotations.hpp"
#include "test_support.hpp"

using namespace stablelattice;

namespace {

EdgeSet es(std::vector<Edge> edges) { return EdgeSet{std::move(edges)}; }

std::vector<std::vector<int>> closed_vectors(const std::vector<ClosedSet>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& cs : sets) out.push_back(cs.members.to_vector());
    return out;
}

}  // namespace

TEST_CASE("separation and crossing of a single edge") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);
    auto closed = enumerate_proper_closed_sets(poset);
    REQUIRE(closed.size() == 4);

    // Edge from the ab rotation down to s: separated when s is in and the
    // rotation is out; never crossed, since s is in every proper closed set.
    Edge down{2, 0};
    CHECK(separates(closed[0], down));        // {s}
    CHECK(separates(closed[2], down));        // {s, cd}
    CHECK_FALSE(separates(closed[1], down));  // {s, ab}
    for (const auto& cs : closed) CHECK_FALSE(crosses(cs, down));

    // The reverse edge is crossed by exactly those sets and separated by none.
    Edge up{0, 2};
    CHECK(crosses(closed[0], up));
    CHECK(crosses(closed[2], up));
    CHECK_FALSE(crosses(closed[1], up));
    for (const auto& cs : closed) CHECK_FALSE(separates(cs, up));

    Edge from_t{1, 3};                    // from t down to the cd rotation
    CHECK(separates(closed[2], from_t));  // {s, cd}: head in, tail out
    CHECK_FALSE(separates(closed[1], from_t));
    CHECK_FALSE(crosses(closed[2], from_t));  // t is never inside
}

TEST_CASE("shrinking the diamond with both top edges merges all but s") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);
    auto edges = es({{1, 2}, {1, 3}});  // t -> ab, t -> cd

    auto meta = shrink(poset, edges);
    REQUIRE(meta.block_count() == 2);
    CHECK(meta.blocks()[0] == std::vector<int>{0});
    CHECK(meta.blocks()[1] == std::vector<int>{1, 2, 3});
    CHECK(meta.a_s() == 0);
    CHECK(meta.a_t() == 1);
    CHECK(meta.dag_edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(meta.block_of(2) == 1);

    auto sets = closed_sets_of_meta(meta);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].members.to_vector() == std::vector<int>{0});
    CHECK(matching_from_closed_set(poset, inst, sets[0]) == fixtures::kM0);
}

TEST_CASE("shrinking with an implication edge keeps singleton blocks") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);
    auto edges = es({{3, 2}});  // cd -> ab: any set keeping ab must keep cd

    auto meta = shrink(poset, edges);
    REQUIRE(meta.block_count() == 4);
    CHECK(meta.blocks() == std::vector<std::vector<int>>{{0}, {3}, {2}, {1}});
    CHECK(meta.a_s() == 0);
    CHECK(meta.a_t() == 3);
    CHECK(meta.dag_edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});

    auto sets = closed_sets_of_meta(meta);
    CHECK(closed_vectors(sets) == std::vector<std::vector<int>>{{0}, {0, 3}, {0, 2, 3}});

    // The same edge drives the direct matching filter to the same lattice.
    auto sub = sublattice_from_edges(poset, inst, edges);
    CHECK(sub == std::vector<Matching>{fixtures::kM0, fixtures::kM1, fixtures::kMz});
}

TEST_CASE("an edge cycle through both dummies empties the lattice") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);
    auto edges = es({{1, 0}});  // t -> s merges everything

    auto meta = shrink(poset, edges);
    CHECK(meta.block_count() == 1);
    CHECK(meta.a_s() == meta.a_t());
    CHECK(closed_sets_of_meta(meta).empty());
    CHECK(sublattice_from_edges(poset, inst, edges).empty());
}

TEST_CASE("compressing a sublattice reproduces its closed sets") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);
    std::vector<Matching> sub{fixtures::kM0, fixtures::kM1, fixtures::kMz};

    auto meta = compression_from_sublattice(poset, inst, sub);
    REQUIRE(meta.block_count() == 4);
    CHECK(meta.blocks() == std::vector<std::vector<int>>{{0}, {3}, {2}, {1}});
    CHECK(meta.a_s() == 0);
    CHECK(meta.a_t() == 3);

    auto sets = closed_sets_of_meta(meta);
    CHECK(closed_vectors(sets) == std::vector<std::vector<int>>{{0}, {0, 3}, {0, 2, 3}});

    // Lattice members that always move together fuse into one block: a
    // singleton sublattice leaves only the two dummy blocks.
    auto whole = compression_from_sublattice(
        poset, inst, {fixtures::kM0, fixtures::kM1, fixtures::kM2, fixtures::kMz});
    CHECK(whole.block_count() == 4);
    auto single = compression_from_sublattice(poset, inst, {fixtures::kM1});
    CHECK(single.block_count() == 2);
    CHECK(single.blocks()[0] == std::vector<int>{0, 3});
    CHECK(single.blocks()[1] == std::vector<int>{1, 2});
    CHECK(closed_sets_of_meta(single).size() == 1);

    CHECK_THROWS_AS(compression_from_sublattice(poset, inst, {}), DomainError);
    CHECK_THROWS_AS(compression_from_sublattice(poset, inst, {fixtures::kM1, fixtures::kM2}),
                    DomainError);
}

TEST_CASE("minimal defining edge sets") {
    auto inst = fixtures::diamond();
    auto poset = build_rotation_poset(inst);

    // The implication cd -> ab is already forced by the two upper edges.
    CHECK(minimize_edges(poset, es({{1, 2}, {1, 3}, {3, 2}})) == es({{1, 2}, {1, 3}}));

    // Poset-respecting edges separate nothing and vanish.
    CHECK(minimize_edges(poset, es({{0, 2}, {2, 1}})).edges.empty());

    // Duplicates collapse before selection.
    CHECK(minimize_edges(poset, es({{1, 2}, {1, 2}})) == es({{1, 2}}));

    CHECK(minimize_edges(poset, EdgeSet{}).edges.empty());
}

TEST_CASE("meta poset constructor validates its invariants") {
    MetaPoset ok(2, {{0}, {1}}, {{0, 1}}, 0, 1);
    CHECK(ok.element_count() == 2);
    CHECK(ok.block_bits(0).to_vector() == std::vector<int>{0});
    CHECK(ok.block_preds_closed()[1].to_vector() == std::vector<int>{0, 1});
    CHECK(ok.block_succs_closed()[0].to_vector() == std::vector<int>{0, 1});

    CHECK_THROWS_AS(MetaPoset(2, {{0}, {1}}, {{1, 0}}, 0, 1), DomainError);  // backward edge
    CHECK_THROWS_AS(MetaPoset(2, {{0}, {0, 1}}, {}, 0, 1), DomainError);     // overlap
    CHECK_THROWS_AS(MetaPoset(2, {{0}}, {}, 0, 0), DomainError);             // element uncovered
    CHECK_THROWS_AS(MetaPoset(2, {{0}, {1}}, {}, 0, 2), DomainError);        // dummy out of range
}

TEST_CASE("random edge sets shrink and compress consistently") {
    SplitMix64 rng(505);
    int nonempty_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        GeneratorConfig cfg;
        cfg.n = 2 + static_cast<int>(rng.next_below(5));
        cfg.seed = rng.next();
        auto inst = generate(cfg);
        auto poset = build_rotation_poset(inst);
        int k = poset.element_count();

        EdgeSet edges;
        int count = static_cast<int>(rng.next_below(4));
        for (int i = 0; i < count; ++i) {
            int tail = static_cast<int>(rng.next_below(k));
            int head = static_cast<int>(rng.next_below(k));
            if (tail != head) edges.edges.push_back({tail, head});
        }
        CAPTURE(cfg.n);
        CAPTURE(cfg.seed);

        // Reference: keep exactly the stable matchings separating no edge.
        auto sub = sublattice_from_edges(poset, inst, edges);

        auto meta = shrink(poset, edges);
        auto sets = closed_sets_of_meta(meta);
        REQUIRE(sets.size() == sub.size());
        std::vector<Matching> mapped;
        for (const auto& cs : sets) mapped.push_back(matching_from_closed_set(poset, inst, cs));
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == sub);

        if (sub.empty()) continue;
        ++nonempty_seen;

        // Round trip: compressing the surviving sublattice must describe the
        // same family of closed sets, and a minimized edge set must re-derive
        // the same sublattice.
        auto meta2 = compression_from_sublattice(poset, inst, sub);
        auto sets2 = closed_sets_of_meta(meta2);
        CHECK(closed_vectors(sets2) == closed_vectors(sets));

        auto mini = minimize_edges(poset, edges);
        CHECK(mini.edges.size() <= edges.edges.size());
        CHECK(sublattice_from_edges(poset, inst, mini) == sub);
    }
    CHECK(nonempty_seen > 10);
}
