#include <doctest.h>

#include <vector>

#include "powpath/components.hpp"
#include "powpath/errors.hpp"
#include "powpath/extremal.hpp"
#include "powpath/factors.hpp"
#include "powpath/graphs.hpp"

using namespace powpath;

namespace {

// Standard exercise bed: the path-extremal graph for (3, 20, 14) with
// I_1 = {0..5}, I_2 = {6..11}, X_1 = {12..15}, X_2 = {16..19}.
struct Bed {
    Graph g;
    ExtremalLayout layout;
    FactorPartition part;

    Bed() {
        auto built = build_G_p({3, 20, 14});
        g = built.first;
        layout = built.second;
        part.u1 = layout.cliques[0];
        part.u2 = layout.cliques[1];
        part.x = {layout.independent_sets[0], layout.independent_sets[1]};
        part.a = VertexSet(20);
    }
};

std::vector<int> first_two(const VertexSet& s) {
    int a = s.first();
    return {a, s.next(a)};
}

std::vector<int> last_two(const VertexSet& s) {
    std::vector<int> all = s.to_vector();
    return {all[all.size() - 2], all.back()};
}

}  // namespace

TEST_CASE("two-stage factor reaches its guaranteed count") {
    Bed bed;
    std::vector<std::vector<int>> seed{first_two(bed.part.u1), last_two(bed.part.u1)};
    ConnectedCliqueFactor f = greedy_factor_two_stage(bed.g, bed.part, seed);
    // surplus 2, s1 = (2 + 4)/3 = 2: both seeds finish as K_4's.
    CHECK(f.count() == 2);
    CHECK(f.size() == 8);
    CliqueComponentDecomposition d = decompose(bed.g, 3);
    CHECK(validate_connected_factor(bed.g, d, f));
    // Every clique holds its seed edge plus one vertex of each I_j.
    for (const auto& c : f.cliques) {
        CHECK(static_cast<int>(c.size()) == 4);
        int in_i1 = 0, in_i2 = 0, in_u1 = 0;
        for (int v : c) {
            if (bed.part.x[0].test(v)) ++in_i1;
            if (bed.part.x[1].test(v)) ++in_i2;
            if (bed.part.u1.test(v)) ++in_u1;
        }
        CHECK(in_u1 == 2);
        CHECK(in_i1 == 1);
        CHECK(in_i2 == 1);
    }
}

TEST_CASE("two-stage factor with no seeds is empty") {
    Bed bed;
    ConnectedCliqueFactor f = greedy_factor_two_stage(bed.g, bed.part, {});
    CHECK(f.count() == 0);
    CHECK(f.size() == 0);
    CHECK(f.component_id == -1);
}

TEST_CASE("two-stage cap truncates surplus seeds") {
    auto [g, layout] = build_G_p({2, 12, 7});
    FactorPartition part;
    part.u1 = layout.cliques[0];  // {5,6,7,8}
    part.u2 = layout.cliques[1];  // {9,10,11}
    part.x = {layout.independent_sets[0]};
    part.a = VertexSet(12);
    std::vector<std::vector<int>> seed{{5, 6}, {7, 8}};
    // surplus 2, s1 = (2 + 3)/3 = 1 and floor(|U_2|/2) = 1: one clique only.
    ConnectedCliqueFactor f = greedy_factor_two_stage(g, part, seed);
    CHECK(f.count() == 1);
    CHECK(f.size() == 3);
    REQUIRE(f.cliques.size() == 1);
    CHECK(f.cliques[0][1] == 5);  // the first seed is the one kept
    CHECK(f.cliques[0][2] == 6);
}

TEST_CASE("two-stage hypothesis checks name the failing clause") {
    auto [g, layout] = build_G_p({2, 12, 7});

    FactorPartition short_part;
    short_part.u1 = layout.cliques[0];
    short_part.u2 = VertexSet(12);
    short_part.x = {layout.independent_sets[0]};
    short_part.a = VertexSet(12);  // X_2 unassigned
    CHECK_THROWS_WITH_AS(greedy_factor_two_stage(g, short_part, {}),
                         doctest::Contains("vertex partition"), hypothesis_violation);

    FactorPartition crossing;
    crossing.u1 = layout.cliques[0];
    crossing.u2 = layout.independent_sets[0];  // complete to U_1
    crossing.x = {layout.cliques[1]};
    crossing.a = VertexSet(12);
    CHECK_THROWS_WITH_AS(greedy_factor_two_stage(g, crossing, {}),
                         doctest::Contains("U_1 and U_2"), hypothesis_violation);

    FactorPartition oversize;
    oversize.u1 = layout.cliques[0];
    oversize.u2 = VertexSet(12);
    oversize.x = {layout.independent_sets[0] | layout.cliques[1]};  // 8 > n - delta
    oversize.a = VertexSet(12);
    CHECK_THROWS_WITH_AS(greedy_factor_two_stage(g, oversize, {}),
                         doctest::Contains("class size"), hypothesis_violation);

    Graph sparse(6);
    for (int v = 0; v < 6; ++v) sparse.add_edge(v, (v + 1) % 6);
    FactorPartition sp;
    sp.u1 = VertexSet::of(6, {0});
    sp.u2 = VertexSet(6);
    sp.x = {VertexSet::of(6, {1, 2, 3, 4, 5})};
    sp.a = VertexSet(6);
    CHECK_THROWS_WITH_AS(greedy_factor_two_stage(sparse, sp, {}),
                         doctest::Contains("minimum degree"), hypothesis_violation);

    Bed bed;
    std::vector<std::vector<int>> stray{{0, 12}};  // 0 lies in I_1, not U_1
    CHECK_THROWS_WITH_AS(greedy_factor_two_stage(bed.g, bed.part, stray),
                         doctest::Contains("seed cliques"), hypothesis_violation);
    std::vector<std::vector<int>> single{{12}};
    CHECK_THROWS_WITH_AS(greedy_factor_two_stage(bed.g, bed.part, single),
                         doctest::Contains("seed cliques"), hypothesis_violation);
}

TEST_CASE("matching factor walks each kept edge through the classes") {
    Bed bed;
    Matching f{{{12, 13}, {14, 15}}};
    ConnectedCliqueFactor out = greedy_factor_matching(bed.g, bed.part, f);
    // q = 2 + |X_2| - |X_1| - 0 = 2: both edges survive.
    CHECK(out.count() == 2);
    CHECK(out.size() == 8);
    CliqueComponentDecomposition d = decompose(bed.g, 3);
    CHECK(validate_connected_factor(bed.g, d, out));
}

TEST_CASE("matching factor with a unit budget keeps one edge") {
    auto [g, layout] = build_G_p({2, 12, 7});
    FactorPartition part;
    part.u1 = layout.cliques[0];
    part.u2 = layout.cliques[1];
    part.x = {layout.independent_sets[0]};
    part.a = VertexSet(12);
    Matching f{{{5, 6}, {7, 8}}};
    // q = 2 + 3 - 4 - 0 = 1.
    ConnectedCliqueFactor out = greedy_factor_matching(g, part, f);
    CHECK(out.count() == 1);
    CHECK(out.size() == 3);
}

TEST_CASE("matching factor rejects bad seeds") {
    Bed bed;
    Matching nonedge{{{12, 16}}};  // X_1 to X_2: not an edge
    CHECK_THROWS_WITH_AS(greedy_factor_matching(bed.g, bed.part, nonedge),
                         doctest::Contains("matching inside U_1"), hypothesis_violation);
    Matching outside{{{0, 12}}};  // an edge, but 0 is not in U_1
    CHECK_THROWS_WITH_AS(greedy_factor_matching(bed.g, bed.part, outside),
                         doctest::Contains("matching inside U_1"), hypothesis_violation);
}

TEST_CASE("parallel factor with an idle second process matches the two-stage result") {
    Bed bed;
    std::vector<std::vector<int>> seed{first_two(bed.part.u1), last_two(bed.part.u1)};
    ConnectedCliqueFactor ts = greedy_factor_two_stage(bed.g, bed.part, seed);

    ParallelFactorInput in;
    in.u = bed.part;
    in.v1 = VertexSet(20);
    in.v2 = bed.layout.cliques[1];          // X_2
    in.x_prime = bed.layout.independent_sets[1];  // I_2
    in.a_prime = bed.layout.cliques[0];     // X_1
    in.seed_u = seed;
    in.d1 = 2;
    in.d2 = 0;
    ConnectedCliqueFactor par = greedy_factor_parallel(bed.g, in);
    CHECK(par.cliques == ts.cliques);
    CHECK(par.component_id == ts.component_id);
}

TEST_CASE("parallel factor runs both processes off one big clique") {
    Bed bed;
    // U_1 = {12,13} and V_1 = {14,15} split X_1; the avoided classes swap.
    ParallelFactorInput in;
    in.u.u1 = VertexSet::of(20, {12, 13});
    in.u.u2 = bed.layout.cliques[1];
    in.u.x = {bed.layout.independent_sets[0], bed.layout.independent_sets[1]};
    in.u.a = VertexSet::of(20, {14, 15});
    in.v1 = VertexSet::of(20, {14, 15});
    in.v2 = bed.layout.cliques[1];
    in.x_prime = bed.layout.independent_sets[1];
    in.a_prime = VertexSet::of(20, {12, 13});
    in.seed_u = {{12, 13}};
    in.seed_v = {{14, 15}};
    in.d1 = 2;
    in.d2 = 1;
    ConnectedCliqueFactor f = greedy_factor_parallel(bed.g, in);
    // cap_u = min{1, 2, 2, s1 = 4/3, s2 = 4/3} = 1;
    // cap_v = min{1, 1, t1 = 1, t2 = 1} = 1.
    CHECK(f.count() == 2);
    CHECK(f.size() == 8);
    CliqueComponentDecomposition d = decompose(bed.g, 3);
    CHECK(validate_connected_factor(bed.g, d, f));
    bool u_seed_used = false, v_seed_used = false;
    for (const auto& c : f.cliques) {
        VertexSet bits(20);
        for (int v : c) bits.set(v);
        if (bits.test(12) && bits.test(13)) u_seed_used = true;
        if (bits.test(14) && bits.test(15)) v_seed_used = true;
    }
    CHECK(u_seed_used);
    CHECK(v_seed_used);
}

TEST_CASE("parallel factor verifies its extra hypotheses") {
    Bed bed;
    ParallelFactorInput in;
    in.u.u1 = VertexSet::of(20, {12, 13});
    in.u.u2 = bed.layout.cliques[1];
    in.u.x = {bed.layout.independent_sets[0], bed.layout.independent_sets[1]};
    in.u.a = VertexSet::of(20, {14, 15});
    in.v1 = VertexSet::of(20, {13, 14});  // overlaps U_1
    in.v2 = bed.layout.cliques[1];
    in.x_prime = bed.layout.independent_sets[1];
    in.a_prime = VertexSet::of(20, {12, 15});
    in.d1 = 1;
    in.d2 = 1;
    CHECK_THROWS_WITH_AS(greedy_factor_parallel(bed.g, in),
                         doctest::Contains("U_1 and V_1"), hypothesis_violation);

    in.v1 = VertexSet::of(20, {14, 15});
    in.a_prime = VertexSet::of(20, {12, 13});
    in.d2 = 3;  // |V_2| = 4 < 2*3 + 1
    CHECK_THROWS_WITH_AS(greedy_factor_parallel(bed.g, in),
                         doctest::Contains("process caps"), hypothesis_violation);

    in.d1 = 1;
    in.d2 = 1;
    in.seed_u = {{12, 13}};      // K_2 seeds for U...
    in.seed_v = {{14}};          // ...but undersized V seeds
    CHECK_THROWS_WITH_AS(greedy_factor_parallel(bed.g, in),
                         doctest::Contains("seed cliques"), hypothesis_violation);
}

TEST_CASE("hall extension grows every seed when the sets are plentiful") {
    Bed bed;
    Matching seed{{{12, 13}, {14, 15}}};
    HallExtensionResult res = hall_extension_factor(
        bed.g, bed.layout.cliques[0],
        {bed.layout.independent_sets[0], bed.layout.independent_sets[1]}, seed);
    CHECK(res.complete);
    CHECK(res.count() == 2);
    CHECK(res.size() == 8);
    CHECK(res.connected);
    CHECK(res.component_id >= 0);
    REQUIRE(res.audit.size() == 2);
    for (const HallStepAudit& a : res.audit) {
        CHECK(a.factor_before == 2);
        CHECK(a.set_size == 6);
        CHECK(a.guaranteed == 2);
        CHECK(a.achieved == 2);
    }
}

TEST_CASE("hall extension shrinks when an independent set is too small") {
    Bed bed;
    Matching seed{{{12, 13}, {14, 15}}};
    VertexSet tiny = VertexSet::of(20, {0});
    HallExtensionResult res =
        hall_extension_factor(bed.g, bed.layout.cliques[0], {tiny}, seed);
    CHECK(res.complete);
    CHECK(res.count() == 1);
    REQUIRE(res.audit.size() == 1);
    CHECK(res.audit[0].factor_before == 2);
    CHECK(res.audit[0].set_size == 1);
    CHECK(res.audit[0].achieved == 1);
}

TEST_CASE("hall extension without sets returns the seed edges unfinished") {
    Bed bed;
    Matching seed{{{12, 13}}};
    HallExtensionResult res = hall_extension_factor(bed.g, bed.layout.cliques[0], {}, seed);
    CHECK(!res.complete);
    CHECK(!res.connected);
    CHECK(res.component_id == -1);
    CHECK(res.count() == 1);
    CHECK(res.size() == 2);
    CHECK(res.audit.empty());
}

TEST_CASE("hall extension rejects malformed inputs") {
    Bed bed;
    Matching seed{{{12, 13}}};
    VertexSet overlap = bed.layout.cliques[0];  // not disjoint from the exterior
    CHECK_THROWS_WITH_AS(
        hall_extension_factor(bed.g, bed.layout.cliques[0], {overlap}, seed),
        doctest::Contains("independent sets"), hypothesis_violation);

    VertexSet edgy = VertexSet::of(20, {16, 17});  // spans an X_2 edge
    CHECK_THROWS_WITH_AS(hall_extension_factor(bed.g, bed.layout.cliques[0], {edgy}, seed),
                         doctest::Contains("independent sets"), hypothesis_violation);

    Matching outside{{{0, 6}}};  // valid edge, but not inside the exterior
    CHECK_THROWS_WITH_AS(
        hall_extension_factor(bed.g, bed.layout.cliques[0], {}, outside),
        doctest::Contains("seed inside exterior"), hypothesis_violation);
}

TEST_CASE("factor validator rejects structural defects") {
    Bed bed;
    CliqueComponentDecomposition d = decompose(bed.g, 3);
    Matching seedm{{{12, 13}, {14, 15}}};
    ConnectedCliqueFactor good = greedy_factor_matching(bed.g, bed.part, seedm);
    REQUIRE(validate_connected_factor(bed.g, d, good));

    ConnectedCliqueFactor wrong_comp = good;
    wrong_comp.component_id = 1 - wrong_comp.component_id;
    CHECK(!validate_connected_factor(bed.g, d, wrong_comp));

    ConnectedCliqueFactor dup = good;
    dup.cliques.push_back(dup.cliques.front());
    CHECK(!validate_connected_factor(bed.g, d, dup));

    ConnectedCliqueFactor short_clique = good;
    short_clique.cliques[0].pop_back();
    CHECK(!validate_connected_factor(bed.g, d, short_clique));

    ConnectedCliqueFactor not_clique = good;
    not_clique.cliques[0].back() = bed.layout.cliques[1].first();  // X_2 vertex
    CHECK(!validate_connected_factor(bed.g, d, not_clique));

    ConnectedCliqueFactor empty;
    CHECK(validate_connected_factor(bed.g, d, empty));
    empty.component_id = 0;
    CHECK(!validate_connected_factor(bed.g, d, empty));
}
