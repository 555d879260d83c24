// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "lichor/clique.hpp"
#include "lichor/errors.hpp"
#include "lichor/generate.hpp"
#include "lichor/structure.hpp"
#include "lichor/transversal.hpp"
#include "lichor/verify.hpp"
#include "support.hpp"

using namespace lichor;
using namespace lichor::test;

namespace {

// K_{1,1,n}: apexes 0 and 1, centers 2..n+1, with per-pair multiplicities.
Multigraph k11n(std::size_t ab, std::vector<std::pair<std::size_t, std::size_t>> mult) {
    std::vector<Endpoints> ends;
    for (std::size_t i = 0; i < ab; ++i) ends.push_back({0, 1});
    VertexId v = 2;
    for (auto [ma, mb] : mult) {
        for (std::size_t i = 0; i < ma; ++i) ends.push_back({0, v});
        for (std::size_t i = 0; i < mb; ++i) ends.push_back({1, v});
        ++v;
    }
    return Multigraph(v, std::move(ends));
}

std::vector<VertexId> centers_of(const Multigraph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 2; v < g.vertex_count(); ++v) out.push_back(v);
    return out;
}

// Lists sized by a demand function, drawn from 1..universe.
ColorLists lists_for(const Multigraph& g, const DemandFunction& demand, std::size_t universe,
                     Rng& rng) {
    std::vector<std::vector<Color>> raw(g.edge_count());
    for (const auto& [e, need] : demand) {
        std::vector<Color> pool;
        for (Color c = 1; c <= universe; ++c) pool.push_back(c);
        for (std::size_t i = 0; i < need; ++i) {
            const auto j = uniform(rng, i, pool.size() - 1);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(need);
        raw[e] = pool;
    }
    return ColorLists(std::move(raw));
}

} // namespace

TEST_CASE("triangle profile") {
    SUBCASE("simple K_{1,1,3}") {
        const auto g = k11n(1, {{1, 1}, {1, 1}, {1, 1}});
        const auto p = triangle_profile(g, g.all_edges(), 0, 1);
        CHECK(p.degree_a == 4);
        CHECK(p.degree_b == 4);
        for (VertexId v : {2, 3, 4}) CHECK(p.t(v) == 3);
        CHECK(p.big.empty());
        CHECK(p.great.empty());
        CHECK(p.centers == std::vector<VertexId>{2, 3, 4});
    }
    SUBCASE("K_{1,1,2} with a doubled apex edge") {
        const auto g = k11n(1, {{2, 1}, {1, 1}});
        const auto p = triangle_profile(g, g.all_edges(), 0, 1);
        CHECK(p.degree_a == 4);
        CHECK(p.degree_b == 3);
        CHECK(p.t(2) == 4);
        CHECK(p.t(3) == 3);
        CHECK(p.big == std::vector<VertexId>{2});
        CHECK(p.great.empty());
        CHECK(p.centers.front() == 2);
    }
    SUBCASE("single triangle") {
        const auto p = triangle_profile(triangle(), triangle().all_edges(), 0, 1);
        CHECK(p.apex_max() == 2);
        CHECK(p.great == std::vector<VertexId>{2});
        CHECK(p.is_big(2));
    }
    SUBCASE("edge missing both apexes") {
        const auto g = graph(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(triangle_profile(g, g.all_edges(), 0, 1), InputError);
    }
    SUBCASE("checks hold on generated blocks") {
        InvariantLog log;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            GenParams gp;
            gp.seed = seed;
            gp.weights = {0, 0, 1};
            gp.max_multiplicity = 3;
            gp.max_centers = 5;
            const auto g = gen_line_perfect(gp);
            const auto cls = classify_block(g, g.all_edges());
            // K_{1,1,2} has four vertices and classifies as such.
            if (!std::holds_alternative<K11nBlock>(cls)) continue;
            const auto& k = std::get<K11nBlock>(cls);
            check_profile(triangle_profile(g, g.all_edges(), k.apex_a, k.apex_b, k.centers), log);
        }
        CHECK(log.total_violations() == 0);
        CHECK(log.evaluated(Check::SortedGreat) > 50);
    }
}

TEST_CASE("demand functions") {
    const auto g = k11n(1, {{2, 1}, {1, 1}});
    // edges: 0=ab, 1,2=a-2, 3=b-2, 4=a-3, 5=b-3
    const auto da = demand_apex(g, g.all_edges(), 0, 1, centers_of(g));
    CHECK(da.at(0) == 4);
    CHECK(da.at(1) == 4);
    CHECK(da.at(3) == 4);
    CHECK(da.at(5) == 4);

    const auto dc = demand_center(g, g.all_edges(), 0, 1, 3, centers_of(g));
    CHECK(dc.at(4) == 2);
    CHECK(dc.at(5) == 2);
    CHECK(dc.at(0) == 4);
    CHECK(dc.at(1) == 4);

    const auto dk = demand_four_vertex(k4(), k4().all_edges(), 0);
    CHECK(dk.at(0) == 3);
    CHECK(dk.at(5) == 3);
    const auto path = graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto dp = demand_four_vertex(path, path.all_edges(), 0);
    CHECK(dp.at(0) == 1);
    CHECK(dp.at(1) == 2);
}

TEST_CASE("four-vertex solver") {
    InvariantLog log;
    SUBCASE("K4 with {1,2,3}") {
        const auto l = uniform_lists(6, {1, 2, 3});
        const auto r = solve_k4(k4(), k4().all_edges(), 0, l, log);
        CHECK(verify_coloring(k4(), k4().all_edges(), l, r.coloring).ok);
        // Opposite edges share a color.
        CHECK(r.coloring[0] == r.coloring[5]);
        CHECK(r.coloring[1] == r.coloring[4]);
        CHECK(r.coloring[2] == r.coloring[3]);
        CHECK(r.depth > 0);
    }
    SUBCASE("single edge") {
        const auto g = graph(4, {{2, 3}});
        const auto r = solve_k4(g, g.all_edges(), 0, lists({{1}}), log);
        CHECK(r.coloring[0] == Color{1});
    }
    SUBCASE("transversal from the start") {
        // Opposite pairs (0,5), (1,4), (2,3) carry disjoint lists.
        const auto l = lists({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {7, 8, 9}, {4, 5, 6}, {1, 2, 3}});
        const auto t = lists({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 12}, {2, 8, 10}, {5, 9, 11}});
        CHECK_FALSE(has_reducing_set(k4(), k4().all_edges(), t));
        const auto r = solve_k4(k4(), k4().all_edges(), 0, t, log);
        CHECK(r.depth == 0);
        CHECK(verify_coloring(k4(), k4().all_edges(), t, r.coloring).ok);
        CHECK(has_reducing_set(k4(), k4().all_edges(), l));
    }
    SUBCASE("random multigraphs on four vertices") {
        Rng rng(12);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t m = 1 + uniform(rng, 0, 8);
            std::vector<Endpoints> ends;
            for (std::size_t i = 0; i < m; ++i) {
                VertexId u = static_cast<VertexId>(uniform(rng, 0, 3));
                VertexId w = static_cast<VertexId>(uniform(rng, 0, 2));
                if (w >= u) ++w;
                ends.push_back({u, w});
            }
            const Multigraph g(4, std::move(ends));
            const VertexId v = static_cast<VertexId>(uniform(rng, 0, 3));
            const auto l = lists_for(g, demand_four_vertex(g, g.all_edges(), v),
                                     2 * chromatic_index(g), rng);
            const auto r = solve_k4(g, g.all_edges(), v, l, log);
            CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
        }
        CHECK(log.violated(Check::ChiDrop) == 0);
        CHECK(log.evaluated(Check::ChiDrop) > 0);
    }
    SUBCASE("short lists violate the demand") {
        InvariantLog strict;
        CHECK_THROWS_AS(solve_k4(k4(), k4().all_edges(), 0, uniform_lists(6, {1, 2}), strict),
                        InvariantError);
    }
}

TEST_CASE("apex solver") {
    InvariantLog log;
    Rng rng(3);
    SUBCASE("simple K_{1,1,2}") {
        const auto g = k11n(1, {{1, 1}, {1, 1}});
        for (int trial = 0; trial < 30; ++trial) {
            const auto l = lists_for(g, demand_apex(g, g.all_edges(), 0, 1, centers_of(g)), 6, rng);
            const auto r = solve_k11n_apex(g, g.all_edges(), 0, 1, centers_of(g), l, log);
            CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
        }
    }
    SUBCASE("single triangle") {
        const auto l = lists({{1, 2}, {1, 2, 3}, {1, 2, 4}});
        const auto r = solve_k11n_apex(triangle(), triangle().all_edges(), 0, 1, {2}, l, log);
        CHECK(verify_coloring(triangle(), triangle().all_edges(), l, r.coloring).ok);
    }
    SUBCASE("transversal lists") {
        const auto g = k11n(1, {{1, 1}, {1, 1}});
        // Non-adjacent pairs: (a-2, b-3) and (b-2, a-3).
        const auto l = lists({{1, 2, 3}, {1, 4, 5}, {6, 7, 8}, {1, 9, 10}, {2, 3, 11}});
        CHECK_FALSE(has_reducing_set(g, g.all_edges(), l));
        const auto r = solve_k11n_apex(g, g.all_edges(), 0, 1, centers_of(g), l, log);
        CHECK(r.depth == 0);
        CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
    }
    CHECK(log.total_violations() == 0);
}

TEST_CASE("splitting classes") {
    // a=0, b=1, v1=2, v2=3, v3=4; edges per pair: 0=ab, then (a,v),(b,v) for each center.
    const auto g = k11n(1, {{1, 1}, {1, 1}, {1, 1}});
    const CenterFrame fr{0, 1, 2, 3, {4}};
    // edge ids: 1=(a,2) 2=(b,2) 3=(a,3) 4=(b,3) 5=(a,4) 6=(b,4)
    SUBCASE("a-splitting") {
        const auto l = lists({{9}, {5}, {9}, {5}, {9}, {9}, {5}});
        CHECK(classify_splitting(g, g.all_edges(), l, fr, 5) == SplittingClass::ASplitting);
    }
    SUBCASE("b-splitting") {
        const auto l = lists({{9}, {9}, {5}, {9}, {5}, {5}, {9}});
        CHECK(classify_splitting(g, g.all_edges(), l, fr, 5) == SplittingClass::BSplitting);
    }
    SUBCASE("neither") {
        const auto l = lists({{9}, {5}, {9}, {9}, {5}, {9}, {9}});
        CHECK(classify_splitting(g, g.all_edges(), l, fr, 5) == SplittingClass::None);
        CHECK(std::string(splitting_name(SplittingClass::None)) == "none");
    }
    SUBCASE("color missing at a center") {
        const auto l = lists({{9}, {5}, {9}, {9}, {9}, {9}, {9}});
        CHECK_THROWS_AS(classify_splitting(g, g.all_edges(), l, fr, 5), InputError);
    }
}

TEST_CASE("center solver") {
    InvariantLog log;
    Rng rng(21);
    SUBCASE("simple K_{1,1,3}") {
        const auto g = k11n(1, {{1, 1}, {1, 1}, {1, 1}});
        for (int trial = 0; trial < 40; ++trial) {
            const auto l =
                lists_for(g, demand_center(g, g.all_edges(), 0, 1, 2, centers_of(g)), 8, rng);
            const auto r = solve_k11n_center(g, g.all_edges(), 0, 1, 2, centers_of(g), l, log);
            CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
        }
    }
    SUBCASE("apex edge with a color unseen at v1") {
        const auto g = k11n(1, {{1, 1}});
        // Demands: E(v1) 2, E(a,b) 3. Color 9 only on the ab edge.
        const auto l = lists({{1, 2, 9}, {1, 2}, {1, 2}});
        const auto r = solve_k11n_center(g, g.all_edges(), 0, 1, 2, centers_of(g), l, log);
        CHECK(r.coloring[0] == Color{9});
        CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
    }
    SUBCASE("transversal lists") {
        const auto g = k11n(1, {{1, 1}, {1, 1}});
        const auto l = lists({{1, 4, 6}, {1, 4}, {6, 7}, {1, 9, 10}, {2, 3, 11}});
        CHECK_FALSE(has_reducing_set(g, g.all_edges(), l));
        const auto r = solve_k11n_center(g, g.all_edges(), 0, 1, 2, centers_of(g), l, log);
        CHECK(r.depth == 0);
        CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
    }
    SUBCASE("random K_{1,1,n} multigraphs") {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            GenParams gp;
            gp.seed = seed;
            gp.weights = {0, 0, 1};
            gp.max_multiplicity = 3;
            gp.max_centers = 4;
            const auto g = gen_line_perfect(gp);
            const auto cls = classify_block(g, g.all_edges());
            if (!std::holds_alternative<K11nBlock>(cls)) continue;
            const auto& k = std::get<K11nBlock>(cls);
            const VertexId v1 = k.centers[uniform(rng, 0, k.centers.size() - 1)];
            const std::size_t chi = chromatic_index(g);
            const auto l = lists_for(
                g, demand_center(g, g.all_edges(), k.apex_a, k.apex_b, v1, k.centers),
                chi + uniform(rng, 0, chi), rng);
            const auto r =
                solve_k11n_center(g, g.all_edges(), k.apex_a, k.apex_b, v1, k.centers, l, log);
            CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
        }
        CHECK(log.evaluated(Check::WeakBounds) > 0);
    }
    CHECK(log.total_violations() == 0);
}

TEST_CASE("weak phase") {
    // a=0, b=1, v1=2, v2=3; edges 0=ab 1=(a,v1) 2=(b,v1) 3=(a,v2) 4=(b,v2).
    const auto g = k11n(1, {{1, 1}, {1, 1}});
    const CenterFrame fr{0, 1, 2, 3, {}};

    const auto wb = weak_bounds(g, g.all_edges(), fr);
    CHECK(wb.per_edge.at(1) == 2);
    CHECK(wb.per_edge.at(0) == 3);
    CHECK(wb.per_edge.at(4) == 3);
    CHECK(wb.pair_bound == 5);
    CHECK(wb.pair_r == EdgeSet{2});
    CHECK(wb.pair_s == EdgeSet{3});

    SUBCASE("transversal instance") {
        const auto l = lists({{1, 3, 6}, {1, 2}, {3, 4}, {5, 6, 7}, {3, 4, 5}});
        CHECK(weak_bounds_violation(wb, l).empty());
        CHECK_FALSE(has_reducing_set(g, g.all_edges(), l));
        InvariantLog log;
        const auto r = weak_phase(g, g.all_edges(), fr, l, log);
        CHECK(verify_coloring(g, g.all_edges(), l, r.coloring).ok);
        CHECK(log.evaluated(Check::WeakBounds) == 1);
    }
    SUBCASE("pair bound failure is reported") {
        const auto l = lists({{1, 3, 6}, {1, 2}, {3, 4}, {3, 4, 7}, {3, 4, 5}});
        CHECK_FALSE(weak_bounds_violation(wb, l).empty());
        InvariantLog log;
        CHECK_THROWS_AS(weak_phase(g, g.all_edges(), fr, l, log), InvariantError);
        CHECK(log.violated(Check::WeakBounds) == 1);
    }
}
