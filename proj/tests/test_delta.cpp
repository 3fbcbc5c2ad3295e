#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace hyperline;

TEST_CASE("exact constant of unit cycles is n/4") {
    for (int n = 3; n <= 7; ++n) {
        auto r = delta_exact_uniform(oracle::cycle_graph(n));
        CHECK(r.value == Rational(n, 4));
        CHECK(r.mode == DeltaMode::exact_uniform);
        CHECK(r.witness.is_cycle);
    }
}

TEST_CASE("trees are 0-hyperbolic") {
    CHECK(delta_exact_uniform(oracle::path_graph(5)).value == Rational(0));
    CHECK(delta_exact_uniform(oracle::star_graph(4)).value == Rational(0));
    FamilySpec spec;
    spec.kind = FamilyKind::random_tree;
    spec.n = 8;
    spec.seed = 5;
    CHECK(delta_exact_uniform(generate(spec)).value == Rational(0));
}

TEST_CASE("the complete graph on four vertices has constant 1") {
    auto r = delta_exact_uniform(oracle::complete_graph(4));
    CHECK(r.value == Rational(1));
    CHECK(delta_sampling_oracle(oracle::complete_graph(4), Rational(1, 8)) == Rational(1));
}

TEST_CASE("exact mode refuses non-uniform lengths") {
    CHECK_THROWS_AS(delta_exact_uniform(oracle::triangle_graph(1, 2, 3)), NonUniformLengths);
}

TEST_CASE("the witness triangle reproduces the constant") {
    auto r = delta_exact_uniform(oracle::cycle_graph(5));
    auto again = triangle_thinness(oracle::cycle_graph(5), r.witness);
    CHECK(again.value == r.value);
}

TEST_CASE("lower-bound mode matches the cycle length law on non-uniform cycles") {
    // A cycle of total length 6 has constant 6/4 regardless of how the
    // length distributes over edges.
    auto r = delta_lower_bound(oracle::triangle_graph(1, 2, 3));
    CHECK(r.value == Rational(3, 2));
    CHECK(r.mode == DeltaMode::lower_bound);
}

TEST_CASE("lower-bound mode equals exact mode on uniform input") {
    MetricGraph g = oracle::cycle_graph(5);
    CHECK(delta_lower_bound(g).value == delta_exact_uniform(g).value);
}

TEST_CASE("refining the extra net never decreases the lower bound") {
    MetricGraph g = oracle::triangle_graph(Rational(1), Rational(3, 2), Rational(2));
    Rational coarse = delta_lower_bound(g, Rational(1, 2)).value;
    Rational fine = delta_lower_bound(g, Rational(1, 4)).value;
    CHECK(coarse <= fine);
    CHECK(delta_lower_bound(g).value <= coarse);
}

TEST_CASE("sampling oracle reproduces cycle constants on grids") {
    CHECK(delta_sampling_oracle(oracle::cycle_graph(4), Rational(1, 4)) == Rational(1));
    CHECK(delta_sampling_oracle(oracle::path_graph(4), Rational(1, 2)) == Rational(0));
    CHECK(delta_sampling_oracle(oracle::cycle_graph(6), Rational(1, 2)) == Rational(3, 2));
}

TEST_CASE("the oracle budget guard fires before enumerating") {
    DeltaOptions opt;
    opt.triple_budget = 10;
    CHECK_THROWS_AS(delta_sampling_oracle(oracle::cycle_graph(6), Rational(1, 4), opt),
                    OracleBudgetExceeded);
}

TEST_CASE("the geodesic cap propagates out of the engine") {
    DeltaOptions opt;
    opt.geodesic_cap = 1;
    CHECK_THROWS_AS(delta_exact_uniform(oracle::cycle_graph(4), opt), CapExceeded);
}

TEST_CASE("restricting to cycle triangles does not change the constant") {
    for (const MetricGraph& g : {oracle::cycle_graph(5), oracle::complete_graph(4)}) {
        DeltaOptions filter;
        filter.cycle_filter = true;
        CHECK(delta_exact_uniform(g, filter).value == delta_exact_uniform(g).value);
    }
}

TEST_CASE("no triangle exceeds the exact constant") {
    MetricGraph g = oracle::complete_graph(4);
    Rational dg = delta_exact_uniform(g).value;
    std::mt19937_64 rng(7);
    auto pts = pmv_points(g);
    for (int trial = 0; trial < 30; ++trial) {
        GraphPoint x = pts[rng() % pts.size()], y = pts[rng() % pts.size()],
                   z = pts[rng() % pts.size()];
        auto gxy = enumerate_geodesics(g, x, y);
        auto gyz = enumerate_geodesics(g, y, z);
        auto gzx = enumerate_geodesics(g, z, x);
        auto t = make_triangle(g, x, y, z, gxy[rng() % gxy.size()], gyz[rng() % gyz.size()],
                               gzx[rng() % gzx.size()]);
        CHECK(triangle_thinness(g, t).value <= dg);
    }
}

TEST_CASE("upper bound report lists the applicable bounds") {
    auto bounds = upper_bound_report(oracle::cycle_graph(4));
    REQUIRE(bounds.size() == 2);
    CHECK(bounds[0].first == "diameter/2");
    CHECK(bounds[0].second == Rational(1));
    CHECK(bounds[1].first == "km/4");
    CHECK(bounds[1].second == Rational(1));

    auto tree_bounds = upper_bound_report(oracle::star_graph(3));
    REQUIRE(tree_bounds.size() == 3);
    CHECK(tree_bounds[2].first == "tree");
    CHECK(tree_bounds[2].second == Rational(0));

    auto c5 = upper_bound_report(oracle::cycle_graph(5));
    CHECK(c5[1].second == Rational(5, 4));
    CHECK(c5[1].second == delta_exact_uniform(oracle::cycle_graph(5)).value);
}

TEST_CASE("the constant never exceeds half the diameter") {
    for (const MetricGraph& g :
         {oracle::cycle_graph(6), oracle::complete_graph(4), oracle::star_graph(3)}) {
        CHECK(delta_exact_uniform(g).value <= diameter(g) / Rational(2));
    }
}

TEST_CASE("broken quadrilateral paths stay near the opposite geodesic") {
    MetricGraph g = oracle::cycle_graph(6);
    Rational dg = delta_exact_uniform(g).value;
    GraphPoint x = GraphPoint::at_vertex(0), y = GraphPoint::at_vertex(3);
    SECTION("zero legs reduce to geodesic against geodesic") {
        CHECK(quadrilateral_gamma_check(g, x, y, x, y, dg) <= Rational(0));
    }
    SECTION("unit legs") {
        GraphPoint u = GraphPoint::at_vertex(1), v = GraphPoint::at_vertex(4);
        CHECK(quadrilateral_gamma_check(g, x, y, u, v, dg) <= Rational(0));
    }
    SECTION("trees with zero constant") {
        MetricGraph star = oracle::star_graph(4);
        // Legs [xu] and [vy] both run from a leaf to the hub, within l_max.
        CHECK(quadrilateral_gamma_check(star, GraphPoint::at_vertex(1), GraphPoint::at_vertex(2),
                                        GraphPoint::at_vertex(0), GraphPoint::at_vertex(0),
                                        Rational(0)) <= Rational(0));
    }
    SECTION("legs longer than the longest edge violate the hypothesis") {
        GraphPoint far = GraphPoint::at_vertex(2);
        CHECK_THROWS_AS(quadrilateral_gamma_check(g, x, y, far, y, dg), HypothesisViolated);
    }
}

TEST_CASE("random quadrilaterals are two-delta thin at grid resolution") {
    MetricGraph g = oracle::cycle_graph(5);
    Rational dg = delta_exact_uniform(g).value;
    std::mt19937_64 rng(99);
    auto pts = pmv_points(g);
    for (int trial = 0; trial < 10; ++trial) {
        GraphPoint a = pts[rng() % pts.size()], b = pts[rng() % pts.size()],
                   c = pts[rng() % pts.size()], d = pts[rng() % pts.size()];
        // Sides [ab], [bc], [cd], [da]; every grid point of one side must be
        // within 2*delta of the union of the other three.
        Geodesic sides[4] = {enumerate_geodesics(g, a, b).front(),
                             enumerate_geodesics(g, b, c).front(),
                             enumerate_geodesics(g, c, d).front(),
                             enumerate_geodesics(g, d, a).front()};
        for (int i = 0; i < 4; ++i)
            for (const auto& p : oracle::sample_geodesic(g, sides[i], Rational(1, 4))) {
                std::optional<Rational> dist;
                for (int j = 0; j < 4; ++j) {
                    if (j == i) continue;
                    Rational cand = oracle::point_to_geodesic(g, p, sides[j]);
                    if (!dist || cand < *dist) dist = cand;
                }
                CHECK(*dist <= Rational(2) * dg);
            }
    }
}

TEST_CASE("star line graphs are cliques whose constant saturates at k") {
    // Frozen from the exact engine and the 1/8 sampling oracle, which
    // agree: delta(K_3) = 3/4, delta(K_4) = delta(K_5) = 1.
    std::vector<Rational> expected{Rational(3, 4), Rational(1), Rational(1)};
    for (int m = 3; m <= 5; ++m) {
        auto corr = build_line_graph(oracle::star_graph(m));
        CHECK(corr.line.vertex_count() == m);
        CHECK(delta_exact_uniform(corr.line).value == expected[m - 3]);
    }
    CHECK(delta_exact_uniform(oracle::complete_graph(5)).value == Rational(1));
}

TEST_CASE("trees with arbitrary edge lengths still give zero") {
    MetricGraph g = MetricGraph::build(
        {"a", "b", "c", "d", "e"},
        {{"a", "b", Rational(1, 3)}, {"b", "c", Rational(7, 2)}, {"b", "d", Rational(2)},
         {"d", "e", Rational(5)}});
    CHECK(delta_lower_bound(g, Rational(1, 2)).value == Rational(0));
}

TEST_CASE("classic unit graphs match their dual-route constants") {
    // Each value below was computed independently by the exact engine and
    // the sampling oracle before being frozen here.
    FamilySpec k23;
    k23.kind = FamilyKind::complete_bipartite;
    k23.a = 2;
    k23.b = 3;
    CHECK(delta_exact_uniform(generate(k23)).value == Rational(1));

    FamilySpec k33 = k23;
    k33.a = 3;
    MetricGraph g33 = generate(k33);
    CHECK(delta_exact_uniform(g33).value == Rational(1));
    CHECK(delta_sampling_oracle(g33, Rational(1, 4)) == Rational(1));
    CHECK(delta_exact_uniform(build_line_graph(g33).line).value == Rational(3, 2));

    // Petersen graph: outer pentagon, inner pentagram, spokes.
    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<MetricGraph::WeightedEdgeSpec> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(labels[i], labels[(i + 1) % 5], Rational(1));
        edges.emplace_back(labels[5 + i], labels[5 + (i + 2) % 5], Rational(1));
        edges.emplace_back(labels[i], labels[5 + i], Rational(1));
    }
    MetricGraph petersen = MetricGraph::build(labels, edges);
    CHECK(delta_exact_uniform(petersen).value == Rational(3, 2));
    CHECK(delta_sampling_oracle(petersen, Rational(1, 2)) == Rational(3, 2));
}

TEST_CASE("witness ties break to the lexicographically smallest corner triple") {
    MetricGraph g = oracle::cycle_graph(4);
    auto r = delta_exact_uniform(g);
    REQUIRE(r.value == Rational(1));
    // Corners sort vertices first; the earliest triple attaining the
    // constant is the antipodal bigon (v0, v0, v2).
    CHECK(r.witness.corners[0] == GraphPoint::at_vertex(0));
    CHECK(r.witness.corners[1] == GraphPoint::at_vertex(0));
    CHECK(r.witness.corners[2] == GraphPoint::at_vertex(2));
    // Identical runs give identical witnesses.
    auto again = delta_exact_uniform(g);
    CHECK(again.witness_point == r.witness_point);
    CHECK(again.witness_side == r.witness_side);
    for (int i = 0; i < 3; ++i) CHECK(again.witness.corners[i] == r.witness.corners[i]);
}

TEST_CASE("a one-vertex graph has constant zero") {
    MetricGraph g = MetricGraph::build({"only"}, {});
    CHECK(delta_exact_uniform(g).value == Rational(0));
    CHECK(diameter(g) == Rational(0));
    CHECK(pmv_points(g).size() == 1);
    auto bounds = upper_bound_report(g);
    CHECK(bounds.front().second == Rational(0));
}
