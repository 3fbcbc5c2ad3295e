#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hyperline;

TEST_CASE("trees have exactly one geodesic per pair") {
    MetricGraph star = oracle::star_graph(3);
    auto pts = grid_points(star, Rational(1, 2));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            auto geos = enumerate_geodesics(star, pts[i], pts[j]);
            REQUIRE(geos.size() == 1);
            oracle::check_geodesic(star, geos.front());
        }
}

TEST_CASE("antipodal vertices of the 4-cycle have two geodesics") {
    MetricGraph g = oracle::cycle_graph(4);
    auto geos = enumerate_geodesics(g, GraphPoint::at_vertex(0), GraphPoint::at_vertex(2));
    REQUIRE(geos.size() == 2);
    for (const auto& geo : geos) {
        CHECK(geo.total_length == Rational(2));
        oracle::check_geodesic(g, geo);
    }
}

TEST_CASE("opposite edge midpoints of the 4-cycle have two geodesics") {
    MetricGraph g = oracle::cycle_graph(4);
    GraphPoint m0 = GraphPoint::on_edge(g, 0, Rational(1, 2));
    GraphPoint m2 = GraphPoint::on_edge(g, 2, Rational(1, 2));
    auto geos = enumerate_geodesics(g, m0, m2);
    REQUIRE(geos.size() == 2);
    for (const auto& geo : geos) {
        CHECK(geo.total_length == Rational(2));
        oracle::check_geodesic(g, geo);
    }
    CHECK(oracle::subdivision_geodesic_count(g, m0, m2, Rational(1, 4)) == 2);
}

TEST_CASE("geodesic counts agree with the subdivision oracle") {
    for (const MetricGraph& g : {oracle::cycle_graph(5), oracle::complete_graph(4),
                                 oracle::triangle_graph(1, 1, 2)}) {
        auto pts = grid_points(g, Rational(1, 2));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                auto geos = enumerate_geodesics(g, pts[i], pts[j]);
                long long expected =
                    oracle::subdivision_geodesic_count(g, pts[i], pts[j], Rational(1, 4));
                CHECK(static_cast<long long>(geos.size()) == expected);
                for (const auto& geo : geos) oracle::check_geodesic(g, geo);
            }
    }
}

TEST_CASE("identical endpoints produce one degenerate geodesic") {
    MetricGraph g = oracle::cycle_graph(4);
    GraphPoint p = GraphPoint::on_edge(g, 1, Rational(1, 3));
    auto geos = enumerate_geodesics(g, p, p);
    REQUIRE(geos.size() == 1);
    CHECK(geos.front().total_length == Rational(0));
    REQUIRE(geos.front().segments.size() == 1);
    CHECK(geos.front().segments.front().length() == Rational(0));
}

TEST_CASE("an in-edge tie with the outside route yields both geodesics") {
    // Triangle with sides 1, 1 and 4: points on the long edge at offsets
    // 1/2 and 7/2 are 3 apart in-edge, and 1/2 + 2 + 1/2 = 3 around.
    MetricGraph g = oracle::triangle_graph(1, 1, 4);
    GraphPoint p = GraphPoint::on_edge(g, 2, Rational(1, 2));
    GraphPoint q = GraphPoint::on_edge(g, 2, Rational(7, 2));
    REQUIRE(point_distance(g, p, q) == Rational(3));
    auto geos = enumerate_geodesics(g, p, q);
    REQUIRE(geos.size() == 2);
    CHECK(geos[0].segments.size() == 1);  // the in-edge geodesic comes first
    CHECK(geos[1].segments.size() == 4);
    for (const auto& geo : geos) oracle::check_geodesic(g, geo);
}

TEST_CASE("the cap aborts enumeration instead of truncating") {
    MetricGraph g = oracle::cycle_graph(4);
    CHECK_THROWS_AS(enumerate_geodesics(g, GraphPoint::at_vertex(0), GraphPoint::at_vertex(2), 1),
                    CapExceeded);
    CHECK_THROWS_AS(enumerate_geodesics(g, GraphPoint::at_vertex(0), GraphPoint::at_vertex(2), 0),
                    InvalidParameters);
}

TEST_CASE("points along a geodesic can be resampled by arclength") {
    MetricGraph g = oracle::cycle_graph(6);
    auto geos = enumerate_geodesics(g, GraphPoint::at_vertex(0), GraphPoint::at_vertex(2));
    REQUIRE(geos.size() == 1);
    const Geodesic& geo = geos.front();
    CHECK(geo.point_at(g, Rational(0)) == GraphPoint::at_vertex(0));
    CHECK(geo.point_at(g, Rational(2)) == GraphPoint::at_vertex(2));
    CHECK(geo.point_at(g, Rational(1)) == GraphPoint::at_vertex(1));
    GraphPoint half = geo.point_at(g, Rational(1, 2));
    CHECK(point_distance(g, GraphPoint::at_vertex(0), half) == Rational(1, 2));
}
