#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hyperline;

TEST_CASE("graph JSON parses rational and integer length strings") {
    std::string text = R"({
      "vertices": ["a", "b", "c"],
      "edges": [
        {"u": "a", "v": "b", "len": "3/2"},
        {"u": "b", "v": "c", "len": "2"}
      ]
    })";
    MetricGraph g = parse_graph_json(text);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge(0).length == Rational(3, 2));
    CHECK(g.edge(1).length == Rational(2));
}

TEST_CASE("graph JSON round-trips through serialization") {
    MetricGraph g = oracle::triangle_graph(Rational(1), Rational(3, 2), Rational(2));
    std::string dumped = graph_to_json(g).dump();
    MetricGraph back = parse_graph_json(dumped);
    REQUIRE(back.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(back.edge(e).length == g.edge(e).length);
        CHECK(back.vertex_label(back.edge(e).u) == g.vertex_label(g.edge(e).u));
    }
    CHECK(graph_to_json(back).dump() == dumped);
}

TEST_CASE("graph JSON names malformed entries") {
    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": []})"), ParseError);
    CHECK_THROWS_WITH(parse_graph_json(R"({
        "vertices": ["a", "b"],
        "edges": [{"u": "a", "v": "b", "len": "1"}, {"u": "a", "v": "b"}]
    })"), Catch::Matchers::ContainsSubstring("entry 1"));
    CHECK_THROWS_WITH(parse_graph_json(R"({
        "vertices": ["a", "b"],
        "edges": [{"u": "a", "v": "b", "len": "x"}]
    })"), Catch::Matchers::ContainsSubstring("entry 0"));
    CHECK_THROWS_AS(parse_graph_json(R"({
        "vertices": ["a", "b"],
        "edges": [{"u": "a", "v": "a", "len": "1"}]
    })"), LoopEdge);
}

TEST_CASE("text format parses edges line by line") {
    MetricGraph g = parse_graph_text("a b 1\nb c 3/2\n\n# comment\nc a 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(1).length == Rational(3, 2));
}

TEST_CASE("text format errors carry line numbers") {
    CHECK_THROWS_WITH(parse_graph_text("a b 1\nb b 1\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph_text("a b 1\nb a 2\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph_text("a b 1\nb c nonsense\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph_text("a b 1 extra\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_graph_text("a b 0\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
}

TEST_CASE("delta results serialize rationals as strings") {
    MetricGraph g = oracle::cycle_graph(5);
    auto result = delta_exact_uniform(g);
    auto j = delta_result_to_json(g, result);
    CHECK(j["value"] == "5/4");
    CHECK(j["mode"] == "exact_uniform");
    CHECK(j["witness"]["corners"].size() == 3);
    CHECK(j["candidates"]["corner_triples"].get<long long>() > 0);
    // Byte-identical dumps for identical inputs.
    CHECK(j.dump(2) == delta_result_to_json(g, delta_exact_uniform(g)).dump(2));
}

TEST_CASE("inequality reports serialize slacks") {
    auto rep = verify_line_graph_inequalities(oracle::cycle_graph(4));
    auto j = inequality_report_to_json(rep);
    CHECK(j["delta_G"] == "1");
    CHECK(j["delta_L"] == "1");
    CHECK(j["all_hold"] == true);
    bool found = false;
    for (const auto& e : j["inequalities"])
        if (e["name"] == "lower") {
            CHECK(e["slack"] == "0");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("correspondence tables map line vertices to base edges") {
    auto corr = build_line_graph(oracle::star_graph(3));
    auto j = correspondence_to_json(corr);
    CHECK(j["graph"]["vertices"].size() == 3);
    CHECK(j["correspondence"]["vertices"].size() == 3);
    CHECK(j["correspondence"]["edges"].size() == 3);
    for (const auto& e : j["correspondence"]["edges"]) CHECK(e["shared"] == "v0");
}

TEST_CASE("isolated declared vertices make the graph disconnected") {
    CHECK_THROWS_AS(parse_graph_json(R"({
        "vertices": ["a", "b", "c"],
        "edges": [{"u": "a", "v": "b", "len": "1"}]
    })"), Disconnected);
}
