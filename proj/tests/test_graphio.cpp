#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dioph/graphio.hpp"
#include "dioph/maximal.hpp"

using namespace dioph;

TEST_CASE("parse a small path") {
    const auto g = parse_edge_list("p 3\n1 2\n2 3\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 3));
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("p 2\n1 1\n") == 2);          // loop
    CHECK(line_of("p 3\n1 2\n1 2\n") == 3);     // duplicate
    CHECK(line_of("p 3\n2 1\n1 2\n") == 3);     // duplicate, reversed orientation
    CHECK(line_of("p 3\n1 4\n") == 2);          // endpoint out of range
    CHECK(line_of("p 3\n1 two\n") == 2);        // malformed
    CHECK(line_of("p 3\n1 2 3\n") == 2);        // too many tokens
    CHECK(line_of("q 3\n") == 1);               // bad header
    CHECK(line_of("p 0\n") == 1);               // empty order
    CHECK(line_of("") == 1);                    // missing header
    CHECK(line_of("# only a comment\n") == 2);  // still no header
}

TEST_CASE("parser tolerates comments and stray whitespace") {
    const auto g = parse_edge_list("# a path\n\n  p   4 \n 1\t2\n# middle\n2 3\r\n3 4\n");
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("canonical emission") {
    CHECK(emit_edge_list(parse_edge_list("p 3\n2 3\n1 2\n")) == "p 3\n1 2\n2 3\n");
    CHECK(emit_edge_list(SimpleGraph(1)) == "p 1\n");

    SimpleGraph g(4);
    g.add_edge(3, 1);
    g.add_edge(4, 2);
    g.add_edge(2, 1);
    CHECK(emit_edge_list(g) == "p 4\n1 2\n1 3\n2 4\n");
}

TEST_CASE("parse of emit is the identity on canonical documents") {
    // deterministic pseudo-random graphs
    u64 state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(next() % 11);
        SimpleGraph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (next() % 3 == 0) g.add_edge(u, v);
        const std::string doc = emit_edge_list(g);
        const auto reparsed = parse_edge_list(doc);
        CHECK(reparsed.order() == g.order());
        CHECK(reparsed.edges() == g.edges());
        CHECK(emit_edge_list(reparsed) == doc);
    }
}

TEST_CASE("dot output") {
    const auto k4 = generate("complete", 4);
    const std::string dot = emit_dot(k4);
    CHECK(dot.find("graph {") == 0);
    size_t edges = 0;
    for (size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(edges == 6);

    SUBCASE("vertices are named by their labels when a labelling is supplied") {
        const auto p2 = generate("path", 2);
        Labelling swapped(std::vector<int>{0, 2, 1});
        const std::string named = emit_dot(p2, &swapped);
        CHECK(named.find("2 -- 1;") != std::string::npos);
        Labelling bad(std::vector<int>{0, 2, 2});
        CHECK_THROWS_AS(emit_dot(p2, &bad), std::invalid_argument);
    }
}

TEST_CASE("generators build the standard constructions") {
    CHECK(generate("complete", 5).edge_count() == 10);
    CHECK(generate("path", 1).edge_count() == 0);
    CHECK(generate("cycle", 5).edge_count() == 5);
    CHECK(generate("star", 6).edge_count() == 5);
    CHECK(generate("wheel", 6).edge_count() == 10);

    const auto petersen = generate("petersen");
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    for (int v = 1; v <= 10; ++v) CHECK(petersen.degree(v) == 3);

    CHECK(generate("maximal_diophantine", 8).edge_count() == 27);
    CHECK(generate("maximal_prime", 5).edge_count() == 9);
}

TEST_CASE("generator errors") {
    CHECK_THROWS_AS(generate("moebius", 5), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", 2), std::invalid_argument);
    CHECK_THROWS_AS(generate("wheel", 3), std::invalid_argument);
    CHECK_THROWS_AS(generate("star", 1), std::invalid_argument);
    CHECK_THROWS_AS(generate("path", 0), std::invalid_argument);
    CHECK_THROWS_AS(generate("petersen", 5), std::invalid_argument);
    CHECK_THROWS_AS(generate("maximal_diophantine", 0), std::invalid_argument);
    CHECK_THROWS_AS(generate("maximal_diophantine", 5000), std::invalid_argument);
}

TEST_CASE("materialized maximal graphs match the closed-form edge count") {
    for (int n = 1; n <= 500; ++n) {
        CAPTURE(n);
        REQUIRE(generate("maximal_diophantine", n).edge_count() ==
                edge_count_formula(make_maximal_spec(static_cast<u64>(n))));
    }
    for (int n = 1; n <= 150; ++n) {
        CAPTURE(n);
        REQUIRE(generate("maximal_prime", n).edge_count() ==
                edge_count_formula(make_maximal_spec(static_cast<u64>(n), GraphKind::prime)));
    }
}

TEST_CASE("graph type invariants") {
    CHECK_THROWS_AS(SimpleGraph(0), std::invalid_argument);
    SimpleGraph g(3);
    g.add_edge(1, 2);
    CHECK_THROWS_AS(g.add_edge(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 4), std::invalid_argument);
    CHECK(g.neighbors(1) == std::vector<int>{2});
}
