#include <doctest.h>

#include "bei/family.hpp"

using namespace bei;

TEST_CASE("parse and print round-trip") {
    for (const char* text :
         {"K(3)", "Fm(2)", "fan(5; 2,1)", "cone(du(K(2), K(2)))",
          "du(K(2), K(3))", "star(Fm(2), K(3))", "circ(Fm(4), Fm(3))",
          "circ(Fm(3), Fm(4), Fm(3))", "circ(Fm(3), fan(4; 2,1))"}) {
        auto e = parse_expr(text);
        auto again = parse_expr(print_expr(*e));
        CHECK(print_expr(*again) == print_expr(*e));
    }
}

TEST_CASE("parse errors carry positions and rules") {
    CHECK_THROWS_AS(parse_expr("K("), Error);
    CHECK_THROWS_AS(parse_expr("nope(3)"), Error);
    CHECK_THROWS_AS(parse_expr("K(3) K(4)"), Error);
    // circ grammar: non-final entries must be Fm with m >= 3
    CHECK_THROWS_AS(parse_expr("circ(Fm(2), Fm(3))"), Error);
    CHECK_THROWS_AS(parse_expr("circ(K(3), Fm(3))"), Error);
    CHECK_THROWS_AS(parse_expr("circ(Fm(3), Fm(2))"), Error);
}

TEST_CASE("build matches vertex counts") {
    for (const char* text :
         {"K(4)", "Fm(3)", "fan(5; 2,1)", "cone(du(K(2), K(2)))",
          "du(Fm(2), K(3))", "star(Fm(2), Fm(2))", "circ(Fm(4), Fm(3))",
          "circ(Fm(3), Fm(4), Fm(3))"}) {
        auto e = parse_expr(text);
        Graph g = build_graph(*e);
        CHECK(g.n == vertex_count(*e));
        CHECK(g.provenance == print_expr(*e));
    }
    // the circ of F4 and F3 identifies two leaf/neighbor pairs: 8+6-3
    CHECK(build_graph(*parse_expr("circ(Fm(4), Fm(3))")).n == 11);
}

TEST_CASE("star identifies leaves") {
    auto e = parse_expr("star(Fm(2), Fm(2))");
    Graph g = build_graph(*e);
    CHECK(g.n == 7);
    CHECK(g.edges.size() == 6);
}

TEST_CASE("fan expression blocks") {
    auto e = parse_expr("fan(5; 2,1)");
    CHECK(e->m == 5);
    REQUIRE(e->blocks.size() == 2);
    CHECK(e->blocks[0].h.size() == 2);
    CHECK(e->pure_fan());
    // blocks occupying more than m vertices are rejected at build time
    CHECK_THROWS_AS(build_graph(*parse_expr("fan(2; 2,1)")), Error);
}
