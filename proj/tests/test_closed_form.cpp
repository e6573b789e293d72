#include <doctest.h>

#include "bei/closed_form.hpp"
#include "bei/error.hpp"

using namespace bei;

namespace {

InvariantReport report_of(const std::string& text) {
    return closed_form_report(*parse_expr(text));
}

}  // namespace

TEST_CASE("regularity closed forms") {
    CHECK(reg_closed(*parse_expr("K(4)")) == 1);
    CHECK(reg_closed(*parse_expr("Fm(3)")) == 3);
    CHECK(reg_closed(*parse_expr("fan(5;2,1)")) == 3);  // k = 2 blocks
    CHECK(reg_closed(*parse_expr("cone(du(K(2),K(2)))")) == 2);
    CHECK(reg_closed(*parse_expr("du(Fm(2),K(3))")) == 4);
    CHECK(reg_closed(*parse_expr("star(Fm(2),Fm(2))")) == 6);
    CHECK(reg_closed(*parse_expr("circ(Fm(4),Fm(3))")) == 6);

    // non-pure fan has no closed form
    FanBlock b;
    b.h = {3};
    CHECK_THROWS_AS(reg_closed(*make_fan(3, {b})), Error);
}

TEST_CASE("projective dimension is vertices minus components") {
    CHECK(projdim_closed(*parse_expr("Fm(3)")) == 5);
    CHECK(projdim_closed(*parse_expr("K(4)")) == 3);
    CHECK(projdim_closed(*parse_expr("du(K(2),K(3))")) == 3);
    CHECK(projdim_closed(*parse_expr("cone(du(K(2),K(2)))")) == 4);
}

TEST_CASE("extremal Betti closed forms") {
    CHECK(extremal_betti_closed(*parse_expr("Fm(3)")) == 5);
    CHECK(extremal_betti_closed(*parse_expr("Fm(2)")) == 1);
    CHECK(extremal_betti_closed(*parse_expr("fan(5;2,1)")) == 8);
    CHECK(extremal_betti_closed(*parse_expr("fan(3;1,1)")) == 2);
    CHECK(extremal_betti_closed(*parse_expr("circ(Fm(4),Fm(3))")) == 5);
    CHECK(extremal_betti_closed(*parse_expr("circ(Fm(3),Fm(4),Fm(3))")) == 1);
    CHECK(extremal_betti_closed(*parse_expr("star(Fm(2),Fm(2))")) == 1);
    CHECK(extremal_betti_closed(*parse_expr("du(Fm(3),Fm(3))")) == 25);
    // r = 2 cone
    CHECK(extremal_betti_closed(*parse_expr("cone(du(K(2),K(2)))")) == 4);
    // r > 2 cone: product of component values
    CHECK(extremal_betti_closed(*parse_expr("cone(du(Fm(2),K(2)))")) == 1);
}

TEST_CASE("cone over a complete graph and a point is a whiskered clique") {
    // cone(K_c u K_1) decomposes as K_{c+1} u* K_2, so the corner value
    // is c, not the generic cone product
    CHECK(extremal_betti_closed(*parse_expr("cone(du(K(1),K(2)))")) == 2);
    CHECK(extremal_betti_closed(*parse_expr("cone(du(K(3),K(1)))")) == 3);
    CHECK(cm_type_closed(*parse_expr("cone(du(K(1),K(2)))")) == 2);
}

TEST_CASE("Cohen-Macaulay type closed forms") {
    CHECK(cm_type_closed(*parse_expr("K(4)")) == 3);
    CHECK(cm_type_closed(*parse_expr("fan(3;1)")) == 2);  // k = 1 proven
    CHECK(cm_type_closed(*parse_expr("cone(du(fan(2;1),K(2)))")) == 5);

    // only conjectured equal to the extremal Betti number
    CHECK_THROWS_AS(cm_type_closed(*parse_expr("Fm(3)")), Error);
    CHECK_THROWS_AS(cm_type_closed(*parse_expr("fan(5;2,1)")), Error);

    // circ chains: CM-type and extremal Betti genuinely differ
    try {
        cm_type_closed(*parse_expr("circ(Fm(4),Fm(3))"));
        FAIL("expected a guard");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("29") != std::string::npos);
    }
}

TEST_CASE("second-strand corner entry of a cone") {
    // reg > 2: beta_{p, p+2} = n - 2
    CHECK(beta_p_plus2_cone(*parse_expr("cone(du(fan(2;1),K(2)))")) == 4);
    CHECK(beta_p_plus2_cone(*parse_expr("cone(du(fan(2;1),fan(2;1)))")) == 5);
    // reg = 2 cones are excluded
    CHECK_THROWS_AS(beta_p_plus2_cone(*parse_expr("cone(du(K(2),K(2)))")), Error);
    CHECK_THROWS_AS(beta_p_plus2_cone(*parse_expr("K(4)")), Error);
}

TEST_CASE("linear strand from clique counts") {
    auto k3 = complete_graph(3);
    CHECK(linear_strand(k3, 1) == 3);
    CHECK(linear_strand(k3, 2) == 2);
    CHECK(linear_strand(bipartite_fm(2), 2) == 0);  // triangle-free
    CHECK(linear_strand(bipartite_fm(2), 1) == 3);
}

TEST_CASE("aggregate report") {
    auto r = report_of("Fm(3)");
    CHECK(r.reg == 3);
    CHECK(r.projdim == 5);
    CHECK(r.extremalBetti == 5);
    REQUIRE(r.cmType.has_value());
    CHECK(*r.cmType == 5);
    CHECK(r.cmTypeConjectural);

    auto c = report_of("circ(Fm(4),Fm(3))");
    CHECK(c.extremalBetti == 5);
    CHECK(c.reg == 6);
    CHECK(!c.cmType.has_value());
    bool noted = false;
    for (const auto& n : c.notes) noted = noted || n.find("29") != std::string::npos;
    CHECK(noted);

    auto k = report_of("K(5)");
    CHECK(k.reg == 1);
    CHECK(k.projdim == 4);
    CHECK(k.extremalBetti == 4);
    CHECK(k.cmType == 4);
    CHECK(!k.cmTypeConjectural);
}
