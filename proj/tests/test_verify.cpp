#include <doctest.h>

#include "bei/koszul.hpp"
#include "bei/verify.hpp"

using namespace bei;

TEST_CASE("closed forms match the oracle on full-table cases") {
    for (const char* text : {"Fm(3)", "fan(3;1,1)", "fan(4;2)", "cone(du(K(2),K(2)))",
                             "du(K(2),K(3))", "K(5)"}) {
        CAPTURE(text);
        auto rep = verify_expr(*parse_expr(text));
        CHECK(!rep.anyMismatch);
        CHECK(rep.regVerdict == Verdict::Match);
        CHECK(rep.projdimVerdict == Verdict::Match);
        CHECK(rep.extremalVerdict == Verdict::Match);
        CHECK(rep.oracle.method == "koszul");
        CHECK(rep.oracle.haveTable);
    }
}

TEST_CASE("corner mode certifies larger graphs") {
    OracleOptions opts;
    opts.method = "auto";
    auto e = parse_expr("Fm(4)");  // 16 ring vars exceeds the Koszul cap? no: 2n = 16
    auto rep = verify_expr(*e, opts);
    CHECK(rep.extremalVerdict == Verdict::Match);

    auto big = parse_expr("du(Fm(3),K(4))");  // 2n = 20: Hochster corner mode
    auto bigRep = verify_expr(*big, opts);
    CHECK(bigRep.oracle.method == "hochster-corner");
    CHECK(bigRep.oracle.cornerCertified);
    CHECK(bigRep.extremalVerdict == Verdict::Match);
}

TEST_CASE("whisker cone: the oracle arbitrates the degenerate case") {
    // cone over K_2 u K_1 is K_3 with a whisker; closed form says
    // vertex count of the complete part
    auto e = parse_expr("cone(du(K(1),K(2)))");
    auto rep = verify_expr(*e);
    REQUIRE(rep.oracle.extremalBetti.has_value());
    CHECK(*rep.oracle.extremalBetti == 2);
    CHECK(rep.extremalVerdict == Verdict::Match);
    CHECK(rep.cmTypeVerdict == Verdict::Match);

    // the generic cone formula n - 2 + b1*b2 = 3 would disagree
    CHECK(*rep.oracle.extremalBetti != 3);
}

TEST_CASE("corner conjecture holds on the proven-CM families") {
    for (const char* text : {"Fm(2)", "Fm(3)", "fan(3;1)", "fan(3;1,1)", "fan(4;2)"}) {
        CAPTURE(text);
        auto res = check_corner_conjecture(*parse_expr(text));
        CHECK(res.tested);
        CHECK(res.holds);
    }
}

TEST_CASE("expressions beyond every cap are reported, not guessed") {
    auto e = parse_expr("du(Fm(4),Fm(4))");  // 32 ring vars
    auto rep = verify_expr(*e);
    CHECK(rep.oracle.method == "none");
    CHECK(rep.anyNotComputable);
    CHECK(rep.extremalVerdict == Verdict::NotComputable);
}
