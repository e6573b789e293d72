#include <doctest.h>

#include "bei/grobner.hpp"
#include "bei/simplicial.hpp"

using namespace bei;

namespace {

NonfaceComplex make_complex(int n, std::vector<std::uint32_t> nonfaces) {
    NonfaceComplex c;
    c.vertexCount = n;
    c.nonfaces = std::move(nonfaces);
    return c;
}

std::uint32_t all_of(int n) { return (1u << n) - 1; }

}  // namespace

TEST_CASE("stanley-reisner of a principal squarefree ideal") {
    // (x1 y2) in the 4-variable ring of K2: vertices x1 x2 y1 y2
    auto gr = groebner_of_graph(complete_graph(2));
    auto sr = stanley_reisner(gr.inJ);
    CHECK(sr.vertexCount == 4);
    // facets are the two maximal sets avoiding the nonface {x1, y2}
    REQUIRE(sr.facets.size() == 2);
    for (auto f : sr.facets) CHECK(__builtin_popcount(f) == 3);

    auto nf = stanley_reisner_nonfaces(gr.inJ);
    REQUIRE(nf.nonfaces.size() == 1);
    CHECK(nf.is_face(0b0110));
    CHECK(!nf.is_face(0b1001));  // x1 (bit 0) with y2 (bit 3)
}

TEST_CASE("homology of basic complexes") {
    GFp k(kDefaultChar);
    // hollow triangle: minimal nonface {1,2,3}
    auto hollow = make_complex(3, {0b111});
    auto h = homology_ranks(k, hollow, all_of(3));
    CHECK(h[1] == 0);  // H~_0
    CHECK(h[2] == 1);  // H~_1

    // two isolated vertices: nonface = the edge
    auto pts = make_complex(2, {0b11});
    CHECK(homology_ranks(k, pts, all_of(2))[1] == 1);

    // full simplex on 4 vertices: no nonfaces
    auto simplex = make_complex(4, {});
    for (auto r : homology_ranks(k, simplex, all_of(4))) CHECK(r == 0);

    // restricting the simplex to the empty vertex set leaves {emptyset}
    CHECK(homology_ranks(k, simplex, 0)[0] == 1);
}

TEST_CASE("single homology degree matches the full scan") {
    GFp k(kDefaultChar);
    auto hollow = make_complex(3, {0b111});
    CHECK(homology_rank_dim(k, hollow, all_of(3), 0) == 0);
    CHECK(homology_rank_dim(k, hollow, all_of(3), 1) == 1);
}

TEST_CASE("rational homology agrees on these complexes") {
    QQ q;
    auto hollow = make_complex(3, {0b111});
    CHECK(homology_ranks(q, hollow, all_of(3))[2] == 1);
}

TEST_CASE("faces by size") {
    auto hollow = make_complex(3, {0b111});
    auto faces = faces_by_size(hollow, all_of(3), 3);
    CHECK(faces[0].size() == 1);  // empty face
    CHECK(faces[1].size() == 3);
    CHECK(faces[2].size() == 3);
    CHECK(faces[3].empty());
}
