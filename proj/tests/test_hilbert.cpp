#include <doctest.h>

#include "bei/hilbert.hpp"
#include "bei/hochster.hpp"
#include "bei/koszul.hpp"

using namespace bei;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

TEST_CASE("K-polynomial numerators") {
    auto num2 = numerator_from_betti(koszul_betti(groebner_of_graph(complete_graph(2))));
    CHECK(num2 == std::vector<long long>({1, 0, -1}));

    auto nump = numerator_from_betti(koszul_betti(groebner_of_graph(path_graph(3))));
    CHECK(nump == std::vector<long long>({1, 0, -2, 0, 1}));

    auto num3 = numerator_from_betti(koszul_betti(groebner_of_graph(complete_graph(3))));
    CHECK(num3 == std::vector<long long>({1, 0, -3, 2}));
}

TEST_CASE("reduced h-vectors and dimensions") {
    auto s2 = hilbert_series_from_betti(koszul_betti(groebner_of_graph(complete_graph(2))));
    CHECK(s2.h == std::vector<long long>({1, 1}));
    CHECK(s2.d == 3);
    CHECK(s2.aInvariant == -2);

    auto s3 = hilbert_series_from_betti(koszul_betti(groebner_of_graph(complete_graph(3))));
    CHECK(s3.h == std::vector<long long>({1, 2}));
    CHECK(s3.d == 4);
    CHECK(s3.aInvariant == -3);

    auto sf = hilbert_series_from_betti(koszul_betti(groebner_of_graph(bipartite_fm(2))));
    CHECK(sf.h == std::vector<long long>({1, 3, 3, 1}));
    CHECK(sf.d == 5);
    CHECK(sf.aInvariant == -2);
}

TEST_CASE("closed-form h-vectors of the bipartite family") {
    CHECK(hvector_fm(2) == std::vector<long long>({1, 3, 3, 1}));
    CHECK(hvector_fm(3) == std::vector<long long>({1, 5, 9, 5}));
    CHECK(hvector_fm(4) == std::vector<long long>({1, 7, 18, 14}));

    auto sf = hilbert_series_from_betti(koszul_betti(groebner_of_graph(bipartite_fm(3))));
    CHECK(sf.h == hvector_fm(3));
    CHECK(sf.d == 7);  // 2m+1
}

TEST_CASE("h-vector from the Stanley-Reisner f-vector") {
    auto gr = groebner_of_graph(bipartite_fm(2));
    auto nf = stanley_reisner_nonfaces(gr.inJ);
    auto bySize = faces_by_size(nf, (1u << nf.vertexCount) - 1, nf.vertexCount);
    FVector f;
    for (const auto& level : bySize) {
        if (level.empty()) break;
        f.push_back(static_cast<long long>(level.size()));
    }
    CHECK(f[1] == 8);
    CHECK(f[2] == 25);
    CHECK(h_from_f(f) == hvector_fm(2));
}

TEST_CASE("series values match standard-monomial counts") {
    for (int m : {2, 3}) {
        auto gr = groebner_of_graph(bipartite_fm(m));
        auto s = hilbert_series_from_betti(koszul_betti(gr));
        auto predicted = hilbert_function_from_series(s, 8);
        for (int e = 0; e <= 8; ++e) CHECK(predicted[e] == hilbert_function(gr.inJ, e));
    }
    // spot values for F_2
    auto gr = groebner_of_graph(bipartite_fm(2));
    CHECK(hilbert_function(gr.inJ, 0) == 1);
    CHECK(hilbert_function(gr.inJ, 1) == 8);
    CHECK(hilbert_function(gr.inJ, 2) == 33);
}

TEST_CASE("leading h-coefficient equals the extremal Betti number") {
    std::vector<Graph> gs = {complete_graph(3), complete_graph(4), bipartite_fm(2),
                             bipartite_fm(3), fan_graph(3, {FanBlock::pure_of_size(1)})};
    for (const auto& g : gs) {
        auto t = koszul_betti(groebner_of_graph(g));
        auto inv = invariants_from_table(t);
        REQUIRE(inv.uniqueCorner);
        auto s = hilbert_series_from_betti(t);
        long long lc = s.h.back();
        CHECK((lc < 0 ? -lc : lc) == t.get(inv.projdim, inv.projdim + inv.reg));
        CHECK(static_cast<int>(s.h.size()) - 1 == inv.reg);
    }
}
