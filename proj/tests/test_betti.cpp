#include <doctest.h>

#include "bei/hochster.hpp"
#include "bei/koszul.hpp"
#include "corpus.hpp"

using namespace bei;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b) {
    BettiTable out;
    out.ringVars = a.ringVars + b.ringVars;
    for (const auto& [ij1, v1] : a.entries)
        for (const auto& [ij2, v2] : b.entries)
            out.add(ij1.first + ij2.first, ij1.second + ij2.second, v1 * v2);
    return out;
}

}  // namespace

TEST_CASE("hochster on small initial ideals") {
    // K2: in(J) is principal
    auto t2 = hochster_betti(groebner_of_graph(complete_graph(2)).inJ);
    CHECK(t2.get(0, 0) == 1);
    CHECK(t2.get(1, 2) == 1);
    CHECK(t2.entries.size() == 2);

    // K3: three quadrics, pd 2
    auto t3 = hochster_betti(groebner_of_graph(complete_graph(3)).inJ);
    CHECK(t3.get(1, 2) == 3);
    CHECK(t3.get(2, 3) == 2);
    auto inv3 = invariants_from_table(t3);
    CHECK(inv3.reg == 1);
    CHECK(inv3.projdim == 2);
    CHECK(inv3.cmType == 2);
    CHECK(inv3.uniqueCorner);
}

TEST_CASE("koszul exact tables on small graphs") {
    // K2: hypersurface
    auto k2 = koszul_betti(groebner_of_graph(complete_graph(2)));
    CHECK(k2.get(1, 2) == 1);
    CHECK(invariants_from_table(k2).projdim == 1);

    // path on 3: complete intersection of two quadrics
    auto p3 = koszul_betti(groebner_of_graph(path_graph(3)));
    CHECK(p3.get(1, 2) == 2);
    CHECK(p3.get(2, 4) == 1);
    auto invp = invariants_from_table(p3);
    CHECK(invp.reg == 2);
    CHECK(invp.projdim == 2);

    // F_2: pd 3, reg 3, extremal corner (3, 6) = 1
    auto f2 = koszul_betti(groebner_of_graph(bipartite_fm(2)));
    auto invf = invariants_from_table(f2);
    CHECK(invf.reg == 3);
    CHECK(invf.projdim == 3);
    CHECK(f2.get(3, 6) == 1);
    CHECK(invf.uniqueCorner);

    // F_3: extremal corner (5, 8) = 5
    auto f3 = koszul_betti(groebner_of_graph(bipartite_fm(3)));
    auto invg = invariants_from_table(f3);
    CHECK(invg.reg == 3);
    CHECK(invg.projdim == 5);
    CHECK(f3.get(5, 8) == 5);
}

TEST_CASE("serial and parallel kernels agree and threads do not matter") {
    std::vector<Graph> gs = {complete_graph(4), bipartite_fm(2), path_graph(4)};
    for (const auto& g : gs) {
        auto gr = groebner_of_graph(g);

        auto hs = hochster_betti_serial(gr.inJ);
        HochsterOptions h1, h4;
        h1.threads = 1;
        h4.threads = 4;
        CHECK(hochster_betti(gr.inJ, h1).entries == hs.entries);
        CHECK(hochster_betti(gr.inJ, h4).entries == hs.entries);

        auto ks = koszul_betti_serial(gr);
        KoszulOptions k1, k4;
        k1.threads = 1;
        k4.threads = 4;
        CHECK(koszul_betti(gr, k1).entries == ks.entries);
        CHECK(koszul_betti(gr, k4).entries == ks.entries);
    }
}

TEST_CASE("field independence across the small corpus") {
    for (const auto& g : bei::testing::connected_corpus(5)) {
        auto gr = groebner_of_graph(g);
        HochsterOptions a, b, q;
        a.fieldChar = 32003;
        b.fieldChar = 101;
        q.fieldChar = 0;
        auto ta = hochster_betti(gr.inJ, a);
        CHECK(hochster_betti(gr.inJ, b).entries == ta.entries);
        CHECK(hochster_betti(gr.inJ, q).entries == ta.entries);
    }
}

TEST_CASE("J versus in(J): semicontinuity and corner equality") {
    for (const auto& g : bei::testing::connected_corpus(4)) {
        auto gr = groebner_of_graph(g);
        auto tj = koszul_betti(gr);
        auto ti = hochster_betti(gr.inJ);
        for (const auto& [ij, v] : tj.entries) CHECK(v <= ti.get(ij.first, ij.second));
        auto ij = invariants_from_table(tj);
        auto ii = invariants_from_table(ti);
        CHECK(ij.reg == ii.reg);
        CHECK(ij.projdim == ii.projdim);
        REQUIRE(ij.corners.size() == ii.corners.size());
        for (std::size_t c = 0; c < ij.corners.size(); ++c) {
            CHECK(ij.corners[c].i == ii.corners[c].i);
            CHECK(ij.corners[c].ell == ii.corners[c].ell);
            CHECK(ij.corners[c].beta == ii.corners[c].beta);
        }
    }
}

TEST_CASE("disjoint unions multiply resolutions") {
    std::vector<std::pair<Graph, Graph>> cases = {
        {complete_graph(2), complete_graph(2)},
        {complete_graph(2), complete_graph(3)},
        {path_graph(3), complete_graph(2)},
    };
    for (const auto& [a, b] : cases) {
        auto ta = koszul_betti(groebner_of_graph(a));
        auto tb = koszul_betti(groebner_of_graph(b));
        auto tu = koszul_betti(groebner_of_graph(disjoint_union({a, b})));
        CHECK(tu.entries == convolve(ta, tb).entries);
    }
}

TEST_CASE("linear strand counts cliques") {
    for (const auto& g : bei::testing::connected_corpus(4)) {
        auto t = koszul_betti(groebner_of_graph(g));
        auto f = clique_complex(g).f;
        int imax = invariants_from_table(t).projdim;
        for (int i = 1; i <= imax + 1; ++i) {
            long long expect =
                (i + 1 < static_cast<int>(f.size())) ? i * f[i + 1] : 0;
            CHECK(t.get(i, i + 1) == expect);
        }
    }
}

TEST_CASE("regularity one exactly for complete graphs") {
    for (const auto& g : bei::testing::connected_corpus(5)) {
        if (g.n < 2) continue;
        auto inv = invariants_from_table(koszul_betti(groebner_of_graph(g)));
        bool complete = static_cast<int>(g.edges.size()) == g.n * (g.n - 1) / 2;
        CHECK((inv.reg == 1) == complete);
    }
}

TEST_CASE("cell-filtered hochster matches the full table") {
    auto gr = groebner_of_graph(bipartite_fm(2));
    auto full = hochster_betti(gr.inJ);
    std::vector<std::pair<int, int>> cells = {{1, 2}, {3, 6}, {2, 4}};
    auto part = hochster_betti_cells(gr.inJ, cells);
    for (auto [i, j] : cells) CHECK(part.get(i, j) == full.get(i, j));
    CHECK(hochster_betti_cells_serial(gr.inJ, cells).entries == part.entries);

    auto corner = hochster_corner(gr.inJ, 3, 3);
    CHECK(corner.value == full.get(3, 6));
    CHECK(corner.neighborsVanish);
}
