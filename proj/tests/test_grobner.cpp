#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "bei/grobner.hpp"

using namespace bei;

namespace {

template <class F>
Poly<F> spoly(const F& k, const RingConfig&, const Poly<F>& f, const Poly<F>& g) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    Poly<F> a = f.times_monomial(l.div(f.lm()));
    Poly<F> b = g.times_monomial(l.div(g.lm()));
    return poly_sub(k, a.scaled(k, k.inv(f.lc())), b.scaled(k, k.inv(g.lc())));
}

}  // namespace

TEST_CASE("edge generators") {
    RingConfig ring{2, kDefaultChar};
    GFp k(kDefaultChar);
    auto gens = binomial_edge_generators(k, ring, complete_graph(2));
    REQUIRE(gens.size() == 1);
    REQUIRE(gens[0].terms.size() == 2);
    CHECK(monomial_to_string(ring, gens[0].terms[0].m) == "x1*y2");
    CHECK(monomial_to_string(ring, gens[0].terms[1].m) == "x2*y1");
    CHECK(gens[0].terms[1].c == k.neg(k.one()));

    Graph empty(3);
    RingConfig ring3{3, kDefaultChar};
    CHECK(binomial_edge_generators(k, ring3, empty).empty());

    auto k3 = binomial_edge_generators(k, ring3, complete_graph(3));
    REQUIRE(k3.size() == 3);
    CHECK(monomial_to_string(ring3, k3[0].lm()) == "x1*y2");
    CHECK(monomial_to_string(ring3, k3[1].lm()) == "x1*y3");
    CHECK(monomial_to_string(ring3, k3[2].lm()) == "x2*y3");
}

TEST_CASE("buchberger on closed graphs returns the generators") {
    auto gr = groebner_of_graph(complete_graph(3));
    CHECK(gr.gb.size() == 3);
    CHECK(gr.inJ.squarefree);
    CHECK(gr.inJ.gens.size() == 3);

    // path 1-2-3: the generators are already a Groebner basis
    Graph path(3);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    auto grp = groebner_of_graph(path);
    CHECK(grp.gb.size() == 2);
}

TEST_CASE("normal forms") {
    auto gr = groebner_of_graph(complete_graph(3));
    GFp k(kDefaultChar);
    const RingConfig& ring = gr.ring;

    Poly<GFp> f;
    Monomial m(ring.vars());
    m.e[ring.xvar(3)] = 1;  // x3
    m.e[ring.xvar(1)] += 1;
    m.e[ring.yvar(2)] += 1;  // * x1 y2
    f.terms = {{m, k.one()}};
    auto nf = normal_form(k, f, gr.gb);
    REQUIRE(nf.terms.size() == 1);
    CHECK(monomial_to_string(ring, nf.lm()) == "x2*x3*y1");
    CHECK(nf.lc() == k.one());

    Poly<GFp> one;
    one.terms = {{Monomial(ring.vars()), k.one()}};
    auto nfOne = normal_form(k, one, gr.gb);
    REQUIRE(nfOne.terms.size() == 1);
    CHECK(nfOne.lm().is_one());

    auto gen = binomial_edge_generators(k, ring, complete_graph(3))[0];
    CHECK(normal_form(k, gen, gr.gb).terms.empty());
}

TEST_CASE("S-pair certificates, membership, squarefree, determinism") {
    GFp k(kDefaultChar);
    std::mt19937 rng(12345);
    auto corpus = testing::connected_corpus(5);
    CHECK(corpus.size() == 31);
    for (const auto& g : corpus) {
        auto gr = groebner_of_graph(g);
        const RingConfig& ring = gr.ring;

        // every S-polynomial of the basis reduces to zero
        for (std::size_t i = 0; i < gr.gb.size(); ++i)
            for (std::size_t j = i + 1; j < gr.gb.size(); ++j) {
                auto s = spoly(k, ring, gr.gb[i], gr.gb[j]);
                CHECK(normal_form(k, s, gr.gb).terms.empty());
            }

        // random multiples of generators stay in the ideal
        auto gens = binomial_edge_generators(k, ring, g);
        for (int trial = 0; trial < 20 && !gens.empty(); ++trial) {
            Monomial m(ring.vars());
            for (int c = 0; c < ring.vars(); ++c)
                m.e[c] = static_cast<std::uint8_t>(rng() % 3);
            auto f = gens[rng() % gens.size()].times_monomial(m);
            CHECK(normal_form(k, f, gr.gb).terms.empty());
        }

        CHECK(gr.inJ.squarefree);

        // determinism: re-run, compare printed bases
        auto gr2 = groebner_of_graph(g);
        REQUIRE(gr.gb.size() == gr2.gb.size());
        for (std::size_t i = 0; i < gr.gb.size(); ++i)
            CHECK(poly_to_string(ring, gr.gb[i]) == poly_to_string(ring, gr2.gb[i]));
    }
}

TEST_CASE("characteristic independence of the basis") {
    for (const auto& g : {complete_graph(4), bipartite_fm(2)}) {
        auto a = groebner_of_graph(g, 101);
        auto b = groebner_of_graph(g, 32003);
        auto c = groebner_of_graph(g, 0);  // rationals
        REQUIRE(a.gb.size() == b.gb.size());
        REQUIRE(a.gb.size() == c.gb.size());
        CHECK(a.inJ.gens == b.inJ.gens);
        CHECK(a.inJ.gens == c.inJ.gens);
    }
}
