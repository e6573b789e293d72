#pragma once

#include <vector>

#include "bei/graph.hpp"
#include "bei/poly.hpp"

namespace bei {

/// Squarefree-aware monomial ideal given by its minimal generators.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> gens;  // pairwise non-dividing, lex-sorted
    bool squarefree = false;

    bool contains_monomial(const Monomial& m) const {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    }
};

/// One binomial x_i y_j - x_j y_i per edge {i,j}, i < j; the leading
/// term is x_i y_j under the fixed lex order.
template <class F>
std::vector<Poly<F>> binomial_edge_generators(const F& k, const RingConfig& ring,
                                              const Graph& g);

/// Remainder of the division of f by basis; no term of the result is
/// divisible by a basis leading term.
template <class F>
Poly<F> normal_form(const F& k, const Poly<F>& f, const std::vector<Poly<F>>& basis);

/// Reduced Groebner basis for the ring's lex order: monic, tails
/// reduced, sorted by leading monomial (descending). Deterministic.
template <class F>
std::vector<Poly<F>> buchberger(const F& k, std::vector<Poly<F>> gens);

template <class F>
MonomialIdeal initial_ideal(const std::vector<Poly<F>>& reducedGB, int nvars);

/// Convenience: reduced GB of J_G over GF(fieldChar) (or QQ when 0),
/// wrapped so callers do not pick the field type; binomial edge ideal
/// bases are characteristic independent so the GFp basis is reported
/// for either characteristic.
struct GrobnerResult {
    RingConfig ring;
    std::vector<Poly<GFp>> gb;
    MonomialIdeal inJ;
};
GrobnerResult groebner_of_graph(const Graph& g, long long fieldChar = kDefaultChar);

// --- explicit instantiations provided in grobner.cpp ---
extern template std::vector<Poly<GFp>> binomial_edge_generators<GFp>(
    const GFp&, const RingConfig&, const Graph&);
extern template std::vector<Poly<QQ>> binomial_edge_generators<QQ>(
    const QQ&, const RingConfig&, const Graph&);
extern template Poly<GFp> normal_form<GFp>(const GFp&, const Poly<GFp>&,
                                           const std::vector<Poly<GFp>>&);
extern template Poly<QQ> normal_form<QQ>(const QQ&, const Poly<QQ>&,
                                         const std::vector<Poly<QQ>>&);
extern template std::vector<Poly<GFp>> buchberger<GFp>(const GFp&,
                                                       std::vector<Poly<GFp>>);
extern template std::vector<Poly<QQ>> buchberger<QQ>(const QQ&, std::vector<Poly<QQ>>);
extern template MonomialIdeal initial_ideal<GFp>(const std::vector<Poly<GFp>>&, int);
extern template MonomialIdeal initial_ideal<QQ>(const std::vector<Poly<QQ>>&, int);

}  // namespace bei
