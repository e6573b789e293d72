#include "bei/grobner.hpp"

#include <list>
#include <sstream>

namespace bei {

std::string monomial_to_string(const RingConfig& ring, const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < ring.vars(); ++v)
        if (m.e[v]) {
            if (!first) os << "*";
            os << ring.var_name(v);
            if (m.e[v] > 1) os << "^" << static_cast<int>(m.e[v]);
            first = false;
        }
    return os.str();
}

template <class F>
std::string poly_to_string(const RingConfig& ring, const Poly<F>& f) {
    if (f.zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) os << " + ";
        os << f.terms[i].c << "*" << monomial_to_string(ring, f.terms[i].m);
    }
    return os.str();
}
template std::string poly_to_string<GFp>(const RingConfig&, const Poly<GFp>&);

template <class F>
std::vector<Poly<F>> binomial_edge_generators(const F& k, const RingConfig& ring,
                                              const Graph& g) {
    if (g.n != ring.n) throw Error("binomial_edge_generators: ring/graph mismatch");
    std::vector<Poly<F>> out;
    for (const auto& [i, j] : g.edges) {
        Monomial lead(ring.vars()), trail(ring.vars());
        lead.e[ring.xvar(i)] = 1;
        lead.e[ring.yvar(j)] = 1;
        trail.e[ring.xvar(j)] = 1;
        trail.e[ring.yvar(i)] = 1;
        Poly<F> f;
        f.terms = {{lead, k.one()}, {trail, k.neg(k.one())}};
        out.push_back(std::move(f));
    }
    return out;
}

template <class F>
Poly<F> normal_form(const F& k, const Poly<F>& f, const std::vector<Poly<F>>& basis) {
    Poly<F> rem;  // accumulated irreducible terms
    Poly<F> work = f;
    while (!work.zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.zero()) continue;
            if (g.lm().divides(work.lm())) {
                Monomial q = work.lm().div(g.lm());
                auto scale = k.mul(work.lc(), k.inv(g.lc()));
                work = poly_sub(k, work, g.times_monomial(q).scaled(k, scale));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(work.terms.front());
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;
}

namespace {

template <class F>
Poly<F> s_poly(const F& k, const Poly<F>& f, const Poly<F>& g) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    auto a = f.times_monomial(l.div(f.lm())).scaled(k, k.inv(f.lc()));
    auto b = g.times_monomial(l.div(g.lm())).scaled(k, k.inv(g.lc()));
    return poly_sub(k, a, b);
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int deg;
};

}  // namespace

template <class F>
std::vector<Poly<F>> buchberger(const F& k, std::vector<Poly<F>> gens) {
    std::vector<Poly<F>> basis;
    for (auto& g : gens)
        if (!g.zero()) basis.push_back(g.monic(k));
    std::vector<Pair> pairs;
    auto addPairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
            pairs.push_back({i, j, l, l.deg()});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) addPairs(j);

    while (!pairs.empty()) {
        // normal strategy: minimal lcm degree, then lex-smallest lcm
        std::size_t best = 0;
        for (std::size_t t = 1; t < pairs.size(); ++t) {
            if (pairs[t].deg < pairs[best].deg ||
                (pairs[t].deg == pairs[best].deg &&
                 pairs[t].lcm.lex_less(pairs[best].lcm)))
                best = t;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        // Buchberger's first criterion: coprime leading terms
        if (basis[pr.i].lm().coprime(basis[pr.j].lm())) continue;
        // chain criterion: some other basis element divides the lcm and
        // both companion pairs are gone already
        bool skip = false;
        for (std::size_t t = 0; t < basis.size() && !skip; ++t) {
            if (t == pr.i || t == pr.j) continue;
            if (!basis[t].lm().divides(pr.lcm)) continue;
            bool pendingI = false, pendingJ = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(pr.i, t) && q.j == std::max(pr.i, t))) pendingI = true;
                if ((q.i == std::min(pr.j, t) && q.j == std::max(pr.j, t))) pendingJ = true;
            }
            if (!pendingI && !pendingJ) skip = true;
        }
        if (skip) continue;

        Poly<F> r = normal_form(k, s_poly(k, basis[pr.i], basis[pr.j]), basis);
        if (!r.zero()) {
            basis.push_back(r.monic(k));
            addPairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Poly<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                !(basis[i].lm() == basis[j].lm() && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // reduce tails
    std::vector<Poly<F>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normal_form(k, minimal[i], others).monic(k));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Poly<F>& a, const Poly<F>& b) {
        return Monomial::cmp_lex(a.lm(), b.lm()) > 0;
    });
    return reduced;
}

template <class F>
MonomialIdeal initial_ideal(const std::vector<Poly<F>>& reducedGB, int nvars) {
    MonomialIdeal out;
    out.nvars = nvars;
    for (const auto& g : reducedGB)
        if (!g.zero()) out.gens.push_back(g.lm());
    // minimal generators (reduced GB leads already are, but be safe)
    std::vector<Monomial> mins;
    for (std::size_t i = 0; i < out.gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < out.gens.size(); ++j)
            if (i != j && out.gens[j].divides(out.gens[i]) &&
                !(out.gens[i] == out.gens[j] && j > i)) {
                redundant = true;
                break;
            }
        if (!redundant) mins.push_back(out.gens[i]);
    }
    out.gens = std::move(mins);
    std::sort(out.gens.begin(), out.gens.end(),
              [](const Monomial& a, const Monomial& b) { return b.lex_less(a); });
    out.squarefree = std::all_of(out.gens.begin(), out.gens.end(),
                                 [](const Monomial& m) { return m.squarefree(); });
    return out;
}

GrobnerResult groebner_of_graph(const Graph& g, long long fieldChar) {
    GrobnerResult out;
    out.ring.n = g.n;
    out.ring.fieldChar = fieldChar;
    GFp k(fieldChar == 0 ? kDefaultChar : fieldChar);
    out.gb = buchberger(k, binomial_edge_generators(k, out.ring, g));
    out.inJ = initial_ideal(out.gb, out.ring.vars());
    return out;
}

template std::vector<Poly<GFp>> binomial_edge_generators<GFp>(const GFp&,
                                                              const RingConfig&,
                                                              const Graph&);
template std::vector<Poly<QQ>> binomial_edge_generators<QQ>(const QQ&, const RingConfig&,
                                                            const Graph&);
template Poly<GFp> normal_form<GFp>(const GFp&, const Poly<GFp>&,
                                    const std::vector<Poly<GFp>>&);
template Poly<QQ> normal_form<QQ>(const QQ&, const Poly<QQ>&,
                                  const std::vector<Poly<QQ>>&);
template std::vector<Poly<GFp>> buchberger<GFp>(const GFp&, std::vector<Poly<GFp>>);
template std::vector<Poly<QQ>> buchberger<QQ>(const QQ&, std::vector<Poly<QQ>>);
template MonomialIdeal initial_ideal<GFp>(const std::vector<Poly<GFp>>&, int);
template MonomialIdeal initial_ideal<QQ>(const std::vector<Poly<QQ>>&, int);

}  // namespace bei
