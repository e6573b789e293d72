#include "bei/koszul.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "bei/hochster.hpp"
#include "bei/simplicial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bei {

namespace {

using MDeg = std::vector<int>;  // length n, deg x_i = deg y_i = e_i

MDeg mdeg_of_monomial(const RingConfig& ring, const Monomial& m) {
    MDeg a(ring.n, 0);
    for (int c = 0; c < ring.n; ++c) a[c] = m.e[c] + m.e[ring.n + c];
    return a;
}

MDeg mdeg_of_mask(const RingConfig& ring, std::uint32_t t) {
    MDeg a(ring.n, 0);
    for (int c = 0; c < ring.n; ++c)
        a[c] = ((t >> c) & 1) + ((t >> (ring.n + c)) & 1);
    return a;
}

/// standard monomials x^alpha y^(a-alpha), lex-sorted descending
std::vector<Monomial> std_monomials(const RingConfig& ring,
                                    const std::vector<Monomial>& leads, const MDeg& a) {
    std::vector<Monomial> out;
    Monomial cur(ring.vars());
    std::function<void(int)> rec = [&](int c) {
        if (c == ring.n) {
            bool standard = true;
            for (const auto& l : leads)
                if (l.divides(cur)) {
                    standard = false;
                    break;
                }
            if (standard) out.push_back(cur);
            return;
        }
        for (int ax = a[c]; ax >= 0; --ax) {
            cur.e[c] = static_cast<std::uint8_t>(ax);
            cur.e[ring.n + c] = static_cast<std::uint8_t>(a[c] - ax);
            rec(c + 1);
        }
        cur.e[c] = cur.e[ring.n + c] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return y.lex_less(x); });
    return out;
}

/// all Koszul subsets T with componentwise mdeg(T) <= a, bucketed by |T|
std::vector<std::vector<std::uint32_t>> koszul_subsets(const RingConfig& ring,
                                                       const MDeg& a) {
    std::vector<std::vector<std::uint32_t>> bySize(ring.vars() + 1);
    std::function<void(int, std::uint32_t, int)> rec = [&](int c, std::uint32_t t,
                                                           int size) {
        if (c == ring.n) {
            bySize[size].push_back(t);
            return;
        }
        rec(c + 1, t, size);
        if (a[c] >= 1) {
            rec(c + 1, t | (1u << c), size + 1);
            rec(c + 1, t | (1u << (ring.n + c)), size + 1);
            if (a[c] >= 2) rec(c + 1, t | (1u << c) | (1u << (ring.n + c)), size + 2);
        }
    };
    rec(0, 0, 0);
    return bySize;
}

struct MDegHash {
    std::size_t operator()(const MDeg& a) const {
        std::size_t h = 1469598103934665603ULL;
        for (int v : a) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
        return h;
    }
};

struct BlockContext {
    const RingConfig& ring;
    const std::vector<Poly<GFp>>& gb;
    const std::vector<Monomial>& leads;
    const GFp& k;
};

/// Betti numbers beta_{i, |a|} contributed by one multidegree: the
/// Koszul strand in multidegree a is a finite chain of small matrices.
void block_betti(const BlockContext& ctx, const MDeg& a, int iMax, BettiTable& t) {
    int j = 0;
    for (int v : a) j += v;
    auto subsets = koszul_subsets(ctx.ring, a);
    std::unordered_map<MDeg, std::vector<Monomial>, MDegHash> stdCache;
    auto stdOf = [&](const MDeg& d) -> const std::vector<Monomial>& {
        auto it = stdCache.find(d);
        if (it != stdCache.end()) return it->second;
        return stdCache.emplace(d, std_monomials(ctx.ring, ctx.leads, d)).first->second;
    };
    std::unordered_map<Monomial, Poly<GFp>, MonomialHash> nfCache;
    auto nfOf = [&](const Monomial& m) -> const Poly<GFp>& {
        auto it = nfCache.find(m);
        if (it != nfCache.end()) return it->second;
        Poly<GFp> f;
        f.terms = {{m, ctx.k.one()}};
        return nfCache.emplace(m, normal_form(ctx.k, f, ctx.gb)).first->second;
    };

    int localMax = std::min<int>(iMax, static_cast<int>(subsets.size()) - 1);
    using Key = std::pair<std::uint32_t, std::vector<std::uint8_t>>;
    auto monoKey = [](std::uint32_t tmask, const Monomial& m) {
        return Key{tmask, m.e};
    };
    std::vector<std::vector<std::pair<std::uint32_t, const Monomial*>>> basis(localMax + 2);
    for (int i = 0; i <= localMax + 1 && i < static_cast<int>(subsets.size()); ++i) {
        for (auto tm : subsets[i]) {
            MDeg rem(a);
            MDeg td = mdeg_of_mask(ctx.ring, tm);
            bool ok = true;
            for (int c = 0; c < ctx.ring.n; ++c) {
                rem[c] -= td[c];
                if (rem[c] < 0) ok = false;
            }
            if (!ok) continue;
            const auto& mons = stdOf(rem);
            for (const auto& m : mons) basis[i].push_back({tm, &m});
        }
    }
    std::vector<std::map<Key, int>> index(localMax + 2);
    for (int i = 0; i <= localMax + 1; ++i)
        for (std::size_t c = 0; c < basis[i].size(); ++c)
            index[i][monoKey(basis[i][c].first, *basis[i][c].second)] =
                static_cast<int>(c);

    std::vector<long long> rank(localMax + 3, 0);
    for (int i = 1; i <= localMax + 1; ++i) {
        if (basis[i].empty() || basis[i - 1].empty()) {
            rank[i] = 0;
            continue;
        }
        std::vector<std::vector<GFp::Elem>> mat(
            basis[i - 1].size(), std::vector<GFp::Elem>(basis[i].size(), 0));
        for (std::size_t c = 0; c < basis[i].size(); ++c) {
            std::uint32_t tmask = basis[i][c].first;
            const Monomial& m = *basis[i][c].second;
            int sign = 1;
            std::uint32_t rest = tmask;
            while (rest) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                Monomial prod = m;
                prod.e[v] += 1;
                const Poly<GFp>& nf = nfOf(prod);
                std::uint32_t tsub = tmask & ~(1u << v);
                for (const auto& term : nf.terms) {
                    auto it = index[i - 1].find(monoKey(tsub, term.m));
                    if (it == index[i - 1].end())
                        throw Error("koszul_betti: basis index miss (internal)");
                    auto& cell = mat[it->second][c];
                    cell = sign > 0 ? ctx.k.add(cell, term.c) : ctx.k.sub(cell, term.c);
                }
                sign = -sign;
            }
        }
        rank[i] = dense_rank(ctx.k, mat);
    }
    for (int i = 0; i <= localMax; ++i) {
        long long beta = static_cast<long long>(basis[i].size()) - rank[i] - rank[i + 1];
        if (beta) t.add(i, j, beta);
    }
}

std::vector<MDeg> multidegrees_up_to(int n, int jMax) {
    std::vector<MDeg> out;
    MDeg cur(n, 0);
    std::function<void(int, int)> rec = [&](int c, int left) {
        if (c == n - 1) {
            for (int v = 0; v <= left; ++v) {
                cur[c] = v;
                out.push_back(cur);
            }
            cur[c] = 0;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[c] = v;
            rec(c + 1, left - v);
        }
        cur[c] = 0;
    };
    if (n == 0) return out;
    rec(0, jMax);
    return out;
}

BettiTable run(const GrobnerResult& gr, const KoszulOptions& opts, bool parallel) {
    const RingConfig& ring = gr.ring;
    if (ring.vars() > kKoszulCap)
        throw Error("koszul_betti: capped at " + std::to_string(kKoszulCap) +
                    " ring variables (got " + std::to_string(ring.vars()) + ")");
    int jMax = opts.jMax, iMax = opts.iMax;
    if (jMax < 0 || iMax < 0) {
        if (ring.vars() > kHochsterFullCap)
            throw Error(
                "koszul_betti: supply jMax/iMax explicitly above " +
                std::to_string(kHochsterFullCap) + " variables");
        HochsterOptions ho;
        ho.fieldChar = opts.fieldChar == 0 ? kDefaultChar : opts.fieldChar;
        ho.parallel = parallel;
        auto inv = invariants_from_table(hochster_betti(gr.inJ, ho));
        // upper-semicontinuity: reg and projdim of S/J are bounded by
        // those of S/in(J)
        if (jMax < 0) jMax = inv.projdim + inv.reg;
        if (iMax < 0) iMax = inv.projdim;
    }
    if (opts.fieldChar == 0)
        throw Error("koszul_betti: characteristic 0 not supported here; "
                    "run two large primes instead");
    GFp k(opts.fieldChar);
    std::vector<Monomial> leads;
    for (const auto& g : gr.gb) leads.push_back(g.lm());
    BlockContext ctx{ring, gr.gb, leads, k};

    auto mdegs = multidegrees_up_to(ring.n, jMax);
    BettiTable t;
    t.ringVars = ring.vars();
    t.subject = "J";
    if (!parallel) {
        for (const auto& a : mdegs) block_betti(ctx, a, iMax, t);
    } else {
#ifdef _OPENMP
        if (opts.threads > 0) omp_set_num_threads(opts.threads);
        BettiTable merged;
#pragma omp parallel
        {
            BettiTable local;
#pragma omp for schedule(dynamic, 8)
            for (long long s = 0; s < static_cast<long long>(mdegs.size()); ++s)
                block_betti(ctx, mdegs[s], iMax, local);
#pragma omp critical
            merged.merge(local);
        }
        t.merge(merged);
#else
        for (const auto& a : mdegs) block_betti(ctx, a, iMax, t);
#endif
    }
    // certify truncation: the top strand must be empty at iMax unless
    // iMax was forced by the caller
    t.note = "jMax=" + std::to_string(jMax) + " iMax=" + std::to_string(iMax);
    return t;
}

}  // namespace

BettiTable koszul_betti(const GrobnerResult& gr, const KoszulOptions& opts) {
    return run(gr, opts, opts.parallel);
}
BettiTable koszul_betti_serial(const GrobnerResult& gr, const KoszulOptions& opts) {
    return run(gr, opts, false);
}

long long hilbert_function_value(const MonomialIdeal& inJ, int d) {
    if (d < 0) return 0;
    // count monomials of degree d avoiding all generators
    long long count = 0;
    Monomial cur(inJ.nvars);
    std::function<void(int, int)> rec = [&](int v, int left) {
        // prune: already divisible by a generator supported on chosen vars
        for (const auto& g : inJ.gens) {
            bool div = true;
            for (int c = 0; c < inJ.nvars; ++c)
                if (g.e[c] > (c < v ? cur.e[c] : 0)) {
                    div = false;
                    break;
                }
            if (div) return;
        }
        if (v == inJ.nvars - 1) {
            cur.e[v] = static_cast<std::uint8_t>(left);
            bool standard = true;
            for (const auto& g : inJ.gens)
                if (g.divides(cur)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
            cur.e[v] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur.e[v] = static_cast<std::uint8_t>(e);
            rec(v + 1, left - e);
        }
        cur.e[v] = 0;
    };
    if (inJ.nvars == 0) return d == 0 ? 1 : 0;
    rec(0, d);
    return count;
}

}  // namespace bei
