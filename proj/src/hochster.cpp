#include "bei/hochster.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bei {

namespace {

std::vector<std::uint32_t> subsets_of_size(int nv, int j) {
    std::vector<std::uint32_t> out;
    if (j < 0 || j > nv) return out;
    if (j == 0) {
        out.push_back(0);
        return out;
    }
    std::uint32_t s = (1u << j) - 1;
    std::uint32_t limit = 1u << nv;
    while (s < limit) {
        out.push_back(s);
        // Gosper's hack
        std::uint32_t c = s & (~s + 1);
        std::uint32_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if (c == 0) break;
    }
    return out;
}

// a cone vertex (one in no nonface within W) makes Delta_W acyclic
bool is_cone_subset(const NonfaceComplex& c, std::uint32_t w) {
    std::uint32_t rest = w;
    while (rest) {
        std::uint32_t v = rest & (~rest + 1);
        rest ^= v;
        bool inSome = false;
        for (auto nf : c.nonfaces)
            if ((nf & v) && (nf & w) == nf) {
                inSome = true;
                break;
            }
        if (!inSome) return true;
    }
    return false;
}

template <class F>
void accumulate_full(const F& k, const NonfaceComplex& c, std::uint32_t w,
                     BettiTable& t) {
    int j = __builtin_popcount(w);
    if (j == 0) return;
    if (is_cone_subset(c, w)) return;
    auto h = homology_ranks(k, c, w);
    for (int d = -1; d < static_cast<int>(h.size()) - 1; ++d) {
        long long v = h[d + 1];
        if (!v) continue;
        int i = j - d - 1;
        if (i >= 1) t.add(i, j, v);
    }
}

struct Plan {
    // per subset-size j, the homology dimensions d needed and the cells
    // they feed
    std::vector<std::pair<int, int>> cells;  // (i, j)
};

template <class F>
void accumulate_cells(const F& k, const NonfaceComplex& c, std::uint32_t w,
                      const std::vector<int>& dims, int j, BettiTable& t) {
    if (is_cone_subset(c, w)) return;
    for (int d : dims) {
        long long v = homology_rank_dim(k, c, w, d);
        if (v) t.add(j - d - 1, j, v);
    }
}

BettiTable run_full(const MonomialIdeal& I, const HochsterOptions& opts, bool parallel) {
    if (!I.squarefree) throw Error("hochster_betti: ideal is not squarefree");
    if (I.nvars > kHochsterFullCap)
        throw Error("hochster_betti: full-table mode capped at " +
                    std::to_string(kHochsterFullCap) + " variables (got " +
                    std::to_string(I.nvars) + "); use the cell filter");
    NonfaceComplex c = stanley_reisner_nonfaces(I);
    BettiTable t;
    t.ringVars = I.nvars;
    t.subject = "inJ";
    t.add(0, 0, 1);
    std::uint32_t total = 1u << I.nvars;
    if (opts.fieldChar == 0) {
        QQ k;
        for (std::uint32_t w = 1; w < total; ++w) accumulate_full(k, c, w, t);
        return t;
    }
    GFp k(opts.fieldChar);
    if (!parallel) {
        for (std::uint32_t w = 1; w < total; ++w) accumulate_full(k, c, w, t);
        return t;
    }
#ifdef _OPENMP
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
    BettiTable merged;
#pragma omp parallel
    {
        BettiTable local;
#pragma omp for schedule(dynamic, 64)
        for (long long w = 1; w < static_cast<long long>(total); ++w)
            accumulate_full(k, c, static_cast<std::uint32_t>(w), local);
#pragma omp critical
        merged.merge(local);
    }
    t.merge(merged);
#else
    for (std::uint32_t w = 1; w < total; ++w) accumulate_full(k, c, w, t);
#endif
    return t;
}

BettiTable run_cells(const MonomialIdeal& I, const std::vector<std::pair<int, int>>& cells,
                     const HochsterOptions& opts, bool parallel) {
    if (!I.squarefree) throw Error("hochster_betti: ideal is not squarefree");
    if (I.nvars > kHochsterCornerCap)
        throw Error("hochster_betti: capped at " + std::to_string(kHochsterCornerCap) +
                    " variables (got " + std::to_string(I.nvars) + ")");
    NonfaceComplex c = stanley_reisner_nonfaces(I);
    BettiTable t;
    t.ringVars = I.nvars;
    t.subject = "inJ";
    t.complete = false;
    t.note = "cell-filtered Hochster table";
    // group by subset size
    std::map<int, std::vector<int>> dimsBySize;
    for (auto [i, j] : cells) {
        if (i == 0 && j == 0) {
            t.add(0, 0, 1);
            continue;
        }
        if (j < i || j > I.nvars || i < 1) continue;
        dimsBySize[j].push_back(j - i - 1);
    }
    for (auto& [j, dims] : dimsBySize) {
        std::sort(dims.begin(), dims.end());
        dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
        auto subs = subsets_of_size(I.nvars, j);
        if (opts.fieldChar == 0) {
            QQ k;
            for (auto w : subs) accumulate_cells(k, c, w, dims, j, t);
            continue;
        }
        GFp k(opts.fieldChar);
        if (!parallel) {
            for (auto w : subs) accumulate_cells(k, c, w, dims, j, t);
            continue;
        }
#ifdef _OPENMP
        if (opts.threads > 0) omp_set_num_threads(opts.threads);
        BettiTable merged;
#pragma omp parallel
        {
            BettiTable local;
#pragma omp for schedule(dynamic, 32)
            for (long long s = 0; s < static_cast<long long>(subs.size()); ++s)
                accumulate_cells(k, c, subs[s], dims, j, local);
#pragma omp critical
            merged.merge(local);
        }
        t.merge(merged);
#else
        for (auto w : subs) accumulate_cells(k, c, w, dims, j, t);
#endif
    }
    return t;
}

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& I, const HochsterOptions& opts) {
    return run_full(I, opts, opts.parallel);
}
BettiTable hochster_betti_serial(const MonomialIdeal& I, const HochsterOptions& opts) {
    return run_full(I, opts, false);
}
BettiTable hochster_betti_cells(const MonomialIdeal& I,
                                const std::vector<std::pair<int, int>>& cells,
                                const HochsterOptions& opts) {
    return run_cells(I, cells, opts, opts.parallel);
}
BettiTable hochster_betti_cells_serial(const MonomialIdeal& I,
                                       const std::vector<std::pair<int, int>>& cells,
                                       const HochsterOptions& opts) {
    return run_cells(I, cells, opts, false);
}

CornerCheck hochster_corner(const MonomialIdeal& I, int p, int r,
                            const HochsterOptions& opts) {
    std::vector<std::pair<int, int>> cells = {
        {p, p + r}, {p + 1, p + 1 + r}, {p, p + r + 1}, {p + 1, p + r + 2}};
    BettiTable t = hochster_betti_cells(I, cells, opts);
    CornerCheck out;
    out.value = t.get(p, p + r);
    out.neighborsVanish = t.get(p + 1, p + 1 + r) == 0 && t.get(p, p + r + 1) == 0 &&
                          t.get(p + 1, p + r + 2) == 0;
    return out;
}

}  // namespace bei
