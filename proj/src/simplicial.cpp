#include "bei/simplicial.hpp"

#include <unordered_map>

namespace bei {

NonfaceComplex stanley_reisner_nonfaces(const MonomialIdeal& I) {
    if (!I.squarefree)
        throw Error("stanley_reisner: ideal is not squarefree");
    NonfaceComplex c;
    c.vertexCount = I.nvars;
    if (I.nvars > 31) throw Error("stanley_reisner: more than 31 vertices unsupported");
    for (const auto& g : I.gens) {
        std::uint32_t m = 0;
        for (int v = 0; v < I.nvars; ++v)
            if (g.e[v]) m |= 1u << v;
        c.nonfaces.push_back(m);
    }
    return c;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& I) {
    NonfaceComplex c = stanley_reisner_nonfaces(I);
    if (c.vertexCount > 20)
        throw Error("stanley_reisner: facet enumeration capped at 20 vertices");
    SimplicialComplex out;
    out.vertexCount = c.vertexCount;
    std::uint32_t full = (c.vertexCount == 0) ? 0 : ((1u << c.vertexCount) - 1);
    auto faces = faces_by_size(c, full, c.vertexCount);
    for (int s = c.vertexCount; s >= 0; --s) {
        for (auto f : faces[s]) {
            bool maximal = true;
            std::uint32_t rest = full & ~f;
            while (rest && maximal) {
                std::uint32_t v = rest & (~rest + 1);
                rest ^= v;
                if (c.is_face(f | v)) maximal = false;
            }
            if (maximal) out.facets.push_back(f);
        }
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> faces_by_size(const NonfaceComplex& c,
                                                      std::uint32_t within,
                                                      int maxSize) {
    std::vector<std::vector<std::uint32_t>> out(maxSize + 1);
    out[0].push_back(0);  // empty face
    std::vector<int> verts;
    for (int v = 0; v < c.vertexCount; ++v)
        if (within >> v & 1) verts.push_back(v);
    // grow faces one vertex at a time; every subset of a face is a face,
    // so only nonfaces containing the new vertex need checking
    for (int s = 1; s <= maxSize; ++s) {
        if (out[s - 1].empty()) break;
        for (auto f : out[s - 1]) {
            int top = f ? 31 - __builtin_clz(f) : -1;
            for (int v : verts) {
                if (v <= top) continue;
                std::uint32_t g = f | (1u << v);
                bool face = true;
                for (auto nf : c.nonfaces)
                    if ((nf >> v & 1) && (g & nf) == nf) {
                        face = false;
                        break;
                    }
                if (face) out[s].push_back(g);
            }
        }
    }
    return out;
}

template <class F>
long long dense_rank(const F& k, std::vector<std::vector<typename F::Elem>>& rows) {
    std::size_t nr = rows.size();
    if (nr == 0) return 0;
    std::size_t nc = rows[0].size();
    long long rank = 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < nc && rr < nr; ++c) {
        std::size_t piv = rr;
        while (piv < nr && k.is_zero(rows[piv][c])) ++piv;
        if (piv == nr) continue;
        std::swap(rows[rr], rows[piv]);
        auto inv = k.inv(rows[rr][c]);
        for (std::size_t c2 = c; c2 < nc; ++c2) rows[rr][c2] = k.mul(rows[rr][c2], inv);
        for (std::size_t r2 = 0; r2 < nr; ++r2) {
            if (r2 == rr || k.is_zero(rows[r2][c])) continue;
            auto factor = rows[r2][c];
            for (std::size_t c2 = c; c2 < nc; ++c2)
                rows[r2][c2] = k.sub(rows[r2][c2], k.mul(factor, rows[rr][c2]));
        }
        ++rr;
        ++rank;
    }
    return rank;
}
template long long dense_rank<GFp>(const GFp&, std::vector<std::vector<GFp::Elem>>&);
template long long dense_rank<QQ>(const QQ&, std::vector<std::vector<QQ::Elem>>&);

template <class F>
long long boundary_rank(const F& k, const std::vector<std::uint32_t>& facesS,
                        const std::vector<std::uint32_t>& facesSm1) {
    if (facesS.empty() || facesSm1.empty()) {
        // boundary from 1-element faces hits the empty face
        // (augmentation); handled by the caller via rank conventions
        return 0;
    }
    std::unordered_map<std::uint32_t, std::size_t> rowIdx;
    for (std::size_t r = 0; r < facesSm1.size(); ++r) rowIdx[facesSm1[r]] = r;
    // columns are faces of size s; build as row-major matrix
    std::vector<std::vector<typename F::Elem>> m(
        facesSm1.size(), std::vector<typename F::Elem>(facesS.size(), k.zero()));
    for (std::size_t c = 0; c < facesS.size(); ++c) {
        std::uint32_t f = facesS[c];
        int sign = 1;
        std::uint32_t rest = f;
        while (rest) {
            std::uint32_t v = rest & (~rest + 1);
            rest ^= v;
            auto it = rowIdx.find(f ^ v);
            if (it != rowIdx.end())
                m[it->second][c] =
                    k.add(m[it->second][c], sign > 0 ? k.one() : k.neg(k.one()));
            sign = -sign;
        }
    }
    return dense_rank(k, m);
}

template <class F>
std::vector<long long> homology_ranks(const F& k, const NonfaceComplex& c,
                                      std::uint32_t within) {
    int nv = __builtin_popcount(within & ((c.vertexCount < 32)
                                              ? ((1u << c.vertexCount) - 1)
                                              : ~0u));
    if (nv == 0) return {1};  // the complex {emptyset}: only H~_{-1}
    auto faces = faces_by_size(c, within, nv);
    int top = nv;
    while (top > 0 && faces[top].empty()) --top;
    // H~_d for d = -1 .. top-1, reported with H~_{-1} first
    std::vector<long long> ranks(top + 2, 0);  // ranks[s] = rank of d: C_{s-1} -> C_{s-2}
    // augmentation C_0 -> K
    ranks[1] = faces[1].empty() ? 0 : 1;
    for (int s = 2; s <= top; ++s)
        ranks[s] = boundary_rank(k, faces[s], faces[s - 1]);
    std::vector<long long> h(top + 1, 0);  // h[d+1] = dim H~_d
    // d = -1: C_{-1} = K (empty face), image of augmentation
    h[0] = faces[1].empty() ? 1 : 0;
    for (int d = 0; d < top; ++d) {
        long long dimC = static_cast<long long>(faces[d + 1].size());
        long long rOut = ranks[d + 1];
        long long rIn = (d + 2 <= top) ? ranks[d + 2] : 0;
        h[d + 1] = dimC - rOut - rIn;
    }
    return h;
}

template <class F>
long long homology_rank_dim(const F& k, const NonfaceComplex& c, std::uint32_t within,
                            int d) {
    if (d < -1) return 0;
    if (d == -1) {
        auto faces = faces_by_size(c, within, 1);
        return faces[1].empty() ? 1 : 0;
    }
    auto faces = faces_by_size(c, within, d + 2);
    long long dimC = static_cast<long long>(faces[d + 1].size());
    if (dimC == 0) return 0;
    long long rOut = (d == 0) ? (faces[1].empty() ? 0 : 1)
                              : boundary_rank(k, faces[d + 1], faces[d]);
    long long rIn = boundary_rank(k, faces[d + 2], faces[d + 1]);
    return dimC - rOut - rIn;
}

template long long boundary_rank<GFp>(const GFp&, const std::vector<std::uint32_t>&,
                                      const std::vector<std::uint32_t>&);
template long long boundary_rank<QQ>(const QQ&, const std::vector<std::uint32_t>&,
                                     const std::vector<std::uint32_t>&);
template std::vector<long long> homology_ranks<GFp>(const GFp&, const NonfaceComplex&,
                                                    std::uint32_t);
template std::vector<long long> homology_ranks<QQ>(const QQ&, const NonfaceComplex&,
                                                   std::uint32_t);
template long long homology_rank_dim<GFp>(const GFp&, const NonfaceComplex&,
                                          std::uint32_t, int);
template long long homology_rank_dim<QQ>(const QQ&, const NonfaceComplex&,
                                         std::uint32_t, int);

}  // namespace bei
