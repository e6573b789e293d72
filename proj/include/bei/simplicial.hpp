#pragma once

#include <cstdint>
#include <vector>

#include "bei/field.hpp"
#include "bei/grobner.hpp"

namespace bei {

/// Complex on vertices 0..vertexCount-1 given by its facet antichain
/// (bitmask per facet).
struct SimplicialComplex {
    int vertexCount = 0;
    std::vector<std::uint32_t> facets;
};

/// Complex described by its minimal nonfaces; the representation the
/// homology kernels work from. A subset is a face iff it contains no
/// nonface.
struct NonfaceComplex {
    int vertexCount = 0;
    std::vector<std::uint32_t> nonfaces;

    bool is_face(std::uint32_t s) const {
        for (auto nf : nonfaces)
            if ((s & nf) == nf) return false;
        return true;
    }
};

/// Stanley-Reisner complex of a squarefree monomial ideal: minimal
/// nonfaces are exactly the generators' supports.
NonfaceComplex stanley_reisner_nonfaces(const MonomialIdeal& I);
SimplicialComplex stanley_reisner(const MonomialIdeal& I);

/// Faces of the subcomplex induced on `within`, listed by cardinality:
/// result[s] = faces of size s (dimension s-1).
std::vector<std::vector<std::uint32_t>> faces_by_size(const NonfaceComplex& c,
                                                      std::uint32_t within,
                                                      int maxSize);

/// Row-reducing rank over the field; destroys its input.
template <class F>
long long dense_rank(const F& k, std::vector<std::vector<typename F::Elem>>& rows);

extern template long long dense_rank<GFp>(const GFp&,
                                          std::vector<std::vector<GFp::Elem>>&);
extern template long long dense_rank<QQ>(const QQ&,
                                         std::vector<std::vector<QQ::Elem>>&);

/// Dense rank over the field of the simplicial boundary map from faces
/// of size s to faces of size s-1.
template <class F>
long long boundary_rank(const F& k, const std::vector<std::uint32_t>& facesS,
                        const std::vector<std::uint32_t>& facesSm1);

/// Reduced homology dimensions H~_{-1}, H~_0, ..., H~_{dim} of the
/// subcomplex induced on `within` (all vertices when within == ~0).
template <class F>
std::vector<long long> homology_ranks(const F& k, const NonfaceComplex& c,
                                      std::uint32_t within);

/// Single reduced homology dimension H~_d of the induced subcomplex.
template <class F>
long long homology_rank_dim(const F& k, const NonfaceComplex& c, std::uint32_t within,
                            int d);

extern template long long boundary_rank<GFp>(const GFp&,
                                             const std::vector<std::uint32_t>&,
                                             const std::vector<std::uint32_t>&);
extern template long long boundary_rank<QQ>(const QQ&, const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
extern template std::vector<long long> homology_ranks<GFp>(const GFp&,
                                                           const NonfaceComplex&,
                                                           std::uint32_t);
extern template std::vector<long long> homology_ranks<QQ>(const QQ&,
                                                          const NonfaceComplex&,
                                                          std::uint32_t);
extern template long long homology_rank_dim<GFp>(const GFp&, const NonfaceComplex&,
                                                 std::uint32_t, int);
extern template long long homology_rank_dim<QQ>(const QQ&, const NonfaceComplex&,
                                                std::uint32_t, int);

}  // namespace bei
