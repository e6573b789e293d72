#pragma once

#include <vector>

#include "bei/betti_table.hpp"
#include "bei/graph.hpp"
#include "bei/grobner.hpp"

namespace bei {

/// Hilbert series of S/J as h(t) / (1-t)^d after cancelling every
/// common factor (1-t) from the Betti-number numerator.
struct HilbertSeries {
    std::vector<long long> numerator;  // K-polynomial, degree-indexed
    std::vector<long long> h;          // reduced numerator (h-vector)
    int d = 0;                         // Krull dimension of S/J
    int aInvariant = 0;                // deg h - d
};

/// K-polynomial sum_{i,j} (-1)^i beta_{i,j} t^j of a complete table.
std::vector<long long> numerator_from_betti(const BettiTable& t);

HilbertSeries reduce_to_h(const std::vector<long long>& numerator, int ringVars);

HilbertSeries hilbert_series_from_betti(const BettiTable& t);

/// h-vector of a simplicial complex from its f-vector (f[0] = f_{-1} = 1):
///   h_k = sum_i (-1)^{k-i} C(d-i, k-i) f[i],  d = dim + 1.
std::vector<long long> h_from_f(const FVector& f);

/// Closed-form h-vector of S/J_{F_m}, m >= 2:
///   (1, 2m-1, (3m^2-3m)/2, sum_{k=1}^{m-1} k^2), Krull dimension 2m+1.
std::vector<long long> hvector_fm(int m);

/// dim_K (S/J)_e via standard monomials of in(J).
long long hilbert_function(const MonomialIdeal& inJ, int e);

/// Values HF(0..upTo) predicted by the series, for cross-checks.
std::vector<long long> hilbert_function_from_series(const HilbertSeries& s, int upTo);

}  // namespace bei
