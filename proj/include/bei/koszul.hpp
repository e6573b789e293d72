#pragma once

#include "bei/betti_table.hpp"
#include "bei/grobner.hpp"

namespace bei {

inline constexpr int kKoszulCap = 16;  // ring variables

struct KoszulOptions {
    long long fieldChar = kDefaultChar;
    int jMax = -1;  // -1: derive from the Hochster table of in(J)
    int iMax = -1;  // -1: derive likewise
    bool parallel = true;
    int threads = 0;
};

/// Exact graded Betti table of S/J_G from the homology of the Koszul
/// complex on all ring variables tensored with S/J. The binomial edge
/// ideal is Z^n-graded (deg x_i = deg y_i = e_i), so the computation
/// splits into independent small blocks, one per multidegree; blocks
/// run in parallel under OpenMP.
BettiTable koszul_betti(const GrobnerResult& gr, const KoszulOptions& opts = {});

/// Serial reference implementation for the parallel kernel.
BettiTable koszul_betti_serial(const GrobnerResult& gr, const KoszulOptions& opts = {});

/// dim_K (S/J)_d: standard monomials of total degree d.
long long hilbert_function_value(const MonomialIdeal& inJ, int d);

}  // namespace bei
