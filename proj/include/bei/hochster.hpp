#pragma once

#include <optional>
#include <vector>

#include "bei/betti_table.hpp"
#include "bei/simplicial.hpp"

namespace bei {

struct HochsterOptions {
    long long fieldChar = kDefaultChar;  // 0 = rationals
    bool parallel = true;                // OpenMP over subsets
    int threads = 0;                     // 0 = library default
};

inline constexpr int kHochsterFullCap = 14;    // full tables
inline constexpr int kHochsterCornerCap = 24;  // cell-filtered mode

/// Full Betti table of S/I by Hochster's formula:
///   beta_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(Delta_W).
BettiTable hochster_betti(const MonomialIdeal& I, const HochsterOptions& opts = {});

/// Only the requested (i, j) entries; subset enumeration restricted to
/// the sizes j that actually occur.
BettiTable hochster_betti_cells(const MonomialIdeal& I,
                                const std::vector<std::pair<int, int>>& cells,
                                const HochsterOptions& opts = {});

/// Serial reference implementations (same results, no OpenMP); kept as
/// the test oracle for the parallel kernels.
BettiTable hochster_betti_serial(const MonomialIdeal& I, const HochsterOptions& opts = {});
BettiTable hochster_betti_cells_serial(const MonomialIdeal& I,
                                       const std::vector<std::pair<int, int>>& cells,
                                       const HochsterOptions& opts = {});

/// Corner report for connected CM-style subjects: verifies
/// beta_{p, p+r} and that the neighboring cells (p+1, .) and (., r+1)
/// vanish.
struct CornerCheck {
    long long value = 0;
    bool neighborsVanish = false;
};
CornerCheck hochster_corner(const MonomialIdeal& I, int p, int r,
                            const HochsterOptions& opts = {});

}  // namespace bei
