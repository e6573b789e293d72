#include "bei/betti_table.hpp"

#include <algorithm>
#include <sstream>

#include "bei/error.hpp"

namespace bei {

TableInvariants invariants_from_table(const BettiTable& t) {
    if (!t.complete)
        throw Error("invariants_from_table: table incomplete" +
                    (t.note.empty() ? std::string() : " (" + t.note + ")"));
    TableInvariants out;
    for (const auto& [ij, v] : t.entries) {
        if (!v) continue;
        out.reg = std::max(out.reg, ij.second - ij.first);
        out.projdim = std::max(out.projdim, ij.first);
    }
    for (const auto& [ij, v] : t.entries)
        if (v && ij.first == out.projdim) out.cmType += v;
    // extremal: nonzero (i, ell) with no other nonzero (k, ell') >= it
    for (const auto& [ij, v] : t.entries) {
        if (!v) continue;
        int i = ij.first, ell = ij.second - ij.first;
        if (i == 0 && ell == 0 && out.projdim > 0) continue;  // beta_{0,0}
        bool extremal = true;
        for (const auto& [kl, w] : t.entries) {
            if (!w) continue;
            int k = kl.first, ellp = kl.second - kl.first;
            if (k == 0 && ellp == 0 && out.projdim > 0) continue;
            if ((k != i || ellp != ell) && k >= i && ellp >= ell) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.corners.push_back({i, ell, v});
    }
    out.uniqueCorner = out.corners.size() == 1;
    return out;
}

std::string table_grid(const BettiTable& t) {
    int maxI = 0, maxL = 0;
    for (const auto& [ij, v] : t.entries)
        if (v) {
            maxI = std::max(maxI, ij.first);
            maxL = std::max(maxL, ij.second - ij.first);
        }
    std::ostringstream os;
    os << "      ";
    for (int i = 0; i <= maxI; ++i) os << "\t" << i;
    os << "\n";
    for (int l = 0; l <= maxL; ++l) {
        os << l << ":";
        for (int i = 0; i <= maxI; ++i) {
            long long v = t.get(i, i + l);
            os << "\t";
            if (v)
                os << v;
            else
                os << ".";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace bei
