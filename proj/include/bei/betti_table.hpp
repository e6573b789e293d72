#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bei {

/// Graded Betti numbers of S/J or S/in(J): (i, j) -> beta_{i,j}.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    int ringVars = 0;
    std::string subject;  // "J" or "inJ"
    bool complete = true;
    std::string note;

    long long get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void add(int i, int j, long long v) {
        if (v) entries[{i, j}] += v;
    }
    void merge(const BettiTable& o) {
        for (const auto& [ij, v] : o.entries) entries[ij] += v;
    }
};

struct ExtremalCorner {
    int i = 0;    // homological degree
    int ell = 0;  // j - i
    long long beta = 0;
};

struct TableInvariants {
    int reg = 0;
    int projdim = 0;
    long long cmType = 0;  // sum of beta_{p, p+j}
    std::vector<ExtremalCorner> corners;
    bool uniqueCorner = false;
};

TableInvariants invariants_from_table(const BettiTable& t);

/// Macaulay2-style grid: rows are ell = j - i, columns are i.
std::string table_grid(const BettiTable& t);

}  // namespace bei
