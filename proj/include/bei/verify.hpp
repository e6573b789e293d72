#pragma once

#include <optional>
#include <string>

#include "bei/betti_table.hpp"
#include "bei/closed_form.hpp"
#include "bei/family.hpp"
#include "bei/field.hpp"

namespace bei {

enum class Verdict { Match, Mismatch, NotComputable };

std::string verdict_name(Verdict v);

struct OracleOptions {
    long long fieldChar = kDefaultChar;
    int threads = 0;
    // "auto": Koszul J-table when 2n <= 16, Hochster corner mode up to
    // 2n <= 24; "koszul" / "hochster" force one backend
    std::string method = "auto";
};

/// Oracle-side invariants; full tables give every invariant, corner
/// mode only certifies the extremal Betti number.
struct OracleResult {
    bool haveTable = false;
    BettiTable table;
    std::optional<int> reg;
    std::optional<int> projdim;
    std::optional<long long> cmType;
    std::optional<long long> extremalBetti;
    bool cornerCertified = false;
    std::string method;
    std::string note;
    double seconds = 0.0;
};

OracleResult oracle_invariants(const FamilyExpr& e, const OracleOptions& opts = {});

struct VerificationReport {
    std::string expression;
    InvariantReport closed;
    OracleResult oracle;
    Verdict regVerdict = Verdict::NotComputable;
    Verdict projdimVerdict = Verdict::NotComputable;
    Verdict extremalVerdict = Verdict::NotComputable;
    Verdict cmTypeVerdict = Verdict::NotComputable;
    bool anyMismatch = false;
    bool anyNotComputable = false;
    double seconds = 0.0;
};

VerificationReport verify_expr(const FamilyExpr& e, const OracleOptions& opts = {});

/// Conjecture from the literature: for bipartite F_m and k-pure fans
/// the CM-type equals the unique extremal Betti number, i.e.
/// beta_{p,p+j} = 0 for j < r. Requires a full J-table.
struct ConjectureResult {
    bool tested = false;
    bool holds = false;
    std::string detail;
};
ConjectureResult check_corner_conjecture(const FamilyExpr& e,
                                         const OracleOptions& opts = {});

}  // namespace bei
