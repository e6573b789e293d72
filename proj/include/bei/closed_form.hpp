#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bei/family.hpp"
#include "bei/graph.hpp"

namespace bei {

/// Closed-form invariants of S/J for a family expression, with the
/// guard messages collected when a formula does not apply.
struct InvariantReport {
    std::string expression;
    std::optional<int> reg;
    std::optional<int> projdim;
    std::optional<long long> extremalBetti;
    std::optional<long long> cmType;
    bool cmTypeConjectural = false;
    std::vector<std::string> notes;
};

/// Castelnuovo-Mumford regularity of S/J. Throws when no closed form
/// applies (e.g. non-pure fans).
int reg_closed(const FamilyExpr& e);

/// projdim S/J = n - (number of connected components); each family in
/// the grammar yields a Cohen-Macaulay ideal componentwise.
int projdim_closed(const FamilyExpr& e);

/// The unique extremal Betti number beta_{p, p+r} of S/J.
long long extremal_betti_closed(const FamilyExpr& e);

/// Cohen-Macaulay type beta_p of S/J. Throws for circ chains (the
/// known F4 o F3 counterexample: CM-type 29 differs from the extremal
/// Betti number 5) and when only the conjectural equality with the
/// extremal Betti number is available.
long long cm_type_closed(const FamilyExpr& e);

/// beta_{p, p+2} = n-2 for a cone over two Cohen-Macaulay components
/// with reg S/J > 2.
long long beta_p_plus2_cone(const FamilyExpr& e);

/// beta_{i,i+1}(S/J_G) = i * f_i(clique complex of G).
long long linear_strand(const Graph& g, int i);

/// Every invariant above, with failures recorded as notes instead of
/// thrown; conjectural CM-type values (bipartite F_m and k >= 2 pure
/// fans) are filled in and flagged.
InvariantReport closed_form_report(const FamilyExpr& e);

}  // namespace bei
