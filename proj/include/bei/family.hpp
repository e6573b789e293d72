#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// Family constructor AST. Grammar (CLI syntax):
///   expr := K(m) | Fm(m) | fan(m; s1,...,sk) | cone(expr,...)
///         | du(expr, expr, ...) | star(expr, expr) | circ(expr,...,expr)
/// fan blocks given by size are pure; general (non-pure) fans are
/// constructible through the API only.
struct FamilyExpr;
using ExprPtr = std::shared_ptr<const FamilyExpr>;

struct FamilyExpr {
    enum class Kind { Complete, BipartiteFm, Fan, Cone, DisjointUnion, Star, Circ };
    Kind kind;
    int m = 0;                          // Complete, BipartiteFm, Fan
    std::vector<FanBlock> blocks;       // Fan
    std::vector<ExprPtr> parts;         // Cone, DisjointUnion, Star, Circ

    bool pure_fan() const {
        if (kind != Kind::Fan) return false;
        for (const auto& b : blocks)
            if (!b.pure()) return false;
        return true;
    }
};

ExprPtr make_complete(int m);
ExprPtr make_fm(int m);
ExprPtr make_fan(int m, std::vector<FanBlock> blocks);
ExprPtr make_pure_fan(int m, const std::vector<int>& blockSizes);
ExprPtr make_cone(std::vector<ExprPtr> parts);
ExprPtr make_union(std::vector<ExprPtr> parts);
ExprPtr make_star(ExprPtr a, ExprPtr b);
/// chain entries: all but the last must be BipartiteFm(m_i) with
/// m_i >= 3; the last must be BipartiteFm or a pure Fan.
ExprPtr make_circ(std::vector<ExprPtr> chain);

std::string print_expr(const FamilyExpr& e);
ExprPtr parse_expr(const std::string& text);

/// Construct the graph of an expression. Circ chains fold left to
/// right; each F_{m} is glued at its leaf 2m (the leaf adjacent to the
/// highest odd vertex 2m-1) on the left and at its leaf 1 on the right,
/// and a pure fan tail is glued at the pendant leaf of its first block
/// of size >= 2 when one exists (first block otherwise).
Graph build_graph(const FamilyExpr& e);

int vertex_count(const FamilyExpr& e);

}  // namespace bei
