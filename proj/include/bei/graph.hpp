#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bei/error.hpp"

namespace bei {

/// Simple undirected graph on vertices 1..n. Edges are stored as ordered
/// pairs (u,v) with u < v; no loops, no multi-edges.
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges;
    std::string provenance;  // printed FamilyExpr when built from one

    Graph() = default;
    explicit Graph(int n_) : n(n_) {
        if (n_ < 0) throw Error("Graph: negative vertex count");
    }

    void add_edge(int u, int v) {
        if (u == v) throw Error("Graph: loop rejected");
        if (u < 1 || v < 1 || u > n || v > n) throw Error("Graph: endpoint out of range");
        if (u > v) std::swap(u, v);
        edges.insert({u, v});
    }
    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return edges.count({u, v}) > 0;
    }
    std::vector<int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool is_leaf(int v) const { return degree(v) == 1; }
};

Graph complete_graph(int m);
Graph bipartite_fm(int m);

/// One fan block: clique sizes h_1..h_s attached along prefixes of the
/// block's W-set; pure block means h_i = i+1 for all i.
struct FanBlock {
    std::vector<int> h;
    bool pure() const {
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] != static_cast<int>(i) + 2) return false;
        return true;
    }
    static FanBlock pure_of_size(int s) {
        FanBlock b;
        for (int i = 1; i <= s; ++i) b.h.push_back(i + 1);
        return b;
    }
};

/// K_m with fans attached on consecutive blocks W_1 = {1..s_1},
/// W_2 = {s_1+1..s_1+s_2}, ...; new vertices labeled m+1, m+2, ...
/// in block order then clique order.
Graph fan_graph(int m, const std::vector<FanBlock>& blocks);

/// Disjoint union; parts relabeled consecutively in argument order.
/// If maps is non-null it receives, per part, old-label -> new-label.
Graph disjoint_union(const std::vector<Graph>& parts,
                     std::vector<std::vector<int>>* maps = nullptr);

/// New apex adjacent to every vertex of every part; apex labeled last.
Graph cone(const std::vector<Graph>& parts,
           std::vector<std::vector<int>>* maps = nullptr, int* apex = nullptr);

/// Operation *: identify leaf f1 of g1 with leaf f2 of g2.
Graph glue_star(const Graph& g1, int f1, const Graph& g2, int f2,
                std::vector<std::vector<int>>* maps = nullptr,
                int* identified = nullptr);

/// Operation o: remove leaves f1, f2 and identify their neighbors
/// v1, v2 (each of degree >= 3).
Graph glue_circ(const Graph& g1, int f1, const Graph& g2, int f2,
                std::vector<std::vector<int>>* maps = nullptr,
                int* identified = nullptr);

int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_cutpoint(const Graph& g, int u);
std::vector<int> cutpoints(const Graph& g);

/// G' = G plus all edges among N(u); G'' = G - u; H = G' - u.
/// G'' and H are relabeled to 1..n-1; relabel[old] = new (index 1..n).
struct CutpointSplit {
    Graph gPrime, gDoublePrime, h;
    int u = 0;
    std::vector<int> relabel;
};
CutpointSplit cutpoint_split(const Graph& g, int u);

/// f-vector with f_{-1} = 1 at index 0; entry k counts faces of
/// dimension k-1.
using FVector = std::vector<long long>;

struct CliqueComplexResult {
    std::vector<std::vector<int>> facets;  // maximal cliques, sorted
    FVector f;
};
CliqueComplexResult clique_complex(const Graph& g);

bool is_free_vertex(const Graph& g, int v);

struct ClassifyReport {
    std::vector<int> leaves;
    std::vector<int> freeVertices;
    std::vector<int> cutpoints;
    // decomposition into indecomposable pieces; vertexSets holds the
    // original labels of each piece
    std::vector<Graph> pieces;
    std::vector<std::vector<int>> pieceVertices;
};
ClassifyReport classify(const Graph& g);

/// Induced subgraph on the given (1-based) vertices, relabeled to
/// 1..k in the order given.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

}  // namespace bei
