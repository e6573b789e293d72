#include "bei/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace bei {

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph complete_graph(int m) {
    if (m < 1) throw Error("complete_graph: m must be >= 1");
    Graph g(m);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
    return g;
}

Graph bipartite_fm(int m) {
    if (m < 1) throw Error("bipartite_fm: m must be >= 1");
    Graph g(2 * m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) g.add_edge(2 * i, 2 * j - 1);
    return g;
}

Graph fan_graph(int m, const std::vector<FanBlock>& blocks) {
    if (m < 2) throw Error("fan_graph: m must be >= 2");
    int used = 0;
    for (const auto& b : blocks) used += static_cast<int>(b.h.size());
    if (used > m) throw Error("fan_graph: blocks exceed [m]");
    for (const auto& b : blocks) {
        if (b.h.empty()) throw Error("fan_graph: empty block");
        for (std::size_t i = 0; i < b.h.size(); ++i)
            if (b.h[i] <= static_cast<int>(i) + 1)
                throw Error("fan_graph: h_i <= i rejected");
    }
    // count new vertices: clique i of a block adds h_i - i of them
    int extra = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.h.size(); ++i)
            extra += b.h[i] - static_cast<int>(i) - 1;
    Graph g(m + extra);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
    int next = m + 1;
    int wStart = 1;
    for (const auto& b : blocks) {
        int s = static_cast<int>(b.h.size());
        // W = {wStart, ..., wStart+s-1}
        for (int i = 1; i <= s; ++i) {
            std::vector<int> clique;
            for (int t = 0; t < i; ++t) clique.push_back(wStart + t);
            for (int t = i; t < b.h[i - 1]; ++t) clique.push_back(next++);
            for (std::size_t a = 0; a < clique.size(); ++a)
                for (std::size_t c = a + 1; c < clique.size(); ++c)
                    g.add_edge(clique[a], clique[c]);
        }
        wStart += s;
    }
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts,
                     std::vector<std::vector<int>>* maps) {
    if (parts.empty()) throw Error("disjoint_union: empty parts list");
    int total = 0;
    for (const auto& p : parts) total += p.n;
    Graph g(total);
    if (maps) maps->clear();
    int off = 0;
    for (const auto& p : parts) {
        if (maps) {
            std::vector<int> m(p.n + 1, 0);
            for (int v = 1; v <= p.n; ++v) m[v] = v + off;
            maps->push_back(std::move(m));
        }
        for (const auto& [a, b] : p.edges) g.add_edge(a + off, b + off);
        off += p.n;
    }
    return g;
}

Graph cone(const std::vector<Graph>& parts,
           std::vector<std::vector<int>>* maps, int* apex) {
    Graph base = disjoint_union(parts, maps);
    Graph g(base.n + 1);
    g.edges = base.edges;
    int v = g.n;
    for (int w = 1; w < v; ++w) g.add_edge(v, w);
    if (apex) *apex = v;
    return g;
}

Graph glue_star(const Graph& g1, int f1, const Graph& g2, int f2,
                std::vector<std::vector<int>>* maps, int* identified) {
    if (!g1.is_leaf(f1) || !g2.is_leaf(f2))
        throw Error("glue_star: f_i must be a leaf");
    // g1 keeps its labels; g2 relabeled after it, with f2 mapped onto f1
    Graph g(g1.n + g2.n - 1);
    g.edges = g1.edges;
    std::vector<int> m2(g2.n + 1, 0);
    int next = g1.n + 1;
    for (int v = 1; v <= g2.n; ++v) m2[v] = (v == f2) ? f1 : next++;
    for (const auto& [a, b] : g2.edges) g.add_edge(m2[a], m2[b]);
    if (maps) {
        std::vector<int> m1(g1.n + 1);
        std::iota(m1.begin(), m1.end(), 0);
        *maps = {m1, m2};
    }
    if (identified) *identified = f1;
    return g;
}

Graph glue_circ(const Graph& g1, int f1, const Graph& g2, int f2,
                std::vector<std::vector<int>>* maps, int* identified) {
    if (!g1.is_leaf(f1) || !g2.is_leaf(f2))
        throw Error("glue_circ: f_i must be a leaf");
    int v1 = g1.neighbors(f1)[0];
    int v2 = g2.neighbors(f2)[0];
    if (g1.degree(v1) < 3 || g2.degree(v2) < 3)
        throw Error("glue_circ: neighbor of f_i must have degree >= 3");
    Graph g(g1.n + g2.n - 3);
    std::vector<int> m1(g1.n + 1, 0), m2(g2.n + 1, 0);
    int next = 1;
    for (int v = 1; v <= g1.n; ++v)
        if (v != f1) m1[v] = next++;
    for (int v = 1; v <= g2.n; ++v) {
        if (v == f2) continue;
        m2[v] = (v == v2) ? m1[v1] : next++;
    }
    for (const auto& [a, b] : g1.edges)
        if (a != f1 && b != f1) g.add_edge(m1[a], m1[b]);
    for (const auto& [a, b] : g2.edges)
        if (a != f2 && b != f2) g.add_edge(m2[a], m2[b]);
    if (maps) *maps = {m1, m2};
    if (identified) *identified = m1[v1];
    return g;
}

namespace {
void dfs(const Graph& g, int v, std::vector<char>& seen, int skip = 0) {
    seen[v] = 1;
    for (int w : g.neighbors(v))
        if (w != skip && !seen[w]) dfs(g, w, seen, skip);
}
}  // namespace

int component_count(const Graph& g) {
    std::vector<char> seen(g.n + 1, 0);
    int c = 0;
    for (int v = 1; v <= g.n; ++v)
        if (!seen[v]) {
            ++c;
            dfs(g, v, seen);
        }
    return c;
}

bool is_connected(const Graph& g) { return g.n <= 1 || component_count(g) == 1; }

bool is_cutpoint(const Graph& g, int u) {
    if (u < 1 || u > g.n) throw Error("is_cutpoint: vertex out of range");
    std::vector<char> seen(g.n + 1, 0);
    seen[u] = 1;
    int c = 0;
    for (int v = 1; v <= g.n; ++v)
        if (!seen[v]) {
            ++c;
            dfs(g, v, seen, u);
        }
    return c > component_count(g);
}

std::vector<int> cutpoints(const Graph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.n; ++v)
        if (is_cutpoint(g, v)) out.push_back(v);
    return out;
}

CutpointSplit cutpoint_split(const Graph& g, int u) {
    if (!is_cutpoint(g, u)) throw Error("cutpoint_split: u is not a cutpoint");
    CutpointSplit out;
    out.u = u;
    out.gPrime = g;
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            out.gPrime.add_edge(nb[i], nb[j]);
    out.relabel.assign(g.n + 1, 0);
    int next = 1;
    for (int v = 1; v <= g.n; ++v)
        if (v != u) out.relabel[v] = next++;
    Graph g2(g.n - 1), h(g.n - 1);
    for (const auto& [a, b] : g.edges)
        if (a != u && b != u) g2.add_edge(out.relabel[a], out.relabel[b]);
    for (const auto& [a, b] : out.gPrime.edges)
        if (a != u && b != u) h.add_edge(out.relabel[a], out.relabel[b]);
    out.gDoublePrime = std::move(g2);
    out.h = std::move(h);
    return out;
}

CliqueComplexResult clique_complex(const Graph& g) {
    CliqueComplexResult out;
    // Bron-Kerbosch with pivoting for the facets
    std::vector<uint64_t> adj(g.n + 1, 0);
    for (const auto& [a, b] : g.edges) {
        adj[a] |= 1ULL << b;
        adj[b] |= 1ULL << a;
    }
    std::function<void(uint64_t, uint64_t, uint64_t)> bk = [&](uint64_t r, uint64_t p,
                                                               uint64_t x) {
        if (!p && !x) {
            std::vector<int> c;
            for (int v = 1; v <= g.n; ++v)
                if (r >> v & 1) c.push_back(v);
            out.facets.push_back(c);
            return;
        }
        uint64_t px = p | x;
        int pivot = 0, best = -1;
        for (int v = 1; v <= g.n; ++v)
            if (px >> v & 1) {
                int cnt = __builtin_popcountll(p & adj[v]);
                if (cnt > best) {
                    best = cnt;
                    pivot = v;
                }
            }
        uint64_t cand = p & ~adj[pivot];
        for (int v = 1; v <= g.n; ++v)
            if (cand >> v & 1) {
                bk(r | (1ULL << v), p & adj[v], x & adj[v]);
                p &= ~(1ULL << v);
                x |= 1ULL << v;
            }
    };
    if (g.n > 0) bk(0, ((1ULL << (g.n + 1)) - 1) & ~1ULL, 0);
    std::sort(out.facets.begin(), out.facets.end());

    // f-vector: count cliques by size via DFS over ordered extensions
    std::vector<long long> cnt(g.n + 1, 0);
    cnt[0] = 1;  // empty face
    std::function<void(uint64_t, int, int)> cliques = [&](uint64_t common, int last,
                                                          int size) {
        for (int v = last + 1; v <= g.n; ++v)
            if (!size || (common >> v & 1)) {
                ++cnt[size + 1];
                cliques(size ? (common & adj[v]) : adj[v], v, size + 1);
            }
    };
    cliques(0, 0, 0);
    int maxs = g.n;
    while (maxs > 0 && cnt[maxs] == 0) --maxs;
    out.f.assign(cnt.begin(), cnt.begin() + maxs + 1);
    return out;
}

bool is_free_vertex(const Graph& g, int v) {
    // free <=> its neighborhood is a clique (then v lies in exactly one
    // maximal clique)
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::map<int, int> idx;
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i) + 1;
    Graph out(static_cast<int>(verts.size()));
    for (const auto& [a, b] : g.edges)
        if (idx.count(a) && idx.count(b)) out.add_edge(idx[a], idx[b]);
    return out;
}

namespace {
// true when the neighbors of v inside `side` (a vertex set of G) induce
// a clique, i.e. v is free in the subgraph on side + v
bool free_on_side(const Graph& g, int v, const std::vector<int>& side) {
    std::vector<int> nb;
    for (int w : side)
        if (g.has_edge(v, w)) nb.push_back(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

// split G = G1 u G2 with G1 n G2 = {v}, v free in both pieces (original
// labels), or return false when indecomposable
bool split_once(const Graph& g, const std::vector<int>& labels,
                std::vector<int>& left, std::vector<int>& right) {
    int n = g.n;
    for (int v = 1; v <= n; ++v) {
        if (!is_cutpoint(g, v)) continue;
        // components of G - v
        std::vector<char> seen(n + 1, 0);
        seen[v] = 1;
        std::vector<std::vector<int>> comps;
        for (int w = 1; w <= n; ++w)
            if (!seen[w]) {
                std::vector<char> mark = seen;
                dfs(g, w, mark, v);
                std::vector<int> comp;
                for (int z = 1; z <= n; ++z)
                    if (mark[z] && !seen[z]) comp.push_back(z);
                for (int z : comp) seen[z] = 1;
                comps.push_back(comp);
            }
        // one component against the rest; a valid split needs v free on
        // both sides
        for (std::size_t c0 = 0; c0 < comps.size(); ++c0) {
            std::vector<int> lhs = comps[c0], rhs;
            for (std::size_t c = 0; c < comps.size(); ++c)
                if (c != c0) rhs.insert(rhs.end(), comps[c].begin(), comps[c].end());
            if (!free_on_side(g, v, lhs) || !free_on_side(g, v, rhs)) continue;
            left.clear();
            right.clear();
            for (int z : lhs) left.push_back(labels[z - 1]);
            left.push_back(labels[v - 1]);
            std::sort(left.begin(), left.end());
            right.push_back(labels[v - 1]);
            for (int z : rhs) right.push_back(labels[z - 1]);
            std::sort(right.begin(), right.end());
            return true;
        }
    }
    return false;
}
}  // namespace

ClassifyReport classify(const Graph& g) {
    ClassifyReport rep;
    for (int v = 1; v <= g.n; ++v) {
        if (g.is_leaf(v)) rep.leaves.push_back(v);
        if (is_free_vertex(g, v)) rep.freeVertices.push_back(v);
    }
    rep.cutpoints = cutpoints(g);

    std::vector<std::vector<int>> work;
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 1);
    work.push_back(all);
    while (!work.empty()) {
        std::vector<int> verts = work.back();
        work.pop_back();
        Graph sub = induced_subgraph(g, verts);
        std::vector<int> left, right;
        if (sub.n > 1 && split_once(sub, verts, left, right)) {
            work.push_back(right);
            work.push_back(left);
        } else {
            rep.pieces.push_back(sub);
            rep.pieceVertices.push_back(verts);
        }
    }
    return rep;
}

}  // namespace bei
