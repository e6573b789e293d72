#include "bei/family.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bei {

namespace {
ExprPtr node(FamilyExpr e) { return std::make_shared<const FamilyExpr>(std::move(e)); }
using Kind = FamilyExpr::Kind;
}  // namespace

ExprPtr make_complete(int m) {
    if (m < 1) throw Error("K(m): m must be >= 1");
    FamilyExpr e;
    e.kind = Kind::Complete;
    e.m = m;
    return node(std::move(e));
}

ExprPtr make_fm(int m) {
    if (m < 1) throw Error("Fm(m): m must be >= 1");
    FamilyExpr e;
    e.kind = Kind::BipartiteFm;
    e.m = m;
    return node(std::move(e));
}

ExprPtr make_fan(int m, std::vector<FanBlock> blocks) {
    if (m < 2) throw Error("fan: m must be >= 2");
    if (blocks.empty()) throw Error("fan: needs at least one block");
    int used = 0;
    for (const auto& b : blocks) {
        if (b.h.empty()) throw Error("fan: empty block");
        for (std::size_t i = 0; i < b.h.size(); ++i)
            if (b.h[i] <= static_cast<int>(i) + 1) throw Error("fan: h_i <= i rejected");
        used += static_cast<int>(b.h.size());
    }
    if (used > m) throw Error("fan: blocks exceed [m]");
    FamilyExpr e;
    e.kind = Kind::Fan;
    e.m = m;
    e.blocks = std::move(blocks);
    return node(std::move(e));
}

ExprPtr make_pure_fan(int m, const std::vector<int>& blockSizes) {
    std::vector<FanBlock> blocks;
    for (int s : blockSizes) {
        if (s < 1) throw Error("fan: block size must be >= 1");
        blocks.push_back(FanBlock::pure_of_size(s));
    }
    return make_fan(m, std::move(blocks));
}

ExprPtr make_cone(std::vector<ExprPtr> parts) {
    if (parts.empty()) throw Error("cone: empty parts list");
    FamilyExpr e;
    e.kind = Kind::Cone;
    e.parts = std::move(parts);
    return node(std::move(e));
}

ExprPtr make_union(std::vector<ExprPtr> parts) {
    if (parts.size() < 2) throw Error("du: needs at least two parts");
    FamilyExpr e;
    e.kind = Kind::DisjointUnion;
    e.parts = std::move(parts);
    return node(std::move(e));
}

ExprPtr make_star(ExprPtr a, ExprPtr b) {
    FamilyExpr e;
    e.kind = Kind::Star;
    e.parts = {std::move(a), std::move(b)};
    return node(std::move(e));
}

ExprPtr make_circ(std::vector<ExprPtr> chain) {
    if (chain.size() < 2) throw Error("circ: needs at least two entries");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto& c = *chain[i];
        if (c.kind != Kind::BipartiteFm || c.m < 3)
            throw Error("circ: entries before the last must be Fm(m) with m >= 3");
    }
    const auto& last = *chain.back();
    if (last.kind == Kind::BipartiteFm) {
        if (last.m < 3) throw Error("circ: final Fm(m) needs m >= 3");
    } else if (last.kind == Kind::Fan) {
        if (!last.pure_fan()) throw Error("circ: final fan must be pure");
        if (last.m < 3) throw Error("circ: final fan needs m >= 3");
    } else {
        throw Error("circ: final entry must be Fm or a pure fan");
    }
    FamilyExpr e;
    e.kind = Kind::Circ;
    e.parts = std::move(chain);
    return node(std::move(e));
}

std::string print_expr(const FamilyExpr& e) {
    std::ostringstream os;
    auto joinParts = [&](const char* name) {
        os << name << "(";
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            if (i) os << ", ";
            os << print_expr(*e.parts[i]);
        }
        os << ")";
    };
    switch (e.kind) {
        case Kind::Complete: os << "K(" << e.m << ")"; break;
        case Kind::BipartiteFm: os << "Fm(" << e.m << ")"; break;
        case Kind::Fan: {
            bool pure = e.pure_fan();
            os << (pure ? "fan(" : "fanh(") << e.m << "; ";
            for (std::size_t i = 0; i < e.blocks.size(); ++i) {
                if (i) os << ", ";
                if (pure)
                    os << e.blocks[i].h.size();
                else
                    for (std::size_t k = 0; k < e.blocks[i].h.size(); ++k)
                        os << (k ? " " : "") << e.blocks[i].h[k];
            }
            os << ")";
            break;
        }
        case Kind::Cone: joinParts("cone"); break;
        case Kind::DisjointUnion: joinParts("du"); break;
        case Kind::Star: joinParts("star"); break;
        case Kind::Circ: joinParts("circ"); break;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw Error("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        ws();
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int number() {
        ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    }
    std::string ident() {
        ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a constructor name");
        return s.substr(start, pos - start);
    }

    ExprPtr expr() {
        std::string name = ident();
        expect('(');
        ExprPtr out;
        if (name == "K") {
            out = make_complete(number());
        } else if (name == "Fm") {
            out = make_fm(number());
        } else if (name == "fan" || name == "fanh") {
            int m = number();
            expect(';');
            std::vector<FanBlock> blocks;
            for (;;) {
                if (name == "fan") {
                    blocks.push_back(FanBlock::pure_of_size(number()));
                } else {
                    FanBlock b;
                    b.h.push_back(number());
                    while (!peek(',') && !peek(')')) b.h.push_back(number());
                    blocks.push_back(std::move(b));
                }
                if (peek(',')) {
                    expect(',');
                    continue;
                }
                break;
            }
            out = make_fan(m, std::move(blocks));
        } else if (name == "cone" || name == "du" || name == "star" || name == "circ") {
            std::vector<ExprPtr> parts;
            parts.push_back(expr());
            while (peek(',')) {
                expect(',');
                parts.push_back(expr());
            }
            if (name == "cone")
                out = make_cone(std::move(parts));
            else if (name == "du")
                out = make_union(std::move(parts));
            else if (name == "star") {
                if (parts.size() < 2) fail("star needs two expressions");
                out = parts[0];
                for (std::size_t i = 1; i < parts.size(); ++i)
                    out = make_star(out, parts[i]);
            } else
                out = make_circ(std::move(parts));
        } else {
            fail("unknown constructor '" + name + "'");
        }
        expect(')');
        return out;
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expr();
    p.ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

namespace {

// fan tail gluing data: block chosen for the circ identification
int fan_glue_block(const FamilyExpr& fan) {
    for (std::size_t i = 0; i < fan.blocks.size(); ++i)
        if (fan.blocks[i].h.size() >= 2) return static_cast<int>(i);
    return 0;
}

// pendant leaf of block `bi` in the canonical fan labeling: the single
// new vertex of that block's first clique
int fan_pendant_leaf(const FamilyExpr& fan, int bi) {
    int label = fan.m;
    for (int b = 0; b < bi; ++b)
        for (std::size_t i = 0; i < fan.blocks[b].h.size(); ++i)
            label += fan.blocks[b].h[i] - static_cast<int>(i) - 1;
    return label + fan.blocks[bi].h[0] - 1;  // first clique adds h_1 - 1 vertices
}

}  // namespace

Graph build_graph(const FamilyExpr& e) {
    Graph g;
    switch (e.kind) {
        case Kind::Complete: g = complete_graph(e.m); break;
        case Kind::BipartiteFm: g = bipartite_fm(e.m); break;
        case Kind::Fan: g = fan_graph(e.m, e.blocks); break;
        case Kind::Cone: {
            std::vector<Graph> parts;
            for (const auto& p : e.parts) parts.push_back(build_graph(*p));
            g = cone(parts);
            break;
        }
        case Kind::DisjointUnion: {
            std::vector<Graph> parts;
            for (const auto& p : e.parts) parts.push_back(build_graph(*p));
            g = disjoint_union(parts);
            break;
        }
        case Kind::Star: {
            Graph a = build_graph(*e.parts[0]);
            Graph b = build_graph(*e.parts[1]);
            // glue at the lowest-labeled leaf of each operand
            auto leaf = [](const Graph& x) {
                for (int v = 1; v <= x.n; ++v)
                    if (x.is_leaf(v)) return v;
                throw Error("star: operand has no leaf");
            };
            g = glue_star(a, leaf(a), b, leaf(b));
            break;
        }
        case Kind::Circ: {
            Graph acc = build_graph(*e.parts[0]);
            int accLeaf = 2 * e.parts[0]->m;  // leaf adjacent to 2m-1
            for (std::size_t i = 1; i < e.parts.size(); ++i) {
                const FamilyExpr& nxt = *e.parts[i];
                Graph gn = build_graph(nxt);
                int f2;
                if (nxt.kind == Kind::BipartiteFm)
                    f2 = 1;  // leaf adjacent to vertex 2
                else
                    f2 = fan_pendant_leaf(nxt, fan_glue_block(nxt));
                std::vector<std::vector<int>> maps;
                Graph merged = glue_circ(acc, accLeaf, gn, f2, &maps);
                if (i + 1 < e.parts.size()) accLeaf = maps[1][2 * nxt.m];
                acc = std::move(merged);
            }
            g = acc;
            break;
        }
    }
    g.provenance = print_expr(e);
    return g;
}

int vertex_count(const FamilyExpr& e) {
    switch (e.kind) {
        case Kind::Complete: return e.m;
        case Kind::BipartiteFm: return 2 * e.m;
        case Kind::Fan: {
            int n = e.m;
            for (const auto& b : e.blocks)
                for (std::size_t i = 0; i < b.h.size(); ++i)
                    n += b.h[i] - static_cast<int>(i) - 1;
            return n;
        }
        case Kind::Cone: {
            int n = 1;
            for (const auto& p : e.parts) n += vertex_count(*p);
            return n;
        }
        case Kind::DisjointUnion: {
            int n = 0;
            for (const auto& p : e.parts) n += vertex_count(*p);
            return n;
        }
        case Kind::Star:
            return vertex_count(*e.parts[0]) + vertex_count(*e.parts[1]) - 1;
        case Kind::Circ: {
            int n = 0;
            for (const auto& p : e.parts) n += vertex_count(*p);
            return n - 3 * (static_cast<int>(e.parts.size()) - 1);
        }
    }
    return 0;
}

}  // namespace bei
