#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bei/error.hpp"
#include "bei/field.hpp"

namespace bei {

/// Ring S = K[x_1..x_n, y_1..y_n], lex order with
/// x_1 > ... > x_n > y_1 > ... > y_n. Variable index i in [0, n) is
/// x_{i+1}, index n+i is y_{i+1}.
struct RingConfig {
    int n = 0;                       // graph vertex count
    long long fieldChar = kDefaultChar;  // 0 = exact rationals

    int vars() const { return 2 * n; }
    int xvar(int i) const { return i - 1; }      // 1-based graph vertex -> x index
    int yvar(int i) const { return n + i - 1; }  // 1-based graph vertex -> y index
    std::string var_name(int v) const {
        return v < n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n + 1);
    }
};

/// Exponent vector; degrees in these ideals stay small so uint8 is
/// plenty.
struct Monomial {
    std::vector<std::uint8_t> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    }
    bool squarefree() const {
        return std::all_of(e.begin(), e.end(), [](auto x) { return x <= 1; });
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial mul(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    Monomial div(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (r.e[i] < m.e[i]) throw Error("Monomial: inexact division");
            r.e[i] -= m.e[i];
        }
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& b) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && b.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }

    // lex: larger exponent at the earliest differing variable wins
    static int cmp_lex(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
    }
    bool lex_less(const Monomial& o) const { return cmp_lex(*this, o) < 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 14695981039346656037ULL;
        for (auto v : m.e) h = (h ^ v) * 1099511628211ULL;
        return h;
    }
};

/// Sparse polynomial: terms sorted lex-descending, no zero
/// coefficients.
template <class F>
struct Poly {
    using Elem = typename F::Elem;
    struct Term {
        Monomial m;
        Elem c;
    };
    std::vector<Term> terms;

    bool zero() const { return terms.empty(); }
    const Monomial& lm() const {
        if (zero()) throw Error("Poly: leading monomial of zero");
        return terms.front().m;
    }
    const Elem& lc() const {
        if (zero()) throw Error("Poly: leading coefficient of zero");
        return terms.front().c;
    }

    static Poly from_terms(const F& k, std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
            return Monomial::cmp_lex(a.m, b.m) > 0;
        });
        Poly out;
        for (auto& t : ts) {
            if (!out.terms.empty() && out.terms.back().m == t.m)
                out.terms.back().c = k.add(out.terms.back().c, t.c);
            else
                out.terms.push_back(std::move(t));
            if (!out.terms.empty() && k.is_zero(out.terms.back().c)) out.terms.pop_back();
        }
        return out;
    }

    Poly scaled(const F& k, const Elem& s) const {
        Poly out = *this;
        for (auto& t : out.terms) t.c = k.mul(t.c, s);
        return out;
    }
    Poly times_monomial(const Monomial& m) const {
        Poly out = *this;
        for (auto& t : out.terms) t.m = t.m.mul(m);
        return out;
    }
    Poly monic(const F& k) const {
        if (zero()) return *this;
        return scaled(k, k.inv(lc()));
    }
};

/// a - b, merging sorted term lists.
template <class F>
Poly<F> poly_sub(const F& k, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> out;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && Monomial::cmp_lex(a.terms[i].m, b.terms[j].m) > 0)) {
            out.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() ||
                   Monomial::cmp_lex(a.terms[i].m, b.terms[j].m) < 0) {
            out.terms.push_back({b.terms[j].m, k.neg(b.terms[j].c)});
            ++j;
        } else {
            auto c = k.sub(a.terms[i].c, b.terms[j].c);
            if (!k.is_zero(c)) out.terms.push_back({a.terms[i].m, c});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
std::string poly_to_string(const RingConfig& ring, const Poly<F>& f);

std::string monomial_to_string(const RingConfig& ring, const Monomial& m);

}  // namespace bei
