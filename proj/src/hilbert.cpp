#include "bei/hilbert.hpp"

#include <algorithm>

#include "bei/koszul.hpp"

namespace bei {

std::vector<long long> numerator_from_betti(const BettiTable& t) {
    if (!t.complete)
        throw Error("numerator_from_betti: table is incomplete");
    std::vector<long long> p;
    for (const auto& [ij, beta] : t.entries) {
        auto [i, j] = ij;
        if (j >= static_cast<int>(p.size())) p.resize(j + 1, 0);
        p[j] += (i % 2 == 0 ? beta : -beta);
    }
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

HilbertSeries reduce_to_h(const std::vector<long long>& numerator, int ringVars) {
    HilbertSeries s;
    s.numerator = numerator;
    std::vector<long long> h = numerator;
    int divisions = 0;
    for (;;) {
        // synthetic division by (1 - t): quotient q with h = (1-t) q
        // exists iff h(1) = 0
        long long at1 = 0;
        for (long long c : h) at1 += c;
        if (at1 != 0) break;
        std::vector<long long> q(h.size() > 1 ? h.size() - 1 : 1, 0);
        long long carry = 0;
        for (std::size_t k = 0; k + 1 < h.size(); ++k) {
            carry += h[k];
            q[k] = carry;
        }
        h = q;
        while (h.size() > 1 && h.back() == 0) h.pop_back();
        ++divisions;
    }
    s.h = h;
    // for S/J of a graph, ringVars - divisions is the Krull dimension
    s.d = ringVars - divisions;
    s.aInvariant = static_cast<int>(h.size()) - 1 - s.d;
    return s;
}

HilbertSeries hilbert_series_from_betti(const BettiTable& t) {
    return reduce_to_h(numerator_from_betti(t), t.ringVars);
}

std::vector<long long> h_from_f(const FVector& f) {
    int d = static_cast<int>(f.size()) - 1;  // f[d] counts top faces
    auto binom = [](long long n, long long k) -> long long {
        if (k < 0 || k > n) return 0;
        long long r = 1;
        for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
        return r;
    };
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i)
            h[k] += ((k - i) % 2 == 0 ? 1 : -1) * binom(d - i, k - i) * f[i];
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

std::vector<long long> hvector_fm(int m) {
    if (m < 2) throw Error("hvector_fm: requires m >= 2");
    long long mm = m;
    long long sumsq = (mm - 1) * mm * (2 * mm - 1) / 6;
    return {1, 2 * mm - 1, (3 * mm * mm - 3 * mm) / 2, sumsq};
}

long long hilbert_function(const MonomialIdeal& inJ, int e) {
    return hilbert_function_value(inJ, e);
}

std::vector<long long> hilbert_function_from_series(const HilbertSeries& s, int upTo) {
    // expand h(t) * (1-t)^{-d} = h(t) * sum C(d-1+k, k) t^k
    auto binom = [](long long n, long long k) -> long long {
        if (k < 0 || k > n) return 0;
        long long r = 1;
        for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
        return r;
    };
    std::vector<long long> hf(upTo + 1, 0);
    for (int e = 0; e <= upTo; ++e)
        for (int j = 0; j <= e && j < static_cast<int>(s.h.size()); ++j)
            hf[e] += s.h[j] * binom(s.d - 1 + (e - j), e - j);
    return hf;
}

}  // namespace bei
