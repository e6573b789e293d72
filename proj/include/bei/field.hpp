#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "bei/error.hpp"

namespace bei {

/// Prime field GF(p); elements normalized to [0, p).
struct GFp {
    using Elem = long long;
    long long p;

    explicit GFp(long long prime) : p(prime) {
        if (p < 2) throw Error("GFp: characteristic must be a prime >= 2");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error("GFp: characteristic must be prime");
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem norm(long long v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a - b + p) % p; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((__int128)a * b % p); }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("GFp: division by zero");
        // extended Euclid
        long long t = 0, newt = 1, r = p, newr = a;
        while (newr) {
            long long q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        return norm(t);
    }
    bool is_zero(Elem a) const { return a == 0; }
};

/// Exact rationals, for characteristic-zero paranoia runs.
struct QQ {
    using Elem = boost::multiprecision::cpp_rational;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem norm(long long v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw Error("QQ: division by zero");
        return 1 / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
};

inline constexpr long long kDefaultChar = 32003;

}  // namespace bei
