#ifndef COXSURF_PICARD_HPP
#define COXSURF_PICARD_HPP

#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "coxsurf/errors.hpp"

namespace coxsurf {

/// Class in the rank-10 Picard lattice Z^{1,9} of a rational elliptic
/// surface, written in the basis (e0, e1, ..., e9) with e0^2 = 1,
/// ei^2 = -1 (i >= 1) and distinct basis vectors orthogonal.
struct DivisorClass {
    std::array<long, 10> c{};

    long& operator[](std::size_t i) { return c[i]; }
    long operator[](std::size_t i) const { return c[i]; }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r;
        for (int i = 0; i < 10; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r;
        for (int i = 0; i < 10; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend DivisorClass operator*(long k, const DivisorClass& a) {
        DivisorClass r;
        for (int i = 0; i < 10; ++i) r.c[i] = k * a.c[i];
        return r;
    }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c == b.c; }
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }
    friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.c < b.c; }

    bool is_zero() const {
        for (long v : c)
            if (v) return false;
        return true;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < 10; ++i) s += (i ? " " : "") + std::to_string(c[i]);
        return s + "]";
    }
};

/// Intersection pairing of signature (1,9).
inline long intersect(const DivisorClass& a, const DivisorClass& b) {
    long s = a.c[0] * b.c[0];
    for (int i = 1; i < 10; ++i) s -= a.c[i] * b.c[i];
    return s;
}

inline long self_intersection(const DivisorClass& a) { return intersect(a, a); }

/// K = -3 e0 + e1 + ... + e9; the anticanonical class -K is the fiber class.
inline DivisorClass canonical_class() {
    DivisorClass k;
    k.c = {-3, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    return k;
}

inline DivisorClass anticanonical_class() {
    DivisorClass k;
    k.c = {3, -1, -1, -1, -1, -1, -1, -1, -1, -1};
    return k;
}

/// chi(D) = 1 + (D^2 - D.K)/2 on a rational elliptic surface.
inline long riemann_roch_chi(const DivisorClass& d) {
    long q = self_intersection(d) - intersect(d, canonical_class());
    return 1 + q / 2;
}

/// D nef against an explicit list of negative-curve classes.
inline bool is_nef(const DivisorClass& d, const std::vector<DivisorClass>& curves) {
    for (const auto& c : curves)
        if (intersect(d, c) < 0) return false;
    return true;
}

/// h^1(X, D) for nef D, following the Harbourne case split:
/// -K.D > 0 gives 0; -K.D = 0 forces D ~ -aK with h^1 = a; and -K.D = 1
/// means D ~ -aK + P with a section P in the base locus, which this
/// routine only flags (the h^1 value is not determined here).
struct H1Result {
    std::optional<long> h1;          // set unless section data is needed
    bool needs_section_data = false; // case D ~ -aK + P
};

inline H1Result harbourne_h1(const DivisorClass& d, const std::vector<DivisorClass>& curves) {
    if (!is_nef(d, curves)) throw std::invalid_argument("harbourne_h1: divisor is not nef");
    long kd = intersect(anticanonical_class(), d);
    if (kd < 0) throw std::invalid_argument("harbourne_h1: -K.D < 0 impossible for nef D");
    if (kd > 1) return {0, false};
    if (kd == 1) return {std::nullopt, true};
    // -K.D = 0: D must be a multiple of -K = (3,-1,...,-1)
    if (d.is_zero()) return {0, false};
    long a = d.c[0] / 3;
    if (3 * a != d.c[0] || d != a * anticanonical_class())
        throw std::invalid_argument("harbourne_h1: nef class with -K.D = 0 not a fiber multiple");
    return {a, false};
}

} // namespace coxsurf

#endif
