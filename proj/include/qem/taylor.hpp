#pragma once

// Degree-4 truncated Taylor arithmetic. Used to propagate derivative towers
// through products, quotients and integer powers without numeric differencing.

#include <array>
#include <cmath>

#include "qem/errors.hpp"

namespace qem {

// Taylor coefficients c[k] = f^(k)(s0)/k! about some expansion point.
struct Series5 {
    std::array<double, 5> c{};

    static Series5 constant(double v) {
        Series5 s;
        s.c[0] = v;
        return s;
    }

    // the local coordinate itself: x0 + t
    static Series5 variable(double x0) {
        Series5 s;
        s.c[0] = x0;
        s.c[1] = 1.0;
        return s;
    }

    double value() const { return c[0]; }

    // derivative f^(k)(s0)
    double deriv(int k) const {
        static const double fact[5] = {1, 1, 2, 6, 24};
        return c[k] * fact[k];
    }

    // series of f' truncated at the same degree (top coefficient unknown -> 0)
    Series5 differentiate() const {
        Series5 r;
        for (int k = 0; k + 1 < 5; ++k) r.c[k] = (k + 1) * c[k + 1];
        return r;
    }
};

inline Series5 operator+(const Series5& a, const Series5& b) {
    Series5 r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline Series5 operator-(const Series5& a, const Series5& b) {
    Series5 r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline Series5 operator-(const Series5& a) {
    Series5 r;
    for (int k = 0; k < 5; ++k) r.c[k] = -a.c[k];
    return r;
}

inline Series5 operator*(const Series5& a, const Series5& b) {
    Series5 r;
    for (int k = 0; k < 5; ++k) {
        double s = 0;
        for (int i = 0; i <= k; ++i) s += a.c[i] * b.c[k - i];
        r.c[k] = s;
    }
    return r;
}

inline Series5 operator*(double a, const Series5& b) {
    Series5 r;
    for (int k = 0; k < 5; ++k) r.c[k] = a * b.c[k];
    return r;
}

inline Series5 operator/(const Series5& a, const Series5& b) {
    if (b.c[0] == 0.0)
        throw Error(ErrorCode::Domain, "series division by zero constant term");
    Series5 q;
    for (int k = 0; k < 5; ++k) {
        double s = a.c[k];
        for (int i = 0; i < k; ++i) s -= q.c[i] * b.c[k - i];
        q.c[k] = s / b.c[0];
    }
    return q;
}

// integer power, n may be negative
inline Series5 pow_int(const Series5& a, int n) {
    if (n < 0) return Series5::constant(1.0) / pow_int(a, -n);
    Series5 r = Series5::constant(1.0);
    Series5 base = a;
    int e = n;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// derivatives f, f', ..., f^(4) at a point
struct Jet5 {
    std::array<double, 5> d{};

    static Jet5 from_series(const Series5& s) {
        Jet5 j;
        for (int k = 0; k < 5; ++k) j.d[k] = s.deriv(k);
        return j;
    }

    Series5 to_series() const {
        static const double fact[5] = {1, 1, 2, 6, 24};
        Series5 s;
        for (int k = 0; k < 5; ++k) s.c[k] = d[k] / fact[k];
        return s;
    }
};

}  // namespace qem
