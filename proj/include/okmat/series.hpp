// Truncated power series in the spectral parameter z over Q(i).
// Arithmetic is exact through the truncation order; the order is explicit
// state, never an implicit precision.

#pragma once

#include "okmat/gaussian.hpp"

#include <vector>

namespace okmat {

struct ZSeries {
    // coeffs[d] = coefficient of z^d, d = 0..order().
    std::vector<GaussianRational> coeffs;

    ZSeries() = default;
    explicit ZSeries(int order) : coeffs(static_cast<size_t>(order) + 1) {}
    ZSeries(std::vector<GaussianRational> c) : coeffs(std::move(c)) {}

    static ZSeries constant(const GaussianRational& c, int order) {
        ZSeries s(order);
        s.coeffs[0] = c;
        return s;
    }
    static ZSeries one(int order) { return constant(GaussianRational(1), order); }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    const GaussianRational& at(int d) const { return coeffs[static_cast<size_t>(d)]; }
    GaussianRational& at(int d) { return coeffs[static_cast<size_t>(d)]; }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    ZSeries truncated(int new_order) const;

    ZSeries& operator+=(const ZSeries& o);
    ZSeries& operator-=(const ZSeries& o);
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator*(const GaussianRational& c, ZSeries s);
    // Exact through min(order) with an explicit truncation, as is division.
    friend ZSeries operator/(const ZSeries& a, const ZSeries& b);
    friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.coeffs == b.coeffs; }

    /// Multiplicative inverse; requires nonzero constant term.
    ZSeries inverse() const;

    /// Multiply by z^k.  k < 0 demands the low k coefficients vanish.
    ZSeries shifted(int k) const;
};

} // namespace okmat
