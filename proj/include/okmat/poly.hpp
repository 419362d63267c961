// Dense univariate polynomials over Q(i) and rational functions num/den in
// canonical form: gcd(num, den) = 1 and den monic with den(0) != 0.

#pragma once

#include "okmat/series.hpp"

#include <vector>

namespace okmat {

struct Poly {
    // coeffs[d] = coefficient of z^d; normalized so the top coefficient is
    // nonzero (the zero polynomial has an empty vector).
    std::vector<GaussianRational> coeffs;

    Poly() = default;
    Poly(std::vector<GaussianRational> c) : coeffs(std::move(c)) { normalize(); }
    static Poly constant(const GaussianRational& c);
    static Poly monomial(const GaussianRational& c, int deg);

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; } // -1 for zero
    const GaussianRational& leading() const { return coeffs.back(); }
    GaussianRational constant_term() const {
        return coeffs.empty() ? GaussianRational() : coeffs[0];
    }

    GaussianRational eval(const GaussianRational& z0) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }

    /// Euclidean division; returns (quotient, remainder).
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);

    ZSeries to_series(int order) const;
};

struct RationalFn {
    Poly num;
    Poly den; // monic, den(0) != 0 after canonicalization

    RationalFn() : num(), den(Poly::constant(GaussianRational(1))) {}
    RationalFn(Poly n, Poly d);

    bool is_zero() const { return num.is_zero(); }

    void canonicalize();

    ZSeries expand(int order) const;

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num == b.num && a.den == b.den;
    }

    /// f * z^k as a rational function (k may be negative).
    RationalFn shifted(int k) const;

    /// True iff num and den are both single monomials, i.e. f = c * z^d.
    bool is_monomial(GaussianRational* coeff_out = nullptr, int* deg_out = nullptr) const;
};

} // namespace okmat
