// Exact arithmetic over Q(i): the coefficient field for everything here.
// All scalars in the library are GaussianRational; no floating point anywhere.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace okmat {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

// mpq_rational's (num, den) constructor mishandles negative denominators;
// route every fraction through here.
inline BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    BigRat r(num);
    r /= BigRat(den);
    return r;
}

inline BigRat make_rat(long long num, long long den = 1) {
    return make_rat(BigInt(num), BigInt(den));
}

/// Element of Q(i), value = re + i*im.  Denominators are kept positive and
/// in lowest terms by the underlying mpq representation.
struct GaussianRational {
    BigRat re;
    BigRat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long long n) : re(n), im(0) {}
    GaussianRational(const BigRat& r) : re(r), im(0) {}
    GaussianRational(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {BigRat(0), BigRat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, BigRat(-im)}; }

    /// |z|^2 as a rational; zero iff z == 0.
    BigRat norm2() const {
        BigRat a = re * re;
        BigRat b = im * im;
        return BigRat(a + b);
    }

    GaussianRational operator-() const { return {BigRat(-re), BigRat(-im)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        BigRat r = re * o.re - im * o.im;
        BigRat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        BigRat n = o.norm2();
        BigRat r = (re * o.re + im * o.im) / n;
        BigRat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const {
        GaussianRational one(1);
        return one / *this;
    }

    /// Integer power, negative exponents allowed for nonzero values.
    GaussianRational pow(long long e) const;

    /// String form "a/b+c/d*i" (pure-real values print as "a/b").
    std::string str() const;

    /// Parses "a/b", "a", "a/b+c/d*i", "c/d*i", "i", "-i", with optional signs.
    static GaussianRational parse(const std::string& s);
};

GaussianRational gr_from_long(long long n, long long d);

inline GaussianRational operator*(const BigRat& a, const GaussianRational& b) {
    return GaussianRational(a) * b;
}

} // namespace okmat
