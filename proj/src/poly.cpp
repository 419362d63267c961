#include "okmat/poly.hpp"

#include <stdexcept>

namespace okmat {

Poly Poly::constant(const GaussianRational& c) {
    Poly p;
    if (!c.is_zero()) p.coeffs = {c};
    return p;
}

Poly Poly::monomial(const GaussianRational& c, int deg) {
    Poly p;
    if (c.is_zero()) return p;
    p.coeffs.assign(static_cast<size_t>(deg) + 1, GaussianRational());
    p.coeffs.back() = c;
    return p;
}

void Poly::normalize() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

GaussianRational Poly::eval(const GaussianRational& z0) const {
    GaussianRational acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z0 + *it;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const GaussianRational& c, const Poly& p) {
    if (c.is_zero()) return Poly();
    std::vector<GaussianRational> out(p.coeffs.size());
    for (size_t i = 0; i < p.coeffs.size(); ++i) out[i] = c * p.coeffs[i];
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly rem = a;
    if (rem.degree() < b.degree()) return {Poly(), rem};
    std::vector<GaussianRational> q(static_cast<size_t>(rem.degree() - b.degree()) + 1);
    GaussianRational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        GaussianRational f = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = f;
        for (size_t i = 0; i < b.coeffs.size(); ++i)
            rem.coeffs[i + static_cast<size_t>(shift)] -= f * b.coeffs[i];
        rem.normalize();
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().inverse() * a; // monic
}

ZSeries Poly::to_series(int order) const {
    ZSeries s(order);
    for (int d = 0; d <= order && d < static_cast<int>(coeffs.size()); ++d)
        s.coeffs[static_cast<size_t>(d)] = coeffs[static_cast<size_t>(d)];
    return s;
}

RationalFn::RationalFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    canonicalize();
}

void RationalFn::canonicalize() {
    if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    if (num.is_zero()) {
        den = Poly::constant(GaussianRational(1));
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        num = Poly::divmod(num, g).first;
        den = Poly::divmod(den, g).first;
    }
    GaussianRational lead_inv = den.leading().inverse();
    num = lead_inv * num;
    den = lead_inv * den;
    if (den.constant_term().is_zero())
        throw std::domain_error("RationalFn: pole at z = 0 after reduction");
}

ZSeries RationalFn::expand(int order) const {
    return num.to_series(order) * den.to_series(order).inverse();
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.den + b.num * a.den, a.den * b.den);
}
RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.den - b.num * a.den, a.den * b.den);
}
RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.num, a.den * b.den);
}
RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(a.num * b.den, a.den * b.num);
}

RationalFn RationalFn::shifted(int k) const {
    if (k >= 0) return RationalFn(Poly::monomial(GaussianRational(1), k) * num, den);
    return RationalFn(num, Poly::monomial(GaussianRational(1), -k) * den);
}

bool RationalFn::is_monomial(GaussianRational* coeff_out, int* deg_out) const {
    auto single = [](const Poly& p, int& deg) {
        int nz = 0;
        for (size_t i = 0; i < p.coeffs.size(); ++i)
            if (!p.coeffs[i].is_zero()) {
                ++nz;
                deg = static_cast<int>(i);
            }
        return nz == 1;
    };
    int dn = 0, dd = 0;
    if (num.is_zero()) return false;
    if (!single(num, dn) || !single(den, dd)) return false;
    if (coeff_out) *coeff_out = num.coeffs[static_cast<size_t>(dn)] / den.coeffs[static_cast<size_t>(dd)];
    if (deg_out) *deg_out = dn - dd;
    return true;
}

} // namespace okmat
