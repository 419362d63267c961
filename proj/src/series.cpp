#include "okmat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace okmat {

ZSeries ZSeries::truncated(int new_order) const {
    ZSeries out(new_order);
    int m = std::min(new_order, order());
    for (int d = 0; d <= m; ++d) out.coeffs[d] = coeffs[d];
    return out;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
    int m = std::min(order(), o.order());
    if (o.order() < order()) coeffs.resize(static_cast<size_t>(m) + 1);
    for (int d = 0; d <= m; ++d) coeffs[d] += o.coeffs[d];
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
    int m = std::min(order(), o.order());
    if (o.order() < order()) coeffs.resize(static_cast<size_t>(m) + 1);
    for (int d = 0; d <= m; ++d) coeffs[d] -= o.coeffs[d];
    return *this;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    int n = std::min(a.order(), b.order());
    ZSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeffs[j].is_zero()) continue;
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

ZSeries operator*(const GaussianRational& c, ZSeries s) {
    for (auto& x : s.coeffs) x *= c;
    return s;
}

ZSeries ZSeries::inverse() const {
    if (coeffs.empty() || coeffs[0].is_zero())
        throw std::domain_error("ZSeries::inverse: zero constant term");
    int n = order();
    ZSeries out(n);
    GaussianRational c0inv = coeffs[0].inverse();
    out.coeffs[0] = c0inv;
    for (int d = 1; d <= n; ++d) {
        GaussianRational acc;
        for (int j = 1; j <= d; ++j) {
            if (coeffs[j].is_zero()) continue;
            acc += coeffs[j] * out.coeffs[d - j];
        }
        out.coeffs[d] = -acc * c0inv;
    }
    return out;
}

ZSeries operator/(const ZSeries& a, const ZSeries& b) {
    int n = std::min(a.order(), b.order());
    return a.truncated(n) * b.truncated(n).inverse();
}

ZSeries ZSeries::shifted(int k) const {
    int n = order();
    ZSeries out(n);
    if (k >= 0) {
        for (int d = 0; d + k <= n; ++d) out.coeffs[d + k] = coeffs[d];
    } else {
        for (int d = 0; d < -k; ++d)
            if (d <= n && !coeffs[d].is_zero())
                throw std::domain_error("ZSeries::shifted: negative shift hits nonzero low coefficients");
        for (int d = -k; d <= n; ++d) out.coeffs[d + k] = coeffs[d];
    }
    return out;
}

} // namespace okmat
