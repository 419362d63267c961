#include "okmat/qseries.hpp"

#include <stdexcept>

namespace okmat {

GaussianRational qpoch_finite(const GaussianRational& a, const GaussianRational& Q, int m) {
    if (m < 0) throw std::domain_error("qpoch_finite: negative length");
    GaussianRational acc(1);
    GaussianRational qpow(1);
    for (int j = 1; j <= m; ++j) {
        acc *= GaussianRational(1) - a * qpow;
        qpow *= Q;
    }
    return acc;
}

GaussianRational qbinom(int m, int r, const GaussianRational& Q) {
    if (r < 0 || r > m) throw std::domain_error("qbinom: need 0 <= r <= m");
    GaussianRational num = qpoch_finite(Q, Q, m);
    GaussianRational den = qpoch_finite(Q, Q, m - r) * qpoch_finite(Q, Q, r);
    if (den.is_zero()) throw std::domain_error("qbinom: degenerate Q");
    return num / den;
}

ZSeries poch_inf_series(const GaussianRational& c, int zpow, const GaussianRational& Q, int N,
                        bool reciprocal) {
    if (zpow <= 0) throw std::domain_error("poch_inf_series: zpow must be positive");
    ZSeries out(N);
    out.coeffs[0] = GaussianRational(1);
    if (c.is_zero()) return out;

    GaussianRational cpow(1);        // c^k
    GaussianRational qq(1);          // (Q;Q)_k
    GaussianRational tri(1);         // Q^{k(k-1)/2}
    GaussianRational qpow(1);        // Q^k
    for (int k = 1; k * zpow <= N; ++k) {
        cpow *= c;
        if (k > 1) tri *= qpow; // Q^{(k-1)} more each step builds Q^{k(k-1)/2}
        qpow *= Q;
        qq *= GaussianRational(1) - qpow;
        if (qq.is_zero()) throw std::domain_error("poch_inf_series: (Q;Q)_k vanished, degenerate Q");
        GaussianRational term;
        if (reciprocal) {
            term = cpow / qq;
        } else {
            term = cpow * tri / qq;
            if (k & 1) term = -term;
        }
        out.coeffs[static_cast<size_t>(k) * zpow] = term;
    }
    return out;
}

} // namespace okmat
