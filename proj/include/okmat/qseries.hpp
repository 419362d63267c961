// Finite q-Pochhammer symbols, q-binomials, and z-series expansions of the
// infinite products (c z^k; Q)_oo via the Euler q-exponential sums.

#pragma once

#include "okmat/series.hpp"

namespace okmat {

/// (a; Q)_m = prod_{j=1..m} (1 - a Q^{j-1});  m = 0 gives 1.
GaussianRational qpoch_finite(const GaussianRational& a, const GaussianRational& Q, int m);

/// Gaussian binomial (m r)_Q = (Q;Q)_m / ((Q;Q)_{m-r} (Q;Q)_r); requires 0 <= r <= m.
GaussianRational qbinom(int m, int r, const GaussianRational& Q);

/// (c z^zpow; Q)_oo as a z-series through degree N:
///   sum_k (-1)^k Q^{k(k-1)/2} (c z^zpow)^k / (Q;Q)_k.
/// With reciprocal = true, 1/(c z^zpow; Q)_oo = sum_k (c z^zpow)^k / (Q;Q)_k.
/// Throws if some needed (Q;Q)_k vanishes (degenerate parameter).
ZSeries poch_inf_series(const GaussianRational& c, int zpow, const GaussianRational& Q, int N,
                        bool reciprocal = false);

} // namespace okmat
