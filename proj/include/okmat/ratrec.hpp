// Exact rational-function reconstruction from truncated z-series (Pade):
// solve the linear system for the denominator over Q(i), certify by
// re-expansion through the full order and by agreement across two
// truncation orders.

#pragma once

#include "okmat/poly.hpp"

namespace okmat {

struct DegreeBound {
    int num_deg;
    int den_deg;
};

class ReconstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Reconstructs s as a rational function with degrees within `bound`.
/// Requires s.order() >= num_deg + den_deg + 5 (slack for the stability
/// certificate).  Throws ReconstructionError when the series is not a
/// rational function within the bound or the certificates fail.
RationalFn reconstruct(const ZSeries& s, const DegreeBound& bound);

/// reconstruct() with the bound doubled once if the first attempt is
/// rejected; the order must accommodate the doubled bound for the retry.
RationalFn reconstruct_with_escalation(const ZSeries& s, const DegreeBound& bound);

/// Exact evaluation; throws on a pole.
GaussianRational eval_at(const RationalFn& f, const GaussianRational& z0);

} // namespace okmat
