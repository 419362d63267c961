// Parameter bookkeeping: q, epsilon = +-1, site parameters s_1..s_n with
// s_j s'_j = q, and the derived purely imaginary p = -i eps / q satisfying
// eps = i q p exactly.  Specializing q, s_j to rationals keeps every scalar
// in the system inside Q(i).

#pragma once

#include "okmat/gaussian.hpp"

#include <vector>

namespace okmat {

struct ParamSet {
    GaussianRational q;
    int eps = 1; // +1 or -1
    std::vector<GaussianRational> s_list;
    GaussianRational p;      // -i eps / q
    GaussianRational norm_s; // homogeneous s used inside normalization factors

    ParamSet() = default;
    ParamSet(GaussianRational q_, int eps_, std::vector<GaussianRational> s_,
             const GaussianRational* norm_s_override = nullptr);

    static ParamSet homogeneous(const GaussianRational& q, int eps, const GaussianRational& s, int n);

    int n_sites() const { return static_cast<int>(s_list.size()); }
    bool is_homogeneous() const;

    const GaussianRational& s(int j) const { return s_list[static_cast<size_t>(j - 1)]; } // j = 1..n
    GaussianRational s_prime(int j) const { return q / s(j); }
    GaussianRational norm_s_prime() const { return q / norm_s; }

    GaussianRational i_eps() const { return eps > 0 ? GaussianRational::unit_i() : -GaussianRational::unit_i(); }

    /// Same q/eps/p with a different site list.
    ParamSet with_sites(std::vector<GaussianRational> s_) const;
};

} // namespace okmat
