// Seeded random draws of small rationals for the generic-parameter checks.
// Every report records its seed, so any failure replays exactly.

#pragma once

#include "okmat/params.hpp"

#include <random>

namespace okmat {

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    /// Nonzero rational with |num| <= 9 and 1 <= den <= 9.
    GaussianRational rat() {
        long long num = 0;
        while (num == 0) num = uniform(-9, 9);
        return gr_from_long(num, uniform(1, 9));
    }

    /// q avoiding {0, 1, -1}.
    GaussianRational q_value() {
        for (;;) {
            GaussianRational q = rat();
            if (q == GaussianRational(1) || q == GaussianRational(-1)) continue;
            return q;
        }
    }

    int eps_value() { return uniform(0, 1) ? 1 : -1; }

    ParamSet params(int n, bool homogeneous, int eps_override = 0) {
        GaussianRational q = q_value();
        int eps = eps_override == 0 ? eps_value() : eps_override;
        std::vector<GaussianRational> s;
        if (homogeneous) {
            s.assign(static_cast<size_t>(n), rat());
        } else {
            for (int j = 0; j < n; ++j) s.push_back(rat());
        }
        return ParamSet(q, eps, std::move(s));
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace okmat
