#include "okmat/ratrec.hpp"

#include <optional>
#include <vector>

namespace okmat {

namespace {

// Solves for a denominator d(z) (deg <= dd, d(0)-row included in unknowns)
// annihilating the high coefficients of s: sum_j d_j s_{i-j} = 0 for
// i = dn+1 .. dn+dd.  The homogeneous system always has a nonzero kernel
// vector; Gaussian elimination over Q(i) finds one exactly.
std::optional<std::vector<GaussianRational>> denominator_kernel(const ZSeries& s, int dn, int dd) {
    int rows = dd;
    int cols = dd + 1;
    std::vector<std::vector<GaussianRational>> m(static_cast<size_t>(rows),
                                                 std::vector<GaussianRational>(static_cast<size_t>(cols)));
    for (int r = 0; r < rows; ++r) {
        int i = dn + 1 + r;
        for (int j = 0; j <= dd; ++j) {
            if (i - j < 0) continue;
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] = s.at(i - j);
        }
    }

    std::vector<int> pivot_col(static_cast<size_t>(rows), -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(rank)]);
        GaussianRational inv = m[static_cast<size_t>(rank)][static_cast<size_t>(c)].inverse();
        for (int cc = c; cc < cols; ++cc) m[static_cast<size_t>(rank)][static_cast<size_t>(cc)] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            GaussianRational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int cc = c; cc < cols; ++cc)
                m[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * m[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
        }
        pivot_col[static_cast<size_t>(rank)] = c;
        ++rank;
    }

    // Free column exists since cols = rows + 1.
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return std::nullopt;

    std::vector<GaussianRational> d(static_cast<size_t>(cols));
    d[static_cast<size_t>(free_col)] = GaussianRational(1);
    for (int r = 0; r < rank; ++r) {
        int pc = pivot_col[static_cast<size_t>(r)];
        d[static_cast<size_t>(pc)] = -m[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
    }
    return d;
}

std::optional<RationalFn> try_reconstruct(const ZSeries& s, int dn, int dd) {
    if (s.order() < dn + dd + 1) return std::nullopt;
    auto dvec = denominator_kernel(s, dn, dd);
    if (!dvec) return std::nullopt;
    Poly den(std::move(*dvec));
    if (den.is_zero()) return std::nullopt;

    // num = truncate(s * den, dn)
    ZSeries prod = s * den.to_series(s.order());
    std::vector<GaussianRational> nc(static_cast<size_t>(dn) + 1);
    for (int i = 0; i <= dn; ++i) nc[static_cast<size_t>(i)] = prod.at(i);
    Poly num(std::move(nc));

    // A vanishing constant term in den must be matched by num (no pole at 0);
    // the gcd reduction inside RationalFn cancels the common z powers.
    RationalFn f = [&]() -> RationalFn {
        try {
            return RationalFn(std::move(num), std::move(den));
        } catch (const std::domain_error&) {
            throw ReconstructionError("reconstruct: spurious pole at z = 0");
        }
    }();

    if (!(f.expand(s.order()) == s)) return std::nullopt;
    return f;
}

} // namespace

RationalFn reconstruct(const ZSeries& s, const DegreeBound& bound) {
    int dn = bound.num_deg, dd = bound.den_deg;
    if (s.order() < dn + dd + 5)
        throw ReconstructionError("reconstruct: series order too small for the degree bound");

    auto full = try_reconstruct(s, dn, dd);
    if (!full)
        throw ReconstructionError("reconstruct: unstable reconstruction (no rational fit at full order)");

    // Stability certificate: the shorter series must reproduce the same
    // function, showing the order had slack to spare.
    auto shorter = try_reconstruct(s.truncated(s.order() - 4), dn, dd);
    if (!shorter || !(*shorter == *full))
        throw ReconstructionError("reconstruct: unstable reconstruction (truncation-order disagreement)");

    return *full;
}

RationalFn reconstruct_with_escalation(const ZSeries& s, const DegreeBound& bound) {
    try {
        return reconstruct(s, bound);
    } catch (const ReconstructionError&) {
        DegreeBound doubled{bound.num_deg * 2, bound.den_deg * 2};
        return reconstruct(s, doubled);
    }
}

GaussianRational eval_at(const RationalFn& f, const GaussianRational& z0) {
    GaussianRational d = f.den.eval(z0);
    if (d.is_zero()) throw std::domain_error("eval_at: pole at the evaluation point");
    return f.num.eval(z0) / d;
}

} // namespace okmat
