// Assembly of the R and K matrices from matrix products of the local
// operators L (over F_{q^2}) and G (over F_q) threaded through Fock
// traces or boundary-vector contractions, with the block normalizations
// that make every entry a rational function of z.

#pragma once

#include "okmat/fock.hpp"
#include "okmat/matrix.hpp"
#include "okmat/params.hpp"
#include "okmat/poly.hpp"
#include "okmat/ratrec.hpp"
#include "okmat/spin.hpp"

#include <map>
#include <optional>
#include <string>

namespace okmat {

/// Which contraction closes the K chain: a trace over F_q, or the boundary
/// sandwich <eta_k| ... |eta_{k'}> (which covers (2,2)).
struct KVariant {
    bool trace = false;
    int k = 1;
    int kp = 1;

    static KVariant tr() { return {true, 0, 0}; }
    static KVariant kk(int k, int kp) { return {false, k, kp}; }
    bool operator==(const KVariant& o) const { return trace == o.trace && k == o.k && kp == o.kp; }
    std::string str() const;
    static KVariant parse(const std::string& s); // "tr" or "k,k'"
};

/// Which contraction closes the R chain (label (r,r') or the trace).
struct RVariant {
    bool trace = false;
    int r = 1;
    int rp = 1;

    static RVariant tr() { return {true, 0, 0}; }
    static RVariant rr(int r, int rp) { return {false, r, rp}; }
    bool operator==(const RVariant& o) const { return trace == o.trace && r == o.r && rp == o.rp; }
    std::string str() const;
};

/// Star twists: entries of R* and R** are index-relabelings of R.
enum class StarTwist { None, Star, StarStar };

/// Default series truncation order for an n-site chain with contraction
/// labels l1, l2 (k,k' or r,r'); user-overridable everywhere.
int default_order(int n, int l1, int l2);

/// Default reconstruction degree bound.
DegreeBound default_bounds(int n, int l1, int l2);

/// Per-site local operator G(s)^b_a as a scalar multiple of one q-Boson
/// letter over F_q; a, b in {0,1}.
struct LocalG {
    GaussianRational scalar;
    std::optional<OpLetter> letter; // empty for zero
};
LocalG local_g(const ParamSet& params, int site, int b_out, int a_in);

/// Per-site local operator L^{g,d}_{a,b} over F_{q^2}; zero unless
/// g + d == a + b.
struct LocalL {
    GaussianRational scalar;
    std::optional<OpLetter> letter;
    bool zero = true;
};
LocalL local_l(const ParamSet& params, int g_out, int d_out, int a_in, int b_in);

/// kappa-normalized K entry, as an exact z-series through degree N.
ZSeries k_element(const ParamSet& params, const KVariant& variant, int n, int alpha, int beta, int N);

/// rho-normalized R entry (plain twist), exact through degree N.
ZSeries r_element(const ParamSet& params, const RVariant& variant, int n, int alpha, int beta,
                  int gamma, int delta, int N);

struct KMatrix {
    KVariant variant;
    int n = 0;
    // key (alpha, beta) for the transition v_alpha -> v*_beta; zero entries skipped
    std::map<std::pair<int, int>, RationalFn> entries;

    const RationalFn* find(int alpha, int beta) const {
        auto it = entries.find({alpha, beta});
        return it == entries.end() ? nullptr : &it->second;
    }
    /// K(z0) as a matrix with rows beta, columns alpha.
    Matrix eval(const GaussianRational& z0) const;
};

struct RMatrix {
    RVariant variant;
    int n = 0;
    // key (alpha, beta, gamma, delta) for v_alpha (x) v_beta -> v_gamma (x) v_delta
    std::map<std::array<int, 4>, RationalFn> entries;

    const RationalFn* find(int alpha, int beta, int gamma, int delta, StarTwist twist = StarTwist::None) const;

    /// R(z0) with the given twist as a matrix on V (x) V,
    /// rows (gamma, delta), columns (alpha, beta).
    Matrix eval(const GaussianRational& z0, StarTwist twist = StarTwist::None) const;
};

KMatrix assemble_k(const ParamSet& params, const KVariant& variant, int n, int N = -1,
                   std::optional<DegreeBound> bounds = std::nullopt);
RMatrix assemble_r(const ParamSet& params, const RVariant& variant, int n, int N = -1,
                   std::optional<DegreeBound> bounds = std::nullopt);

/// Diagonal gauge S = diag(prod_j (s_j / s)^{alpha_j}) and its complement
/// twin S* = diag(S_{1-alpha}).
Matrix gauge_s(const ParamSet& params, const GaussianRational& target_s, int n, bool star);

/// S* K(z; s_1..s_n) S^{-1}, entrywise on rational functions; equals the
/// homogeneous-parameter K matrix.
KMatrix gauge_conjugate(const KMatrix& K, const ParamSet& params, const GaussianRational& target_s);

} // namespace okmat
