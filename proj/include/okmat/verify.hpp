// Executable identity checks: intertwining, reflection, Yang-Baxter, the
// local quadratic relation, boundary reductions, gauge relations, the
// K-from-R proportionality, Onsager conditions, and a finite
// irreducibility probe.  Every check is exact; there are no tolerances.

#pragma once

#include "okmat/mpo.hpp"
#include "okmat/rep.hpp"

#include <string>
#include <vector>

namespace okmat {

struct CheckReport {
    std::string name;
    std::string config; // JSON: full parameter draw incl. seed, replayable
    bool pass = false;
    std::string detail; // first violating index tuple and values, on failure

    std::string json_line() const;
};

/// K(z0) pi_z0(b_i) = pi*_{1/z0}(b_i) K(z0) for every coideal generator.
CheckReport check_intertwining(const AlgebraSpec& spec, const KVariant& variant,
                               const ParamSet& params, const GaussianRational& z0,
                               bool homogeneous, const KMatrix& K);

/// Delta^op(g) R = R Delta(g) for g in {e_i, f_i, k_i}, all nodes, and the
/// star twists with the dual action on the starred slots.
CheckReport check_r_intertwining(const AlgebraSpec& spec, const ParamSet& params,
                                 const GaussianRational& x0, const GaussianRational& y0,
                                 const RMatrix& R);

/// The quartic reflection identity
///   K_2(y) R*_21(xy) K_1(x) R_12(x/y) = R**_21(x/y) K_1(x) R*_12(xy) K_2(y)
/// evaluated at exact points, with per-block verification where the
/// representation decomposes.
CheckReport check_reflection(const AlgebraSpec& spec, const KVariant& variant,
                             const ParamSet& params, const GaussianRational& x0,
                             const GaussianRational& y0, const KMatrix& K, const RMatrix& R);

/// All four Yang-Baxter variants (plain, one-star, two-star, all-star) on
/// V (x) V (x) V at z_ij = z_i / z_j.
CheckReport check_yang_baxter(const AlgebraSpec& spec, const ParamSet& params,
                              const GaussianRational& z1, const GaussianRational& z2,
                              const GaussianRational& z3, const RMatrix& R);

/// Local two-site quadratic relation among the G operators, all sixteen
/// index cases, as an operator identity on Fock levels <= max_level.
CheckReport check_gg(const ParamSet& params, int max_level = 24);

/// The six local boundary identities behind the affine-node intertwining
/// (three bra-side cases and their ket-side mirrors, at z = 1).
CheckReport check_boundary_reductions(const ParamSet& params, int max_level = 24);

/// Gauge relation S* K(z; s_1..s_n) S^{-1} = K(z; s..s) entrywise, plus the
/// diagonal commutation relations of R with S (x) S at a random point.
CheckReport check_gauge(const KVariant& variant, const RVariant& rvariant, const ParamSet& params,
                        const GaussianRational& target_s, const GaussianRational& z0, int n);

/// K(z,q) entries (at s = s' = eps sqrt(q)) are proportional, with one
/// common scalar function of z, to the diagonal-pair entries of
/// R*(z, sqrt(q)).
CheckReport check_kr_proportionality(const KVariant& variant, const GaussianRational& sqrt_q,
                                     int eps, int n);

/// Onsager compatibility for the coideal generator coefficients; with
/// negative_control the d-coefficient of one node is perturbed and the
/// check must fail.
CheckReport check_onsager(const AlgebraSpec& spec, const KVariant& variant, const ParamSet& params,
                          bool negative_control = false);

/// Module selector for the irreducibility probe.
struct ProbeModule {
    enum class Kind { Single, SingleWeight, SingleParity, Tensor, TensorWeight, TensorParity };
    Kind kind = Kind::Single;
    int m1 = 0; // weight or parity (+1/-1) of the first factor
    int m2 = 0;

    std::string str() const;
};

/// Span closure of each basis vector under the coideal action; passes iff
/// every orbit spans the whole module.  Numerical evidence at a point, not
/// a proof.  With diagonal_control the generators are replaced by the
/// k_i^{-1} alone and the probe must find proper submodules.
CheckReport irreducibility_probe(const AlgebraSpec& spec, const KVariant& variant,
                                 const ParamSet& params, const ProbeModule& module_choice,
                                 const GaussianRational& x0, const GaussianRational& y0,
                                 bool diagonal_control = false);

/// Structural checks on assembled matrices: selection rules, transpose
/// symmetry, weight conservation samples, and the reversal relation.
CheckReport check_k_selection_rules(const KMatrix& K);
CheckReport check_k_transpose_symmetry(const KMatrix& K);
CheckReport check_k_reversal(const KMatrix& K_kkp, const KMatrix& K_kpk);
CheckReport check_r_weight_conservation(const ParamSet& params, const RVariant& variant, int n,
                                        int samples, uint64_t seed);

std::string params_json(const ParamSet& params);

} // namespace okmat
