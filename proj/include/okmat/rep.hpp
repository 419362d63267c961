// Representation matrices of the quantum affine algebra generators on the
// spin/fundamental modules V_z and their duals, coideal generators
// (homogeneous and multi-parameter), tensor actions, and the Onsager
// compatibility conditions.

#pragma once

#include "okmat/matrix.hpp"
#include "okmat/mpo.hpp"
#include "okmat/params.hpp"

#include <string>
#include <vector>

namespace okmat {

enum class Family { A1tr, D2, B1, B1t, D1 };

std::string family_name(Family f);      // CLI tags a1tr, d2, b1, b1t, d1
Family family_parse(const std::string&);

struct AlgebraSpec {
    Family family;
    int n;

    AlgebraSpec(Family f, int n_);

    int nodes() const { return family == Family::A1tr ? n : n + 1; } // generators 0..nodes()-1
    int r_left() const;   // z-power on node 0 (1 or 2)
    int r_right() const;  // label r' on node n (0 for the A family)
    int p_exponent(int node) const; // p_i = p^{exp}

    /// (k,k') is admissible iff r <= k and r' <= k'.
    bool coideal_ok(const KVariant& v) const;

    /// The companion matrix-product R label for this family.
    RVariant r_variant() const;

    /// Cartan matrix derived from the representation weights.
    std::vector<std::vector<int>> cartan(const ParamSet& params) const;
};

enum class Gen { E, F, K, Kinv };

/// pi_z(gen_node) as an exact 2^n x 2^n matrix, rows = target index.
Matrix pi_z(const AlgebraSpec& spec, Gen gen, int node, const GaussianRational& z0,
            const ParamSet& params);

/// The *-dual representation on v*_alpha, realized by the complement
/// relabeling of pi_z.
Matrix pi_star_z(const AlgebraSpec& spec, Gen gen, int node, const GaussianRational& z0,
                 const ParamSet& params);

/// Coefficients of b_i = c f_i + cbar k_i^{-1} e_i + d k_i^{-1}.
struct CoidealGenerator {
    int node = 0;
    GaussianRational c;
    GaussianRational cbar;
    GaussianRational d;
    bool homogeneous = true;
};

/// Generator table for the coideal attached to (spec, variant); the
/// homogeneous flag selects the single-s table, otherwise the
/// multi-parameter deformation built from params.s_list.
CoidealGenerator coideal_generator(const AlgebraSpec& spec, const KVariant& variant, int node,
                                   const ParamSet& params, bool homogeneous);

std::vector<CoidealGenerator> coideal_generators(const AlgebraSpec& spec, const KVariant& variant,
                                                 const ParamSet& params, bool homogeneous);

/// pi_z(b) for a coideal generator.
Matrix coideal_matrix(const AlgebraSpec& spec, const CoidealGenerator& b, const GaussianRational& z0,
                      const ParamSet& params);

/// pi*_z(b) on the dual side.
Matrix coideal_matrix_star(const AlgebraSpec& spec, const CoidealGenerator& b,
                           const GaussianRational& z0, const ParamSet& params);

/// Coproduct action Delta(b) = k^{-1} (x) b + (c f + cbar k^{-1} e) (x) 1
/// on V_x (x) V_y.
Matrix tensor_action_b(const AlgebraSpec& spec, const CoidealGenerator& b,
                       const GaussianRational& x0, const GaussianRational& y0,
                       const ParamSet& params);

/// Onsager compatibility conditions on the generator coefficients; returns
/// an empty string on success, else the first violating node pair.
std::string onsager_check(const AlgebraSpec& spec, const std::vector<CoidealGenerator>& gens,
                          const ParamSet& params);

} // namespace okmat
