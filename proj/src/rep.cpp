#include "okmat/rep.hpp"

#include "okmat/spin.hpp"

#include <sstream>
#include <stdexcept>

namespace okmat {

std::string family_name(Family f) {
    switch (f) {
        case Family::A1tr: return "a1tr";
        case Family::D2: return "d2";
        case Family::B1: return "b1";
        case Family::B1t: return "b1t";
        case Family::D1: return "d1";
    }
    return "?";
}

Family family_parse(const std::string& s) {
    if (s == "a1tr") return Family::A1tr;
    if (s == "d2") return Family::D2;
    if (s == "b1") return Family::B1;
    if (s == "b1t") return Family::B1t;
    if (s == "d1") return Family::D1;
    throw std::invalid_argument("unknown algebra family: " + s);
}

AlgebraSpec::AlgebraSpec(Family f, int n_) : family(f), n(n_) {
    int min_n = (f == Family::A1tr || f == Family::D2) ? 2 : 3;
    if (n < min_n)
        throw std::invalid_argument("rank n too small for family " + family_name(f));
}

int AlgebraSpec::r_left() const {
    switch (family) {
        case Family::A1tr:
        case Family::D2:
        case Family::B1t: return 1;
        case Family::B1:
        case Family::D1: return 2;
    }
    return 1;
}

int AlgebraSpec::r_right() const {
    switch (family) {
        case Family::A1tr: return 0;
        case Family::D2:
        case Family::B1: return 1;
        case Family::B1t:
        case Family::D1: return 2;
    }
    return 0;
}

int AlgebraSpec::p_exponent(int node) const {
    if (family == Family::D2 && (node == 0 || node == n)) return 1;
    if (family == Family::B1 && node == n) return 1;
    if (family == Family::B1t && node == 0) return 1;
    return 2;
}

bool AlgebraSpec::coideal_ok(const KVariant& v) const {
    if (family == Family::A1tr) return v.trace;
    if (v.trace) return false;
    return r_left() <= v.k && r_right() <= v.kp;
}

RVariant AlgebraSpec::r_variant() const {
    if (family == Family::A1tr) return RVariant::tr();
    return RVariant::rr(r_left(), r_right());
}

namespace {

// One generator action on a basis index: target (or -1) plus the exponent
// of p in the coefficient and the power of z carried by the affine node.
struct Action {
    int target = -1;
    long long p_exp = 0;
    int z_pow = 0;
};

// e/f moves: all coefficients are 1 in these representations; the p-powers
// sit in the Cartan generators only.
Action act_ef(const AlgebraSpec& spec, bool is_e, int node, int alpha) {
    const int n = spec.n;
    Action a;
    if (spec.family == Family::A1tr) {
        int j = node == 0 ? n : node;      // site lowered by e_j
        int jp = node == 0 ? 1 : node + 1; // site raised by e_j
        int sgn = is_e ? 1 : -1;
        int t = Spin::move(alpha, j, -sgn, n);
        if (t >= 0) t = Spin::move(t, jp, sgn, n);
        a.target = t;
        if (node == 0) a.z_pow = is_e ? 1 : -1;
        return a;
    }
    if (node == 0) {
        int r = spec.r_left();
        int sgn = is_e ? 1 : -1;
        int t = Spin::move(alpha, 1, sgn, n);
        if (r == 2 && t >= 0) t = Spin::move(t, 2, sgn, n);
        a.target = t;
        a.z_pow = sgn * r;
        return a;
    }
    if (node == n) {
        int rp = spec.r_right();
        int sgn = is_e ? -1 : 1;
        int t = Spin::move(alpha, n, sgn, n);
        if (rp == 2 && t >= 0) t = Spin::move(t, n - 1, sgn, n);
        a.target = t;
        return a;
    }
    int sgn = is_e ? 1 : -1;
    int t = Spin::move(alpha, node, -sgn, n);
    if (t >= 0) t = Spin::move(t, node + 1, sgn, n);
    a.target = t;
    return a;
}

// Exponent c(alpha) with k_node v_alpha = p^{c(alpha)} v_alpha.
long long k_exponent(const AlgebraSpec& spec, int node, int alpha) {
    const int n = spec.n;
    auto bit = [&](int j) { return Spin::bit(alpha, j, n); };
    if (spec.family == Family::A1tr) {
        int j = node == 0 ? n : node;
        int jp = node == 0 ? 1 : node + 1;
        return 2LL * (bit(jp) - bit(j));
    }
    if (node == 0)
        return spec.r_left() == 1 ? 2LL * bit(1) - 1 : 2LL * (bit(1) + bit(2) - 1);
    if (node == n)
        return spec.r_right() == 1 ? 1 - 2LL * bit(n) : 2LL * (1 - bit(n) - bit(n - 1));
    return 2LL * (bit(node + 1) - bit(node));
}

} // namespace

std::vector<std::vector<int>> AlgebraSpec::cartan(const ParamSet&) const {
    int m = nodes();
    std::vector<std::vector<int>> a(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    // a_ij is read off the representation: applying e_j shifts the
    // k_i-weight by p_i^{a_ij}.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) {
                a[i][j] = 2;
                continue;
            }
            long long diff = 0;
            bool found = false;
            for (int alpha = 0; alpha < Spin::dim(n) && !found; ++alpha) {
                Action ej = act_ef(*this, true, j, alpha);
                if (ej.target < 0) continue;
                diff = k_exponent(*this, i, ej.target) - k_exponent(*this, i, alpha);
                found = true;
            }
            if (!found) throw std::logic_error("cartan: generator acts as zero");
            int ri = p_exponent(i);
            if (diff % ri != 0) throw std::logic_error("cartan: weight shift not divisible by p_i");
            a[i][j] = static_cast<int>(diff / ri);
        }
    }
    return a;
}

Matrix pi_z(const AlgebraSpec& spec, Gen gen, int node, const GaussianRational& z0,
            const ParamSet& params) {
    if (z0.is_zero()) throw std::domain_error("pi_z: z must be nonzero");
    if (node < 0 || node >= spec.nodes()) throw std::invalid_argument("pi_z: node out of range");
    int d = Spin::dim(spec.n);
    Matrix m(d, d);
    for (int alpha = 0; alpha < d; ++alpha) {
        if (gen == Gen::K || gen == Gen::Kinv) {
            long long e = k_exponent(spec, node, alpha);
            if (gen == Gen::Kinv) e = -e;
            m.at(alpha, alpha) = params.p.pow(e);
        } else {
            Action a = act_ef(spec, gen == Gen::E, node, alpha);
            if (a.target >= 0) m.at(a.target, alpha) = z0.pow(a.z_pow);
        }
    }
    return m;
}

Matrix pi_star_z(const AlgebraSpec& spec, Gen gen, int node, const GaussianRational& z0,
                 const ParamSet& params) {
    Matrix base = pi_z(spec, gen, node, z0, params);
    int d = Spin::dim(spec.n);
    Matrix m(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m.at(r, c) = base.at(Spin::complement(r, spec.n), Spin::complement(c, spec.n));
    return m;
}

namespace {

GaussianRational interior_d(const ParamSet& pr) {
    return pr.i_eps() * pr.p / (GaussianRational(1) - pr.p * pr.p);
}

// d coefficient of the (1,1) boundary form with site parameter u:
// (eps + i p) / (u (1 - p^2)).
GaussianRational d11(const ParamSet& pr, const GaussianRational& u) {
    GaussianRational num = GaussianRational(pr.eps) + GaussianRational::unit_i() * pr.p;
    return num / (u * (GaussianRational(1) - pr.p * pr.p));
}

} // namespace

CoidealGenerator coideal_generator(const AlgebraSpec& spec, const KVariant& variant, int node,
                                   const ParamSet& params, bool homogeneous) {
    if (!spec.coideal_ok(variant)) throw std::invalid_argument("coideal incompatible: need r <= k and r' <= k'");
    const int n = spec.n;
    const GaussianRational& p = params.p;
    GaussianRational p2 = p * p;
    CoidealGenerator g;
    g.node = node;
    g.homogeneous = homogeneous;

    auto site = [&](int j) { return homogeneous ? params.norm_s : params.s(j); };
    auto site_p = [&](int j) { return params.q / site(j); };

    if (spec.family == Family::A1tr) {
        int j = node == 0 ? n : node;      // f_node raises site j
        int jp = node == 0 ? 1 : node + 1; // and lowers site jp
        g.c = site(jp) / site(j);
        g.cbar = p2 * site(j) / site(jp);
        g.d = interior_d(params);
        return g;
    }
    if (node == 0) {
        int rk = 10 * spec.r_left() + variant.k;
        g.c = GaussianRational(1);
        if (rk == 12) {
            g.cbar = (site_p(1) / site(1)) * p;
            g.d = GaussianRational();
        } else if (rk == 11) {
            g.cbar = (site_p(1) / site(1)) * p;
            g.d = d11(params, site(1));
        } else { // (r,k) = (2,2)
            GaussianRational ratio = site_p(2) / site(1);
            g.cbar = ratio * ratio * p2;
            g.d = ratio * interior_d(params);
        }
        return g;
    }
    if (node == n) {
        int rk = 10 * spec.r_right() + variant.kp;
        g.c = GaussianRational(1);
        if (rk == 12) {
            g.cbar = (site(n) / site_p(n)) * p;
            g.d = GaussianRational();
        } else if (rk == 11) {
            g.cbar = (site(n) / site_p(n)) * p;
            g.d = d11(params, site_p(n));
        } else {
            GaussianRational ratio = site(n - 1) / site_p(n);
            g.cbar = ratio * ratio * p2;
            g.d = ratio * interior_d(params);
        }
        return g;
    }
    g.c = site(node + 1) / site(node);
    g.cbar = p2 * site(node) / site(node + 1);
    g.d = interior_d(params);
    return g;
}

std::vector<CoidealGenerator> coideal_generators(const AlgebraSpec& spec, const KVariant& variant,
                                                 const ParamSet& params, bool homogeneous) {
    std::vector<CoidealGenerator> out;
    for (int i = 0; i < spec.nodes(); ++i)
        out.push_back(coideal_generator(spec, variant, i, params, homogeneous));
    return out;
}

Matrix coideal_matrix(const AlgebraSpec& spec, const CoidealGenerator& b, const GaussianRational& z0,
                      const ParamSet& params) {
    Matrix F = pi_z(spec, Gen::F, b.node, z0, params);
    Matrix E = pi_z(spec, Gen::E, b.node, z0, params);
    Matrix Km = pi_z(spec, Gen::Kinv, b.node, z0, params);
    return b.c * F + b.cbar * (Km * E) + b.d * Km;
}

Matrix coideal_matrix_star(const AlgebraSpec& spec, const CoidealGenerator& b,
                           const GaussianRational& z0, const ParamSet& params) {
    Matrix F = pi_star_z(spec, Gen::F, b.node, z0, params);
    Matrix E = pi_star_z(spec, Gen::E, b.node, z0, params);
    Matrix Km = pi_star_z(spec, Gen::Kinv, b.node, z0, params);
    return b.c * F + b.cbar * (Km * E) + b.d * Km;
}

Matrix tensor_action_b(const AlgebraSpec& spec, const CoidealGenerator& b,
                       const GaussianRational& x0, const GaussianRational& y0,
                       const ParamSet& params) {
    Matrix Km_x = pi_z(spec, Gen::Kinv, b.node, x0, params);
    Matrix b_y = coideal_matrix(spec, b, y0, params);
    Matrix fe_x = b.c * pi_z(spec, Gen::F, b.node, x0, params) +
                  b.cbar * (Km_x * pi_z(spec, Gen::E, b.node, x0, params));
    int d = Spin::dim(spec.n);
    return Matrix::kron(Km_x, b_y) + Matrix::kron(fe_x, Matrix::identity(d));
}

std::string onsager_check(const AlgebraSpec& spec, const std::vector<CoidealGenerator>& gens,
                          const ParamSet& params) {
    if (spec.family == Family::A1tr && spec.n == 2) return {}; // no constraint for the rank-1 cycle
    auto cart = spec.cartan(params);
    GaussianRational one(1);
    GaussianRational fac = one - params.p * params.p;
    fac = fac * fac;
    auto q_of = [&](int i) {
        const auto& g = gens[static_cast<size_t>(i)];
        return g.c * g.cbar + g.d * g.d * fac;
    };
    int m = spec.nodes();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            int aij = cart[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int aji = cart[static_cast<size_t>(j)][static_cast<size_t>(i)];
            GaussianRational lhs;
            if (aij == -1 && aji == -1)
                lhs = gens[static_cast<size_t>(i)].d * q_of(j);
            else if (aij == -1 && aji == -2)
                lhs = gens[static_cast<size_t>(j)].d * q_of(i);
            else
                continue;
            if (!lhs.is_zero()) {
                std::ostringstream os;
                os << "onsager condition fails at node pair (" << i << "," << j << "): residue "
                   << lhs.str();
                return os.str();
            }
        }
    return {};
}

} // namespace okmat
