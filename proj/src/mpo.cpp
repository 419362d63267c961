#include "okmat/mpo.hpp"

#include "okmat/parallel.hpp"
#include "okmat/qseries.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace okmat {

std::string KVariant::str() const {
    if (trace) return "tr";
    std::ostringstream os;
    os << k << "," << kp;
    return os.str();
}

KVariant KVariant::parse(const std::string& s) {
    if (s == "tr") return KVariant::tr();
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("coideal must be 'tr' or 'k,k''");
    int k = std::stoi(s.substr(0, comma));
    int kp = std::stoi(s.substr(comma + 1));
    if ((k != 1 && k != 2) || (kp != 1 && kp != 2))
        throw std::invalid_argument("coideal labels must be 1 or 2");
    return KVariant::kk(k, kp);
}

std::string RVariant::str() const {
    if (trace) return "tr";
    std::ostringstream os;
    os << r << "," << rp;
    return os.str();
}

int default_order(int n, int l1, int l2) {
    int mx = std::max({l1, l2, 2});
    return 8 * n * mx + 16;
}

DegreeBound default_bounds(int n, int l1, int l2) {
    int mx = std::max({l1, l2, 2});
    return {n * mx + 4, n * mx + 4};
}

LocalG local_g(const ParamSet& params, int site, int b_out, int a_in) {
    const GaussianRational i = GaussianRational::unit_i();
    if (b_out == 0 && a_in == 0) return {i * params.s_prime(site), OpLetter::kpow(1)};
    if (b_out == 0 && a_in == 1) return {GaussianRational(1), OpLetter::lower()};
    if (b_out == 1 && a_in == 0) return {GaussianRational(1), OpLetter::raise()};
    return {i * params.s(site), OpLetter::kpow(1)};
}

LocalL local_l(const ParamSet& params, int g_out, int d_out, int a_in, int b_in) {
    LocalL out;
    if (g_out + d_out != a_in + b_in) return out;
    out.zero = false;
    if (g_out == a_in && d_out == b_in) {
        if (g_out == d_out) { // corners are the identity
            out.scalar = GaussianRational(1);
            out.letter = std::nullopt;
        } else { // diagonal q-weight
            out.scalar = params.i_eps() * params.q;
            out.letter = OpLetter::kpow(1);
        }
        return out;
    }
    // the two hopping entries
    out.scalar = GaussianRational(1);
    out.letter = (g_out == 1) ? OpLetter::raise() : OpLetter::lower();
    return out;
}

namespace {

// kappa normalizations for K; the homogeneous norm_s enters the scalar
// prefactors so that the gauge relation stays exact for inhomogeneous sites.
ZSeries kappa_series(const ParamSet& pr, const KVariant& v, int n, int alpha, int N) {
    const GaussianRational i = GaussianRational::unit_i();
    const GaussianRational& q = pr.q;
    if (v.trace) {
        // (-i)^n s^{-l} s'^{l-n} (1 - z q^n) with l = |alpha|
        int l = Spin::weight(alpha);
        GaussianRational c = (-i).pow(n) * pr.norm_s.pow(-l) * pr.norm_s_prime().pow(l - n);
        ZSeries s(N);
        s.coeffs[0] = c;
        if (N >= 1) s.coeffs[1] = -c * q.pow(n);
        return s;
    }
    GaussianRational is_inv = (i * pr.norm_s_prime()).pow(-n);
    if (v.k == 2 && v.kp == 2) {
        // even block: (i s')^{-n} (q^{2n} z^2; q^4)oo / (q^{2n+2} z^2; q^4)oo
        // odd block carries the extra s'/s.
        ZSeries numf = poch_inf_series(q.pow(2 * n), 2, q.pow(4), N);
        ZSeries denf = poch_inf_series(q.pow(2 * n + 2), 2, q.pow(4), N, true);
        GaussianRational c = is_inv;
        if (Spin::weight(alpha) % 2 == 1) c *= pr.norm_s_prime() / pr.norm_s;
        return c * (numf * denf);
    }
    int mk = std::max(v.k, v.kp);
    GaussianRational Q = q.pow(v.k * v.kp);
    ZSeries numf = poch_inf_series(q.pow(n * mk), mk, Q, N);
    ZSeries denf = poch_inf_series(-q.pow(n * mk + 1), mk, Q, N, true);
    return is_inv * (numf * denf);
}

ZSeries rho_series(const ParamSet& pr, const RVariant& v, int n, int alpha, int beta, int N) {
    const GaussianRational& q = pr.q;
    if (v.trace) {
        int d = std::abs(Spin::weight(alpha) - Spin::weight(beta));
        GaussianRational c = (pr.i_eps() * q).pow(-d);
        ZSeries s(N);
        s.coeffs[0] = c;
        if (N >= 1) s.coeffs[1] = -c * q.pow(2 * d);
        return s;
    }
    if (v.r == 2 && v.rp == 2) {
        bool mixed = (Spin::weight(alpha) % 2) != (Spin::weight(beta) % 2);
        if (!mixed) {
            ZSeries numf = poch_inf_series(GaussianRational(1), 2, q.pow(8), N);
            ZSeries denf = poch_inf_series(q.pow(4), 2, q.pow(8), N, true);
            return numf * denf;
        }
        // The scalar p in front is pinned by the requirement that the
        // lowest mixed-parity transitions are normalized to 1.
        ZSeries numf = poch_inf_series(q.pow(4), 2, q.pow(8), N);
        ZSeries denf = poch_inf_series(q.pow(8), 2, q.pow(8), N, true);
        return pr.p * (numf * denf);
    }
    int mr = std::max(v.r, v.rp);
    GaussianRational Q = q.pow(2 * v.r * v.rp);
    ZSeries numf = poch_inf_series(GaussianRational(1), mr, Q, N);
    ZSeries denf = poch_inf_series(-q.pow(2), mr, Q, N, true);
    return numf * denf;
}

struct WordBuild {
    GaussianRational scalar{1};
    OpWord word;
    bool zero = false;
};

WordBuild k_word(const ParamSet& params, int n, int alpha, int beta) {
    WordBuild wb;
    wb.word.base = FockBase::Fq;
    wb.word.letters.push_back(OpLetter::zmark());
    for (int j = 1; j <= n; ++j) {
        LocalG g = local_g(params, j, Spin::bit(beta, j, n), Spin::bit(alpha, j, n));
        wb.scalar *= g.scalar;
        if (g.letter) wb.word.letters.push_back(*g.letter);
    }
    return wb;
}

WordBuild r_word(const ParamSet& params, int n, int alpha, int beta, int gamma, int delta) {
    WordBuild wb;
    wb.word.base = FockBase::Fq2;
    wb.word.letters.push_back(OpLetter::zmark());
    for (int j = 1; j <= n; ++j) {
        LocalL l = local_l(params, Spin::bit(gamma, j, n), Spin::bit(delta, j, n),
                           Spin::bit(alpha, j, n), Spin::bit(beta, j, n));
        if (l.zero) {
            wb.zero = true;
            return wb;
        }
        wb.scalar *= l.scalar;
        if (l.letter) wb.word.letters.push_back(*l.letter);
    }
    return wb;
}

} // namespace

ZSeries k_element(const ParamSet& params, const KVariant& variant, int n, int alpha, int beta, int N) {
    WordBuild wb = k_word(params, n, alpha, beta);
    ZSeries contraction =
        variant.trace
            ? trace_series(wb.word, params.q, N)
            : braket_series(BoundaryVector::eta(variant.k), wb.word, BoundaryVector::eta(variant.kp),
                            params.q, N);
    if (contraction.is_zero()) return contraction;
    return wb.scalar * (kappa_series(params, variant, n, alpha, N) * contraction);
}

ZSeries r_element(const ParamSet& params, const RVariant& variant, int n, int alpha, int beta,
                  int gamma, int delta, int N) {
    WordBuild wb = r_word(params, n, alpha, beta, gamma, delta);
    if (wb.zero) return ZSeries(N);
    ZSeries contraction =
        variant.trace
            ? trace_series(wb.word, params.q, N)
            : braket_series(BoundaryVector::chi(variant.r), wb.word, BoundaryVector::chi(variant.rp),
                            params.q, N);
    if (contraction.is_zero()) return contraction;
    return wb.scalar * (rho_series(params, variant, n, alpha, beta, N) * contraction);
}

Matrix KMatrix::eval(const GaussianRational& z0) const {
    int d = Spin::dim(n);
    Matrix m(d, d);
    for (const auto& [key, fn] : entries) m.at(key.second, key.first) = eval_at(fn, z0);
    return m;
}

const RationalFn* RMatrix::find(int alpha, int beta, int gamma, int delta, StarTwist twist) const {
    int a = alpha, b = beta, g = gamma, d = delta;
    if (twist == StarTwist::Star) {
        b = Spin::complement(b, n);
        d = Spin::complement(d, n);
    } else if (twist == StarTwist::StarStar) {
        a = Spin::complement(a, n);
        b = Spin::complement(b, n);
        g = Spin::complement(g, n);
        d = Spin::complement(d, n);
    }
    auto it = entries.find({a, b, g, d});
    return it == entries.end() ? nullptr : &it->second;
}

Matrix RMatrix::eval(const GaussianRational& z0, StarTwist twist) const {
    int d = Spin::dim(n);
    Matrix m(d * d, d * d);
    for (const auto& [key, fn] : entries) {
        int a = key[0], b = key[1], g = key[2], dl = key[3];
        if (twist == StarTwist::Star) {
            b = Spin::complement(b, n);
            dl = Spin::complement(dl, n);
        } else if (twist == StarTwist::StarStar) {
            a = Spin::complement(a, n);
            b = Spin::complement(b, n);
            g = Spin::complement(g, n);
            dl = Spin::complement(dl, n);
        }
        m.at(g * d + dl, a * d + b) = eval_at(fn, z0);
    }
    return m;
}

KMatrix assemble_k(const ParamSet& params, const KVariant& variant, int n, int N,
                   std::optional<DegreeBound> bounds) {
    if (params.n_sites() != n) throw std::invalid_argument("assemble_k: site count mismatch");
    if (N < 0) N = default_order(n, variant.trace ? 2 : variant.k, variant.trace ? 2 : variant.kp);
    DegreeBound db = bounds ? *bounds
                            : default_bounds(n, variant.trace ? 2 : variant.k, variant.trace ? 2 : variant.kp);
    int d = Spin::dim(n);

    // Selection rules: the trace keeps |alpha| = |beta|; eta_2 contractions
    // constrain the net level shift mod 2.
    std::vector<std::pair<int, int>> keys;
    for (int alpha = 0; alpha < d; ++alpha)
        for (int beta = 0; beta < d; ++beta) {
            int shift = Spin::weight(beta) - Spin::weight(alpha);
            if (variant.trace && shift != 0) continue;
            if (!variant.trace && variant.k == 2 && variant.kp == 2 && shift % 2 != 0) continue;
            keys.emplace_back(alpha, beta);
        }

    std::vector<std::optional<RationalFn>> slots(keys.size());
    parallel_for(keys.size(), [&](size_t i) {
        auto [alpha, beta] = keys[i];
        ZSeries s = k_element(params, variant, n, alpha, beta, N);
        if (!s.is_zero()) slots[i] = reconstruct_with_escalation(s, db);
    });

    KMatrix out;
    out.variant = variant;
    out.n = n;
    for (size_t i = 0; i < keys.size(); ++i)
        if (slots[i]) out.entries.emplace(keys[i], std::move(*slots[i]));
    return out;
}

RMatrix assemble_r(const ParamSet& params, const RVariant& variant, int n, int N,
                   std::optional<DegreeBound> bounds) {
    if (N < 0) N = default_order(n, variant.trace ? 2 : variant.r, variant.trace ? 2 : variant.rp);
    DegreeBound db = bounds ? *bounds
                            : default_bounds(n, variant.trace ? 2 : variant.r, variant.trace ? 2 : variant.rp);
    int d = Spin::dim(n);

    // Weight conservation holds per site: alpha_j + beta_j = gamma_j + delta_j.
    std::vector<std::array<int, 4>> keys;
    for (int alpha = 0; alpha < d; ++alpha)
        for (int beta = 0; beta < d; ++beta)
            for (int gamma = 0; gamma < d; ++gamma) {
                int delta = 0;
                bool ok = true;
                for (int j = 1; j <= n; ++j) {
                    int v = Spin::bit(alpha, j, n) + Spin::bit(beta, j, n) - Spin::bit(gamma, j, n);
                    if (v < 0 || v > 1) {
                        ok = false;
                        break;
                    }
                    delta = Spin::set_bit(delta, j, n, v);
                }
                if (!ok) continue;
                if (variant.trace && Spin::weight(alpha) != Spin::weight(gamma)) continue;
                if (!variant.trace && variant.r == 2 && variant.rp == 2 &&
                    (Spin::weight(alpha) - Spin::weight(gamma)) % 2 != 0)
                    continue;
                keys.push_back({alpha, beta, gamma, delta});
            }

    std::vector<std::optional<RationalFn>> slots(keys.size());
    parallel_for(keys.size(), [&](size_t i) {
        auto [alpha, beta, gamma, delta] = keys[i];
        ZSeries s = r_element(params, variant, n, alpha, beta, gamma, delta, N);
        if (!s.is_zero()) slots[i] = reconstruct_with_escalation(s, db);
    });

    RMatrix out;
    out.variant = variant;
    out.n = n;
    for (size_t i = 0; i < keys.size(); ++i)
        if (slots[i]) out.entries.emplace(keys[i], std::move(*slots[i]));
    return out;
}

Matrix gauge_s(const ParamSet& params, const GaussianRational& target_s, int n, bool star) {
    int d = Spin::dim(n);
    Matrix m(d, d);
    for (int alpha = 0; alpha < d; ++alpha) {
        int idx = star ? Spin::complement(alpha, n) : alpha;
        GaussianRational v(1);
        for (int j = 1; j <= n; ++j)
            if (Spin::bit(idx, j, n)) v *= params.s(j) / target_s;
        m.at(alpha, alpha) = v;
    }
    return m;
}

KMatrix gauge_conjugate(const KMatrix& K, const ParamSet& params, const GaussianRational& target_s) {
    KMatrix out;
    out.variant = K.variant;
    out.n = K.n;
    int n = K.n;
    for (const auto& [key, fn] : K.entries) {
        auto [alpha, beta] = key;
        GaussianRational s_star(1), s_col(1);
        for (int j = 1; j <= n; ++j) {
            if (Spin::bit(Spin::complement(beta, n), j, n)) s_star *= params.s(j) / target_s;
            if (Spin::bit(alpha, j, n)) s_col *= params.s(j) / target_s;
        }
        // row scaling by S*, column scaling by S^{-1}
        GaussianRational c = s_star / s_col;
        out.entries.emplace(key, RationalFn(c * fn.num, fn.den));
    }
    return out;
}

} // namespace okmat
