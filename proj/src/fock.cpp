#include "okmat/fock.hpp"

#include "okmat/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace okmat {

int OpWord::net_level_shift() const {
    int s = 0;
    for (const auto& l : letters) {
        if (l.kind == LetterKind::Raise) ++s;
        if (l.kind == LetterKind::Lower) --s;
    }
    return s;
}

int OpWord::zmark_count() const {
    int c = 0;
    for (const auto& l : letters)
        if (l.kind == LetterKind::ZMark) ++c;
    return c;
}

std::string GradedVector::dump_json() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [level, c] : entries) {
        if (!first) os << ",";
        first = false;
        os << "\"" << level << "\":\"" << c.str() << "\"";
    }
    os << "}";
    return os.str();
}

GaussianRational boundary_coefficient(const BoundaryVector& b, int level, const GaussianRational& q) {
    if (level < 0 || level % b.r != 0) return GaussianRational();
    int m = level / b.r;
    int exp = b.r * b.r * (b.base == FockBase::Fq ? 1 : 2);
    GaussianRational Q = q.pow(exp);
    GaussianRational denom = qpoch_finite(Q, Q, m);
    if (denom.is_zero()) throw std::domain_error("boundary_coefficient: degenerate q");
    return denom.inverse();
}

GradedVector boundary_ket(const BoundaryVector& b, int max_level, const GaussianRational& q) {
    GradedVector v;
    v.base = b.base;
    for (int l = 0; l <= max_level; ++l) v.add(l, boundary_coefficient(b, l, q));
    return v;
}

GaussianRational pairing_weight(FockBase base, int level, const GaussianRational& q) {
    GaussianRational Q = q.pow(base == FockBase::Fq ? 2 : 4);
    return qpoch_finite(Q, Q, level);
}

namespace {

struct Walk {
    GaussianRational coeff{1};
    int level = 0;
    int zdeg = -1; // level recorded at the z^h marker
    bool dead = false;
};

// One ket-side step (right-to-left letter application).
void step_ket(Walk& w, const OpLetter& l, FockBase base, const GaussianRational& q) {
    switch (l.kind) {
        case LetterKind::Raise:
            w.level += 1;
            break;
        case LetterKind::Lower: {
            GaussianRational f = GaussianRational(1) - q.pow((base == FockBase::Fq ? 2 : 4) * w.level);
            if (f.is_zero()) { // annihilates the vacuum
                w.dead = true;
                return;
            }
            w.coeff *= f;
            w.level -= 1;
            break;
        }
        case LetterKind::KPow:
            w.coeff *= q.pow(static_cast<long long>(base == FockBase::Fq ? 1 : 2) * l.kpow * w.level);
            break;
        case LetterKind::ZMark:
            w.zdeg = w.level;
            break;
        case LetterKind::WPow:
            w.coeff *= l.w.pow(w.level);
            break;
    }
}

// One bra-side step (left-to-right letter application).
void step_bra(Walk& w, const OpLetter& l, FockBase base, const GaussianRational& q) {
    switch (l.kind) {
        case LetterKind::Raise: { // <m| a+ = (1 - q^{2m}) <m-1|
            GaussianRational f = GaussianRational(1) - q.pow((base == FockBase::Fq ? 2 : 4) * w.level);
            if (f.is_zero()) {
                w.dead = true;
                return;
            }
            w.coeff *= f;
            w.level -= 1;
            break;
        }
        case LetterKind::Lower: // <m| a- = <m+1|
            w.level += 1;
            break;
        case LetterKind::KPow:
            w.coeff *= q.pow(static_cast<long long>(base == FockBase::Fq ? 1 : 2) * l.kpow * w.level);
            break;
        case LetterKind::ZMark:
            w.zdeg = w.level;
            break;
        case LetterKind::WPow:
            w.coeff *= l.w.pow(w.level);
            break;
    }
}

Walk walk_ket(const OpWord& word, int start_level, const GaussianRational& q) {
    Walk w;
    w.level = start_level;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        step_ket(w, *it, word.base, q);
        if (w.dead || w.level < 0) {
            w.dead = true;
            return w;
        }
    }
    return w;
}

} // namespace

GradedVector apply(const OpWord& word, const GradedVector& v, const GaussianRational& q) {
    if (word.zmark_count() != 0) throw std::invalid_argument("apply: word must not contain z^h");
    if (word.base != v.base) throw std::invalid_argument("apply: Fock base mismatch");
    GradedVector out;
    out.base = v.base;
    for (const auto& [level, c] : v.entries) {
        Walk w = walk_ket(word, level, q);
        if (!w.dead) out.add(w.level, c * w.coeff);
    }
    return out;
}

GradedVector apply_bra(const OpWord& word, const GradedVector& v, const GaussianRational& q) {
    if (word.zmark_count() != 0) throw std::invalid_argument("apply_bra: word must not contain z^h");
    if (word.base != v.base) throw std::invalid_argument("apply_bra: Fock base mismatch");
    GradedVector out;
    out.base = v.base;
    for (const auto& [level, c] : v.entries) {
        Walk w;
        w.level = level;
        for (const auto& l : word.letters) {
            step_bra(w, l, word.base, q);
            if (w.dead || w.level < 0) {
                w.dead = true;
                break;
            }
        }
        if (!w.dead) out.add(w.level, c * w.coeff);
    }
    return out;
}

ZSeries trace_series(const OpWord& word, const GaussianRational& q, int N) {
    if (word.zmark_count() != 1) throw std::invalid_argument("trace_series: need exactly one z^h marker");
    ZSeries out(N);
    if (word.net_level_shift() != 0) return out; // no diagonal elements
    int len = static_cast<int>(word.letters.size());
    for (int m = 0; m <= N + len; ++m) {
        Walk w = walk_ket(word, m, q);
        if (w.dead) continue;
        if (w.zdeg >= 0 && w.zdeg <= N) out.coeffs[static_cast<size_t>(w.zdeg)] += w.coeff;
    }
    return out;
}

ZSeries braket_series(const BoundaryVector& bra, const OpWord& word, const BoundaryVector& ket,
                      const GaussianRational& q, int N) {
    if (word.zmark_count() != 1) throw std::invalid_argument("braket_series: need exactly one z^h marker");
    if (bra.base != word.base || ket.base != word.base)
        throw std::invalid_argument("braket_series: Fock base mismatch");
    ZSeries out(N);
    int len = static_cast<int>(word.letters.size());
    for (int m0 = 0; m0 <= N + len; ++m0) {
        GaussianRational kc = boundary_coefficient(ket, m0, q);
        if (kc.is_zero()) continue;
        Walk w = walk_ket(word, m0, q);
        if (w.dead || w.zdeg < 0 || w.zdeg > N) continue;
        GaussianRational bc = boundary_coefficient(bra, w.level, q);
        if (bc.is_zero()) continue;
        out.coeffs[static_cast<size_t>(w.zdeg)] += kc * w.coeff * bc * pairing_weight(word.base, w.level, q);
    }
    return out;
}

OpWord lin_word(bool raise, int j, int m, const GaussianRational& w) {
    OpWord word;
    word.base = FockBase::Fq;
    word.letters.push_back(OpLetter::zmark());
    for (int t = 0; t < j; ++t) word.letters.push_back(raise ? OpLetter::raise() : OpLetter::lower());
    if (m != 0) word.letters.push_back(OpLetter::kpow(m));
    word.letters.push_back(OpLetter::wpow(w));
    return word;
}

ZSeries closed_form_oracle(LinForm form, int j, int m, const GaussianRational& w,
                           const GaussianRational& q, int N) {
    switch (form) {
        case LinForm::TraceKm: {
            // 1/(1 - z q^m) expanded
            ZSeries s(N);
            GaussianRational qm = q.pow(m);
            GaussianRational acc(1);
            for (int d = 0; d <= N; ++d) {
                s.coeffs[static_cast<size_t>(d)] = acc;
                acc *= qm;
            }
            return s;
        }
        case LinForm::Eta11RaiseJ: {
            GaussianRational pref = qpoch_finite(-q, q, j);
            ZSeries numf = poch_inf_series(-q.pow(j + m + 1) * w, 1, q, N);
            ZSeries denf = poch_inf_series(q.pow(m) * w, 1, q, N, true);
            return (pref * (numf * denf)).shifted(j);
        }
        case LinForm::Eta12LowerJ:
        case LinForm::Eta12RaiseJ: {
            bool raise = (form == LinForm::Eta12RaiseJ);
            GaussianRational q2 = q * q;
            GaussianRational w2 = w * w;
            ZSeries sum(N);
            for (int i = 0; i <= j; ++i) {
                long long texp = raise ? (static_cast<long long>(i) * (i + 1)) / 2
                                       : (static_cast<long long>(i) * (i + 1 - 2 * j)) / 2;
                GaussianRational coeff = q.pow(texp) * qbinom(j, i, q);
                if (!raise && (i & 1)) coeff = -coeff;
                ZSeries numf = poch_inf_series(-q.pow(2 * i + 2 * m + 1) * w2, 2, q2, N);
                ZSeries denf = poch_inf_series(q.pow(2 * i + 2 * m) * w2, 2, q2, N, true);
                sum += coeff * (numf * denf);
            }
            return sum.shifted(raise ? j : -j);
        }
        case LinForm::Eta22RaiseJ: {
            ZSeries out(N);
            if (j % 2 != 0) return out;
            GaussianRational q4 = q.pow(4);
            GaussianRational w2 = w * w;
            GaussianRational pref = qpoch_finite(q * q, q4, j / 2);
            ZSeries numf = poch_inf_series(q.pow(2 * j + 2 * m + 2) * w2, 2, q4, N);
            ZSeries denf = poch_inf_series(q.pow(2 * m) * w2, 2, q4, N, true);
            return (pref * (numf * denf)).shifted(j);
        }
    }
    throw std::logic_error("closed_form_oracle: unknown form");
}

namespace {

OpWord one_letter(FockBase base, OpLetter l) {
    OpWord w;
    w.base = base;
    w.letters = {l};
    return w;
}

GradedVector scaled_k(const GradedVector& v, const GaussianRational& scale, int kpow,
                      const GaussianRational& q) {
    // (scale * k^kpow) |v>
    GradedVector out;
    out.base = v.base;
    for (const auto& [level, c] : v.entries)
        out.add(level, c * scale * q.pow(static_cast<long long>(kpow) * level));
    return out;
}

GradedVector sub(const GradedVector& a, const GradedVector& b) {
    GradedVector out = a;
    for (const auto& [level, c] : b.entries) out.add(level, -c);
    return out;
}

bool equal_to_level(const GradedVector& a, const GradedVector& b, int M) {
    for (int l = 0; l <= M; ++l)
        if (a.at(l) != b.at(l)) return false;
    return true;
}

int first_mismatch(const GradedVector& a, const GradedVector& b, int M) {
    for (int l = 0; l <= M; ++l)
        if (a.at(l) != b.at(l)) return l;
    return -1;
}

} // namespace

std::string check_boundary_chars(const GaussianRational& q, int M) {
    int top = M + 4; // slack so level-M components are exact after one letter
    auto eta1 = boundary_ket(BoundaryVector::eta(1), top, q);
    auto eta2 = boundary_ket(BoundaryVector::eta(2), top, q);
    OpWord raise = one_letter(FockBase::Fq, OpLetter::raise());
    OpWord lower = one_letter(FockBase::Fq, OpLetter::lower());

    // a+ |eta_1> = (1 - k) |eta_1>,  a- |eta_1> = (1 + q k) |eta_1>
    {
        auto lhs = apply(raise, eta1, q);
        auto rhs = sub(eta1, scaled_k(eta1, GaussianRational(1), 1, q));
        if (!equal_to_level(lhs, rhs, M)) {
            std::ostringstream os;
            os << "ket a+ characterization of eta_1 fails at level " << first_mismatch(lhs, rhs, M);
            return os.str();
        }
    }
    {
        auto lhs = apply(lower, eta1, q);
        GradedVector rhs = eta1;
        for (const auto& [level, c] : scaled_k(eta1, q, 1, q).entries) rhs.add(level, c);
        if (!equal_to_level(lhs, rhs, M)) {
            std::ostringstream os;
            os << "ket a- characterization of eta_1 fails at level " << first_mismatch(lhs, rhs, M);
            return os.str();
        }
    }
    // <eta_1| a+ = <eta_1| (1 + q k),  <eta_1| a- = <eta_1| (1 - k)
    {
        auto lhs = apply_bra(raise, eta1, q);
        GradedVector rhs = eta1;
        for (const auto& [level, c] : scaled_k(eta1, q, 1, q).entries) rhs.add(level, c);
        if (!equal_to_level(lhs, rhs, M)) {
            std::ostringstream os;
            os << "bra a+ characterization of eta_1 fails at level " << first_mismatch(lhs, rhs, M);
            return os.str();
        }
    }
    {
        auto lhs = apply_bra(lower, eta1, q);
        auto rhs = sub(eta1, scaled_k(eta1, GaussianRational(1), 1, q));
        if (!equal_to_level(lhs, rhs, M)) {
            std::ostringstream os;
            os << "bra a- characterization of eta_1 fails at level " << first_mismatch(lhs, rhs, M);
            return os.str();
        }
    }
    // a+ |eta_2> = a- |eta_2> and the bra mirror
    {
        auto lhs = apply(raise, eta2, q);
        auto rhs = apply(lower, eta2, q);
        if (!equal_to_level(lhs, rhs, M)) {
            std::ostringstream os;
            os << "ket characterization of eta_2 fails at level " << first_mismatch(lhs, rhs, M);
            return os.str();
        }
    }
    {
        auto lhs = apply_bra(raise, eta2, q);
        auto rhs = apply_bra(lower, eta2, q);
        if (!equal_to_level(lhs, rhs, M)) {
            std::ostringstream os;
            os << "bra characterization of eta_2 fails at level " << first_mismatch(lhs, rhs, M);
            return os.str();
        }
    }
    // chi_r = eta_r with q -> q^2, componentwise
    for (int r : {1, 2}) {
        GaussianRational q2 = q * q;
        for (int l = 0; l <= M; ++l) {
            auto chi = boundary_coefficient(BoundaryVector::chi(r), l, q);
            auto eta_sub = boundary_coefficient(BoundaryVector::eta(r), l, q2);
            if (chi != eta_sub) {
                std::ostringstream os;
                os << "chi_" << r << " vs eta_" << r << "(q->q^2) mismatch at level " << l;
                return os.str();
            }
        }
    }
    return {};
}

} // namespace okmat
