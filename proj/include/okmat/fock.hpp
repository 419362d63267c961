// q-Boson Fock spaces F_q and F_{q^2}, operator words, boundary vectors,
// and exact z-series evaluation of traces and boundary contractions.
//
// Every word maps a basis ket |m> to a scalar multiple of a single basis
// ket, so the coefficient of z^l in any contraction is a finite exact sum:
// the z^h marker reads off the level at its position and the grading does
// the bookkeeping.  No truncation error enters coefficients <= N.

#pragma once

#include "okmat/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace okmat {

enum class FockBase { Fq, Fq2 };

enum class LetterKind {
    Raise,  // a+ / A+
    Lower,  // a- / A-
    KPow,   // k^e = q^{e h} on F_q, K^e = q^{2 e h} on F_{q^2}
    ZMark,  // z^h, the series-variable marker
    WPow,   // w^h for a fixed scalar w
};

struct OpLetter {
    LetterKind kind;
    int kpow = 1;         // exponent for KPow
    GaussianRational w;   // scalar for WPow

    static OpLetter raise() { return {LetterKind::Raise, 0, {}}; }
    static OpLetter lower() { return {LetterKind::Lower, 0, {}}; }
    static OpLetter kpow(int e) { return {LetterKind::KPow, e, {}}; }
    static OpLetter zmark() { return {LetterKind::ZMark, 0, {}}; }
    static OpLetter wpow(GaussianRational w0) { return {LetterKind::WPow, 0, std::move(w0)}; }
};

/// A word of q-Boson letters acting on one Fock space, written left to
/// right as in a bra...ket sandwich; ket application proceeds right to left.
struct OpWord {
    FockBase base = FockBase::Fq;
    std::vector<OpLetter> letters;

    int net_level_shift() const;
    int zmark_count() const;
};

/// Finitely supported vector in F_q or F_{q^2}; levels map to coefficients.
struct GradedVector {
    FockBase base = FockBase::Fq;
    std::map<int, GaussianRational> entries;

    void add(int level, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = entries.emplace(level, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
    GaussianRational at(int level) const {
        auto it = entries.find(level);
        return it == entries.end() ? GaussianRational() : it->second;
    }
    bool operator==(const GradedVector& o) const { return base == o.base && entries == o.entries; }

    std::string dump_json() const; // {"level": "coefficient", ...} debug form
};

struct BoundaryVector {
    FockBase base = FockBase::Fq; // eta_r lives in F_q, chi_r in F_{q^2}
    int r = 1;                    // 1 or 2

    static BoundaryVector eta(int r) { return {FockBase::Fq, r}; }
    static BoundaryVector chi(int r) { return {FockBase::Fq2, r}; }
};

/// Coefficient of the level-`level` basis vector in the boundary vector
/// (same for bra and ket sides): 1/(Q;Q)_{level/r} when r | level, else 0,
/// with Q = q^{r^2} on F_q and q^{2 r^2} on F_{q^2}.
GaussianRational boundary_coefficient(const BoundaryVector& b, int level, const GaussianRational& q);

GradedVector boundary_ket(const BoundaryVector& b, int max_level, const GaussianRational& q);

/// Dual pairing weight <l|l> for the base: (q^2;q^2)_l on F_q, (q^4;q^4)_l on F_{q^2}.
GaussianRational pairing_weight(FockBase base, int level, const GaussianRational& q);

/// Right action on kets.  Words here must not contain z^h markers.
GradedVector apply(const OpWord& word, const GradedVector& v, const GaussianRational& q);

/// Left action on bras (letters consumed left to right).
GradedVector apply_bra(const OpWord& word, const GradedVector& v, const GaussianRational& q);

/// Tr(word) as a z-series through degree N; the word must contain exactly
/// one z^h marker.  The trace uses raw diagonal matrix elements.
ZSeries trace_series(const OpWord& word, const GaussianRational& q, int N);

/// <bra| word |ket> as a z-series through degree N (one z^h marker; bases
/// of bra, ket and word must agree).
ZSeries braket_series(const BoundaryVector& bra, const OpWord& word, const BoundaryVector& ket,
                      const GaussianRational& q, int N);

// --- closed forms used only as independent oracles ---

enum class LinForm {
    TraceKm,       // Tr(z^h k^m)
    Eta11RaiseJ,   // <eta_1| z^h (a+)^j k^m w^h |eta_1>
    Eta12LowerJ,   // <eta_1| z^h (a-)^j k^m w^h |eta_2>
    Eta12RaiseJ,   // <eta_1| z^h (a+)^j k^m w^h |eta_2>
    Eta22RaiseJ,   // <eta_2| z^h (a+)^j k^m w^h |eta_2>
};

ZSeries closed_form_oracle(LinForm form, int j, int m, const GaussianRational& w,
                           const GaussianRational& q, int N);

/// The word z^h (a epsilon)^j k^m w^h matching the oracle shapes
/// (raise = true for a+).
OpWord lin_word(bool raise, int j, int m, const GaussianRational& w);

/// Componentwise verification of the boundary-vector characterizations on
/// levels 0..M; returns an empty string on success, else a description of
/// the first failing identity and level.
std::string check_boundary_chars(const GaussianRational& q, int M = 24);

} // namespace okmat
