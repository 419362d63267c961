#include "doctest.h"

#include "okmat/fock.hpp"
#include "okmat/qseries.hpp"
#include "okmat/rng.hpp"

using namespace okmat;

namespace {

GradedVector basis_ket(FockBase base, int level) {
    GradedVector v;
    v.base = base;
    v.add(level, GaussianRational(1));
    return v;
}

OpWord word_of(FockBase base, std::vector<OpLetter> ls) {
    OpWord w;
    w.base = base;
    w.letters = std::move(ls);
    return w;
}

} // namespace

TEST_CASE("basic ket actions") {
    GaussianRational q = gr_from_long(1, 2);
    auto vac = basis_ket(FockBase::Fq, 0);
    CHECK(apply(word_of(FockBase::Fq, {OpLetter::lower()}), vac, q).entries.empty());
    auto v3 = apply(word_of(FockBase::Fq, {OpLetter::raise()}), basis_ket(FockBase::Fq, 2), q);
    CHECK(v3.at(3) == GaussianRational(1));
    // a- a+ - a+ a- on |1>: (1 - q^4) - (1 - q^2) q^0 ... check against the
    // commutation picture directly
    auto lhs = apply(word_of(FockBase::Fq, {OpLetter::lower(), OpLetter::raise()}),
                     basis_ket(FockBase::Fq, 1), q);
    auto rhs = apply(word_of(FockBase::Fq, {OpLetter::raise(), OpLetter::lower()}),
                     basis_ket(FockBase::Fq, 1), q);
    CHECK(lhs.at(1) - rhs.at(1) == q.pow(2) * (GaussianRational(1) - q * q));
}

TEST_CASE("q-Boson relations as operator identities to level 30") {
    Rng rng(11);
    GaussianRational q = rng.q_value();
    for (FockBase base : {FockBase::Fq, FockBase::Fq2}) {
        int step = base == FockBase::Fq ? 1 : 2; // k a+- = q^{+-1} a+- k scaled on F_{q^2}
        for (int m = 0; m <= 30; ++m) {
            auto v = basis_ket(base, m);
            // k a+ = q^{step} a+ k
            auto l1 = apply(word_of(base, {OpLetter::kpow(1), OpLetter::raise()}), v, q);
            auto r1 = apply(word_of(base, {OpLetter::raise(), OpLetter::kpow(1)}), v, q);
            CHECK(l1.at(m + 1) == q.pow(step) * r1.at(m + 1));
            // k a- = q^{-step} a- k
            auto l2 = apply(word_of(base, {OpLetter::kpow(1), OpLetter::lower()}), v, q);
            auto r2 = apply(word_of(base, {OpLetter::lower(), OpLetter::kpow(1)}), v, q);
            if (m > 0) CHECK(l2.at(m - 1) == q.pow(-step) * r2.at(m - 1));
            // a+- a-+ = 1 - q^{(1 -+ 1) step} k^2
            auto pm = apply(word_of(base, {OpLetter::raise(), OpLetter::lower()}), v, q);
            GaussianRational expect_pm =
                GaussianRational(1) - q.pow(2 * step) * q.pow(2 * step * m); // q^{1-(-1)} -> 2 step
            CHECK(pm.at(m) == expect_pm);
            auto mp = apply(word_of(base, {OpLetter::lower(), OpLetter::raise()}), v, q);
            GaussianRational expect_mp = GaussianRational(1) - q.pow(2 * step * m); // q^0 k^2
            CHECK(mp.at(m) == expect_mp);
        }
    }
}

TEST_CASE("bra/ket adjointness through the pairing") {
    Rng rng(13);
    GaussianRational q = rng.q_value();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<OpLetter> ls;
        int len = rng.uniform(1, 5);
        for (int i = 0; i < len; ++i) {
            int pick = rng.uniform(0, 2);
            if (pick == 0) ls.push_back(OpLetter::raise());
            if (pick == 1) ls.push_back(OpLetter::lower());
            if (pick == 2) ls.push_back(OpLetter::kpow(rng.uniform(1, 3)));
        }
        OpWord w = word_of(FockBase::Fq, ls);
        for (int m = 0; m <= 20; ++m)
            for (int mp = 0; mp <= 20; ++mp) {
                auto ket_side = apply(w, basis_ket(FockBase::Fq, mp), q);
                auto bra_side = apply_bra(w, basis_ket(FockBase::Fq, m), q);
                GaussianRational a = ket_side.at(m) * pairing_weight(FockBase::Fq, m, q);
                GaussianRational b = bra_side.at(mp) * pairing_weight(FockBase::Fq, mp, q);
                CHECK(a == b);
            }
    }
}

TEST_CASE("trace series") {
    GaussianRational q = gr_from_long(1, 3);
    int N = 10;
    SUBCASE("z^h k^m matches the geometric closed form") {
        for (int m = 0; m <= 3; ++m) {
            ZSeries t = trace_series(word_of(FockBase::Fq, {OpLetter::zmark(), OpLetter::kpow(m)}), q, N);
            CHECK(t == closed_form_oracle(LinForm::TraceKm, 0, m, GaussianRational(1), q, N));
        }
    }
    SUBCASE("level-shifting words have zero trace") {
        ZSeries t = trace_series(word_of(FockBase::Fq, {OpLetter::zmark(), OpLetter::raise()}), q, N);
        CHECK(t.is_zero());
    }
    SUBCASE("z^h a+ a- sums z^m (1 - q^{2m})") {
        ZSeries t = trace_series(
            word_of(FockBase::Fq, {OpLetter::zmark(), OpLetter::raise(), OpLetter::lower()}),
            gr_from_long(1, 2), 4);
        for (int m = 0; m <= 4; ++m)
            CHECK(t.at(m) == GaussianRational(1) - gr_from_long(1, 2).pow(2 * m));
    }
}

TEST_CASE("boundary vector characterizations to level 24") {
    Rng rng(17);
    for (int trial = 0; trial < 3; ++trial) {
        GaussianRational q = rng.q_value();
        CHECK(check_boundary_chars(q, 24).empty());
    }
}

TEST_CASE("braket against the closed forms, 25+ draws per shape") {
    Rng rng(20240519);
    int draws = 25;
    for (int trial = 0; trial < draws; ++trial) {
        GaussianRational q = rng.q_value();
        GaussianRational w = rng.rat();
        int j = rng.uniform(0, 3), m = rng.uniform(0, 3);
        int N = 14;

        SUBCASE("") {} // keep doctest quiet about empty case names
        {
            ZSeries direct = braket_series(BoundaryVector::eta(1), lin_word(true, j, m, w),
                                           BoundaryVector::eta(1), q, N);
            CHECK(direct == closed_form_oracle(LinForm::Eta11RaiseJ, j, m, w, q, N));
        }
        {
            ZSeries direct = braket_series(BoundaryVector::eta(1), lin_word(false, j, m, w),
                                           BoundaryVector::eta(2), q, N);
            CHECK(direct == closed_form_oracle(LinForm::Eta12LowerJ, j, m, w, q, N));
        }
        {
            ZSeries direct = braket_series(BoundaryVector::eta(1), lin_word(true, j, m, w),
                                           BoundaryVector::eta(2), q, N);
            CHECK(direct == closed_form_oracle(LinForm::Eta12RaiseJ, j, m, w, q, N));
        }
        {
            ZSeries direct = braket_series(BoundaryVector::eta(2), lin_word(true, j, m, w),
                                           BoundaryVector::eta(2), q, N);
            CHECK(direct == closed_form_oracle(LinForm::Eta22RaiseJ, j, m, w, q, N));
        }
    }
}

TEST_CASE("transpose identity for boundary contractions") {
    // <eta_k| z^h (a+-)^j k^m w^h |eta_k'> = <eta_k'| w^h k^m (a-+)^j z^h |eta_k>
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        GaussianRational q = rng.q_value();
        GaussianRational w = rng.rat();
        int j = rng.uniform(0, 3), m = rng.uniform(0, 3);
        int k = rng.uniform(1, 2), kp = rng.uniform(1, 2);
        bool up = rng.uniform(0, 1) == 1;
        int N = 12;
        ZSeries lhs =
            braket_series(BoundaryVector::eta(k), lin_word(up, j, m, w), BoundaryVector::eta(kp), q, N);
        OpWord rev;
        rev.base = FockBase::Fq;
        rev.letters.push_back(OpLetter::wpow(w));
        if (m != 0) rev.letters.push_back(OpLetter::kpow(m));
        for (int t = 0; t < j; ++t) rev.letters.push_back(up ? OpLetter::lower() : OpLetter::raise());
        rev.letters.push_back(OpLetter::zmark());
        ZSeries rhs = braket_series(BoundaryVector::eta(kp), rev, BoundaryVector::eta(k), q, N);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("moving the z^h marker across a letter shifts the series") {
    // z^h X = z^{shift(X)} X z^h for a single letter X
    GaussianRational q = gr_from_long(2, 5);
    int N = 10;
    OpWord left = word_of(FockBase::Fq, {OpLetter::zmark(), OpLetter::raise()});
    OpWord right = word_of(FockBase::Fq, {OpLetter::raise(), OpLetter::zmark()});
    ZSeries a = braket_series(BoundaryVector::eta(1), left, BoundaryVector::eta(1), q, N);
    ZSeries b = braket_series(BoundaryVector::eta(1), right, BoundaryVector::eta(1), q, N);
    CHECK(a == b.shifted(1));
}

TEST_CASE("graded vector debug dump") {
    GradedVector v;
    v.base = FockBase::Fq;
    v.add(0, gr_from_long(1, 2));
    v.add(3, GaussianRational::unit_i());
    CHECK(v.dump_json() == "{\"0\":\"1/2\",\"3\":\"1*i\"}");
}
