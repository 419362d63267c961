#include "doctest.h"

#include "okmat/gaussian.hpp"
#include "okmat/qseries.hpp"
#include "okmat/rng.hpp"
#include "okmat/series.hpp"

using namespace okmat;

TEST_CASE("gaussian rational field axioms on random values") {
    Rng rng(20240517);
    for (int trial = 0; trial < 50; ++trial) {
        GaussianRational a(rng.rat().re, rng.rat().re);
        GaussianRational b(rng.rat().re, rng.rat().re);
        GaussianRational c(rng.rat().re, rng.rat().re);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    GaussianRational i = GaussianRational::unit_i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.pow(-1) == -i);
}

TEST_CASE("string round trip") {
    const char* forms[] = {"1/2", "-3", "1/2+1/3*i", "-1/2-2/7*i", "i", "-i", "5*i"};
    for (const char* s : forms) {
        GaussianRational v = GaussianRational::parse(s);
        CHECK(GaussianRational::parse(v.str()) == v);
    }
    CHECK(GaussianRational::parse("1/2+1/3*i") ==
          GaussianRational(make_rat(1, 2), make_rat(1, 3)));
}

TEST_CASE("finite q-Pochhammer") {
    GaussianRational q = gr_from_long(1, 2);
    CHECK(qpoch_finite(gr_from_long(7, 3), q, 0) == GaussianRational(1));
    CHECK(qpoch_finite(GaussianRational(1), q, 3).is_zero());
    // (q;q)_2 at q = 1/2: (1 - 1/2)(1 - 1/4) = 3/8
    CHECK(qpoch_finite(q, q, 2) == gr_from_long(3, 8));

    SUBCASE("recurrence (a;Q)_{m+1} = (a;Q)_m (1 - a Q^m)") {
        Rng rng(7);
        GaussianRational a = rng.rat(), Q = rng.rat();
        for (int m = 0; m <= 30; ++m) {
            GaussianRational lhs = qpoch_finite(a, Q, m + 1);
            GaussianRational rhs = qpoch_finite(a, Q, m) * (GaussianRational(1) - a * Q.pow(m));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("q-binomial") {
    GaussianRational q = gr_from_long(1, 2);
    CHECK(qbinom(5, 0, q) == GaussianRational(1));
    CHECK(qbinom(5, 5, q) == GaussianRational(1));
    CHECK(qbinom(2, 1, q) == gr_from_long(3, 2)); // 1 + q
    CHECK_THROWS_AS(qbinom(2, 3, q), std::domain_error);
}

TEST_CASE("series arithmetic") {
    int N = 12;
    GaussianRational one(1);
    ZSeries a(N);
    a.coeffs[0] = one;
    a.coeffs[1] = -one; // 1 - z
    ZSeries geo(N);
    for (int d = 0; d <= N; ++d) geo.coeffs[static_cast<size_t>(d)] = one; // 1/(1-z)
    CHECK(a * geo == ZSeries::one(N));
    CHECK(a.inverse() == geo);
    CHECK(a + ZSeries(N) == a);
    CHECK((a / a) == ZSeries::one(N));
    CHECK_THROWS_AS(ZSeries(N).inverse(), std::domain_error);
}

TEST_CASE("infinite Pochhammer expansion") {
    int N = 16;
    SUBCASE("c = 0 gives the constant series") {
        CHECK(poch_inf_series(GaussianRational(), 1, gr_from_long(1, 3), N) == ZSeries::one(N));
    }
    SUBCASE("Q = 0 keeps only the first factor") {
        ZSeries s = poch_inf_series(GaussianRational(1), 1, GaussianRational(), N);
        ZSeries expect(N);
        expect.coeffs[0] = GaussianRational(1);
        expect.coeffs[1] = GaussianRational(-1);
        CHECK(s == expect);
    }
    SUBCASE("reciprocal flag inverts exactly, many draws") {
        Rng rng(99);
        for (int trial = 0; trial < 20; ++trial) {
            GaussianRational c = rng.rat();
            GaussianRational Q = rng.q_value();
            int zpow = rng.uniform(1, 2);
            ZSeries f = poch_inf_series(c, zpow, Q, N);
            ZSeries g = poch_inf_series(c, zpow, Q, N, true);
            CHECK(f * g == ZSeries::one(N));
        }
    }
}
