#include "doctest.h"

#include "okmat/ratrec.hpp"
#include "okmat/rng.hpp"

using namespace okmat;

namespace {

Poly random_poly(Rng& rng, int deg) {
    std::vector<GaussianRational> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = GaussianRational(rng.rat().re, rng.rat().re);
    if (c.back().is_zero()) c.back() = GaussianRational(1);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("geometric series reconstructs to 1/(1-z)") {
    int N = 12;
    ZSeries s(N);
    for (int d = 0; d <= N; ++d) s.coeffs[static_cast<size_t>(d)] = GaussianRational(1);
    RationalFn f = reconstruct(s, DegreeBound{0, 1});
    CHECK(f.num == Poly::constant(GaussianRational(-1))); // monic denominator z - 1
    CHECK(f.den.degree() == 1);
    CHECK(eval_at(f, gr_from_long(1, 2)) == GaussianRational(2));
}

TEST_CASE("random rational functions round trip") {
    Rng rng(20240518);
    for (int trial = 0; trial < 100; ++trial) {
        int dn = rng.uniform(0, 8), dd = rng.uniform(0, 8);
        Poly num = random_poly(rng, dn);
        Poly den = random_poly(rng, dd);
        if (den.constant_term().is_zero()) den = den + Poly::constant(GaussianRational(1));
        RationalFn f(num, den);
        int N = dn + dd + 9;
        ZSeries s = f.expand(N);
        RationalFn g = reconstruct(s, DegreeBound{dn, dd});
        CHECK(f == g);
        CHECK(g.expand(N) == s);
    }
}

TEST_CASE("non-rational input is rejected by the certificates") {
    // exp-like series: coefficients 1/k! are not rational of low degree
    int N = 14;
    ZSeries s(N);
    GaussianRational fact(1);
    for (int d = 0; d <= N; ++d) {
        if (d > 0) fact *= GaussianRational(d);
        s.coeffs[static_cast<size_t>(d)] = fact.inverse();
    }
    CHECK_THROWS_AS(reconstruct(s, DegreeBound{3, 3}), ReconstructionError);
}

TEST_CASE("order guard") {
    ZSeries s(5);
    CHECK_THROWS_AS(reconstruct(s, DegreeBound{4, 4}), ReconstructionError);
}

TEST_CASE("evaluation") {
    RationalFn f(Poly::monomial(GaussianRational(1), 1), Poly::constant(GaussianRational(1)));
    CHECK(eval_at(f, gr_from_long(2, 3)) == gr_from_long(2, 3));
    RationalFn one(Poly::constant(GaussianRational(1)), Poly::constant(GaussianRational(1)));
    CHECK(eval_at(one, gr_from_long(-7, 5)) == GaussianRational(1));
    // pole detection
    std::vector<GaussianRational> dc = {GaussianRational(1), GaussianRational(-1)};
    RationalFn pole(Poly::constant(GaussianRational(1)), Poly(dc));
    CHECK_THROWS_AS(eval_at(pole, GaussianRational(1)), std::domain_error);
}

TEST_CASE("escalation doubles the bound once") {
    Rng rng(5);
    Poly num = random_poly(rng, 4);
    Poly den = random_poly(rng, 4);
    if (den.constant_term().is_zero()) den = den + Poly::constant(GaussianRational(1));
    RationalFn f(num, den);
    ZSeries s = f.expand(30);
    // bound too small, doubled bound fits
    RationalFn g = reconstruct_with_escalation(s, DegreeBound{2, 2});
    CHECK(f == g);
}
