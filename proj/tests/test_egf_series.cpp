#include "probstirling/egf_series.hpp"

#include "probstirling/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace probstirling;
namespace pt = probstirling::testing;

namespace {

EgfSeries exp_t(int order) {
    return EgfSeries(order, std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(1)));
}

EgfSeries expm1(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(1));
    c[0] = Rational(0);
    return EgfSeries(order, std::move(c));
}

} // namespace

TEST_CASE("construction checks the coefficient count") {
    CHECK_THROWS_AS(EgfSeries(2, {Rational(1)}), std::invalid_argument);
    CHECK(EgfSeries(2) == EgfSeries::constant(Rational(0), 2));
}

TEST_CASE("product: e^t * e^t = e^{2t}") {
    const EgfSeries e = exp_t(3);
    CHECK((e * e) == EgfSeries(3, {Rational(1), Rational(2), Rational(4), Rational(8)}));
}

TEST_CASE("product: multiplying by the constant one is the identity") {
    auto gen = pt::make_gen(101);
    const EgfSeries a = pt::random_series(gen, 6);
    CHECK(a * EgfSeries::constant(Rational(1), 6) == a);
}

TEST_CASE("product: t * t carries the EGF factor 2") {
    const EgfSeries t = EgfSeries::identity(3);
    CHECK((t * t) == EgfSeries(3, {Rational(0), Rational(0), Rational(2), Rational(0)}));
}

TEST_CASE("product agrees with the ordinary-coefficient oracle") {
    auto gen = pt::make_gen(102);
    for (int i = 0; i < 20; ++i) {
        const EgfSeries a = pt::random_series(gen, 7);
        const EgfSeries b = pt::random_series(gen, 7);
        CHECK(a * b == pt::mul_oracle(a, b));
    }
    CHECK_THROWS_AS(pt::random_series(gen, 3) * pt::random_series(gen, 4),
                    std::invalid_argument);
}

TEST_CASE("recip: constants and e^t") {
    CHECK(recip(EgfSeries::constant(Rational(2), 3)) ==
          EgfSeries::constant(Rational(1, 2), 3));
    // 1/e^t = e^{-t}
    const EgfSeries r = recip(exp_t(5));
    for (int n = 0; n <= 5; ++n)
        CHECK(r[n] == (n % 2 ? Rational(-1) : Rational(1)));
}

TEST_CASE("recip is a two-sided inverse and an involution") {
    auto gen = pt::make_gen(103);
    for (int i = 0; i < 20; ++i) {
        EgfSeries a = pt::random_series(gen, 6);
        std::vector<Rational> c = a.coeffs();
        c[0] = pt::random_nonzero_rational(gen);
        a = EgfSeries(6, std::move(c));
        CHECK(a * recip(a) == EgfSeries::constant(Rational(1), 6));
        CHECK(recip(recip(a)) == a);
    }
    CHECK_THROWS_AS(recip(EgfSeries::identity(3)), PreconditionError);
}

TEST_CASE("exp: zero, t, and the Bell numbers") {
    CHECK(exp(EgfSeries(3)) == EgfSeries::constant(Rational(1), 3));
    CHECK(exp(EgfSeries::identity(4)) == exp_t(4));

    // exp(e^t - 1) enumerates set partitions.
    const EgfSeries bell = exp(expm1(4));
    for (int n = 0; n <= 4; ++n)
        CHECK(bell[n] == Rational(pt::bell_number(n)));

    CHECK_THROWS_AS(exp(EgfSeries::constant(Rational(1), 3)), PreconditionError);
}

TEST_CASE("log1p: zero, log(e^t), and the Mercator coefficients") {
    CHECK(log1p(EgfSeries(3)) == EgfSeries(3));
    CHECK(log1p(expm1(5)) == EgfSeries::identity(5));
    // log(1+t): n-th EGF coefficient (-1)^(n-1) (n-1)!
    CHECK(log1p(EgfSeries::identity(3)) ==
          EgfSeries(3, {Rational(0), Rational(1), Rational(-1), Rational(2)}));
    CHECK_THROWS_AS(log1p(EgfSeries::constant(Rational(1), 3)), PreconditionError);
}

TEST_CASE("exp and log1p invert each other on zero-constant series") {
    auto gen = pt::make_gen(104);
    for (int i = 0; i < 15; ++i) {
        EgfSeries a = pt::random_series(gen, 6);
        std::vector<Rational> c = a.coeffs();
        c[0] = Rational(0);
        a = EgfSeries(6, std::move(c));
        CHECK(log1p(exp(a) - Rational(1)) == a);
        CHECK(exp(log1p(a)) - Rational(1) == a);
    }
}

TEST_CASE("pow1p: trivial exponents and the square root of 1+t") {
    const EgfSeries t2 = EgfSeries::identity(2);
    CHECK(pow1p(t2, Rational(0)) == EgfSeries::constant(Rational(1), 2));
    CHECK(pow1p(t2, Rational(1)) == t2 + Rational(1));
    // [t^2] (1+t)^{1/2} = (1/2 choose 2) = -1/8, so the EGF entry is -1/4.
    CHECK(pow1p(t2, Rational(1, 2)) ==
          EgfSeries(2, {Rational(1), Rational(1, 2), Rational(-1, 4)}));
    CHECK_THROWS_AS(pow1p(EgfSeries::constant(Rational(1), 2), Rational(2)),
                    PreconditionError);
}

TEST_CASE("pow1p turns exponent sums into products") {
    auto gen = pt::make_gen(105);
    for (int i = 0; i < 12; ++i) {
        const EgfSeries a = pt::random_delta_series(gen, 6);
        const Rational e1 = pt::random_rational(gen);
        const Rational e2 = pt::random_rational(gen);
        CHECK(pow1p(a, e1 + e2) == pow1p(a, e1) * pow1p(a, e2));
    }
}

TEST_CASE("pow1p with integer exponent matches repeated multiplication") {
    auto gen = pt::make_gen(106);
    const EgfSeries a = pt::random_delta_series(gen, 6);
    const EgfSeries one_plus = a + Rational(1);
    CHECK(pow1p(a, Rational(3)) == one_plus * one_plus * one_plus);
}

TEST_CASE("compose: identity, log of exp, and self-composition of e^t-1") {
    auto gen = pt::make_gen(107);
    const EgfSeries f = pt::random_series(gen, 5);
    CHECK(compose(f, EgfSeries::identity(5)) == f);

    const int N = 6;
    CHECK(compose(expm1(N), log1p(EgfSeries::identity(N))) == EgfSeries::identity(N));

    // (e^{g(t)} - 1) with g = e^t - 1: ordinary substitution gives [0,1,2,5].
    const EgfSeries h = compose(expm1(3), expm1(3));
    CHECK(h == EgfSeries(3, {Rational(0), Rational(1), Rational(2), Rational(5)}));
    CHECK(h == pt::compose_oracle(expm1(3), expm1(3)));

    CHECK_THROWS_AS(compose(f, EgfSeries::constant(Rational(1), 5)), PreconditionError);
}

TEST_CASE("compose agrees with substitution of truncated polynomials") {
    auto gen = pt::make_gen(108);
    for (int i = 0; i < 12; ++i) {
        const EgfSeries f = pt::random_series(gen, 6);
        const EgfSeries g = pt::random_delta_series(gen, 6);
        CHECK(compose(f, g) == pt::compose_oracle(f, g));
    }
}

TEST_CASE("reversion: scaled identity and e^t-1") {
    const int N = 6;
    const EgfSeries scaled = Rational(5, 3) * EgfSeries::identity(N);
    CHECK(reversion(scaled) == Rational(3, 5) * EgfSeries::identity(N));

    CHECK(reversion(expm1(N)) == log1p(EgfSeries::identity(N)));

    // t/(1-t) has EGF coefficients n!; its inverse t/(1+t) alternates sign.
    std::vector<Rational> c(N + 1);
    Rational fact(1);
    for (int n = 1; n <= N; ++n) {
        fact *= Rational(n);
        c[n] = fact;
    }
    const EgfSeries geom(N, std::move(c));
    const EgfSeries inv = reversion(geom);
    fact = Rational(1);
    for (int n = 1; n <= N; ++n) {
        fact *= Rational(n);
        CHECK(inv[n] == (n % 2 ? fact : -fact));
    }

    CHECK_THROWS_AS(reversion(EgfSeries(3, {Rational(0), Rational(0), Rational(1), Rational(0)})),
                    PreconditionError);
    CHECK_THROWS_AS(reversion(EgfSeries::constant(Rational(1), 3)), PreconditionError);
}

TEST_CASE("reversion round-trips under composition") {
    auto gen = pt::make_gen(109);
    for (int i = 0; i < 10; ++i) {
        const EgfSeries f = pt::random_delta_series(gen, 7);
        const EgfSeries g = reversion(f);
        CHECK(compose(f, g) == EgfSeries::identity(7));
        CHECK(compose(g, f) == EgfSeries::identity(7));
    }
}

TEST_CASE("divide_by_t shifts coefficients with the EGF weight") {
    // t^2 has EGF coefficients [0,0,2]; t^2/t = t.
    const EgfSeries t = EgfSeries::identity(2);
    CHECK(divide_by_t(t * t) == EgfSeries::identity(1));
    CHECK_THROWS_AS(divide_by_t(EgfSeries::constant(Rational(1), 2)), PreconditionError);
}

TEST_CASE("truncated keeps a prefix") {
    auto gen = pt::make_gen(110);
    const EgfSeries a = pt::random_series(gen, 6);
    const EgfSeries b = truncated(a, 4);
    CHECK(b.order() == 4);
    for (int n = 0; n <= 4; ++n) CHECK(b[n] == a[n]);
    CHECK_THROWS_AS(truncated(a, 7), std::invalid_argument);
}
