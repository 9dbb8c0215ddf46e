#include "probstirling/euler_basis.hpp"

#include "probstirling/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace probstirling;
namespace pt = probstirling::testing;

namespace {

std::vector<RVSpec> grid() {
    return {
        parse_rv("constant:c=1"),       parse_rv("bernoulli:p=1/2"),
        parse_rv("binomial:m=3,p=1/3"), parse_rv("poisson:alpha=1"),
        parse_rv("geometric:p=1/3"),    parse_rv("exponential:alpha=2"),
        parse_rv("gamma:alpha=2,beta=3"), parse_rv("normal:mu=1,sigma2=2"),
        parse_rv("uniform:a=0,b=1"),
    };
}

Poly random_poly(std::mt19937_64& gen, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(gen);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = pt::random_rational(gen);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("poly basics") {
    const Poly q({Rational(1), Rational(0), Rational(3)}); // 1 + 3x^2
    CHECK(q.degree() == 2);
    CHECK(q.eval(Rational(2)) == Rational(13));
    CHECK(q.derivative() == Poly({Rational(0), Rational(6)}));
    CHECK(q.shifted(Rational(1)) == Poly({Rational(4), Rational(6), Rational(3)}));

    CHECK(Poly({Rational(1), Rational(0), Rational(0)}).degree() == 0); // trims
    CHECK(Poly({Rational(0)}).is_zero());
    CHECK(Poly().eval(Rational(5)) == Rational(0));
    CHECK(Poly::monomial(3) == Poly({Rational(0), Rational(0), Rational(0), Rational(1)}));

    const Poly a({Rational(1), Rational(2)});
    const Poly b({Rational(0), Rational(1), Rational(5)});
    CHECK(a * b == Poly({Rational(0), Rational(1), Rational(7), Rational(10)}));
    CHECK(a + b == Poly({Rational(1), Rational(3), Rational(5)}));
    CHECK((a - a).is_zero());
}

TEST_CASE("falling factorial polynomials") {
    CHECK(falling_factorial_poly(0) == Poly::constant(Rational(1)));
    // x(x-1)(x-2) = 2x - 3x^2 + x^3
    CHECK(falling_factorial_poly(3) ==
          Poly({Rational(0), Rational(2), Rational(-3), Rational(1)}));
    auto gen = pt::make_gen(401);
    for (int i = 0; i < 6; ++i) {
        const Rational x = pt::random_rational(gen);
        CHECK(falling_factorial_poly(5).eval(x) == falling_factorial(x, 5));
    }
}

TEST_CASE("forward differences") {
    auto gen = pt::make_gen(402);
    const Poly q = random_poly(gen, 6);
    CHECK(forward_difference(q, 0) == q);

    // Delta (x)_n = n (x)_{n-1} and Delta^r (x)_n = (n)_r (x)_{n-r}
    for (int n = 1; n <= 6; ++n) {
        CHECK(forward_difference(falling_factorial_poly(n)) ==
              Rational(n) * falling_factorial_poly(n - 1));
        for (int r = 0; r <= n; ++r)
            CHECK(forward_difference(falling_factorial_poly(n), r) ==
                  falling_factorial(Rational(n), r) * falling_factorial_poly(n - r));
    }

    // linearity and iteration
    const Poly p = random_poly(gen, 5);
    const Rational c = pt::random_rational(gen);
    CHECK(forward_difference(p + c * q) ==
          forward_difference(p) + c * forward_difference(q));
    for (int r = 1; r <= 4; ++r)
        CHECK(forward_difference(q, r) == forward_difference(forward_difference(q, r - 1)));

    // degree drops by exactly min(r, deg q)
    CHECK(forward_difference(falling_factorial_poly(4), 2).degree() == 2);
    CHECK(forward_difference(falling_factorial_poly(2), 5).is_zero());
    for (int trial = 0; trial < 8; ++trial) {
        const Poly w = random_poly(gen, 7);
        for (int r = 0; r <= 9; ++r) {
            const Poly d = forward_difference(w, r);
            if (r <= w.degree()) CHECK(d.degree() == w.degree() - r);
            else CHECK(d.is_zero());
        }
    }
}

TEST_CASE("euler polynomials: degree zero and the classical family") {
    for (const auto& rv : grid()) CHECK(euler_poly(rv, 0) == Poly::constant(Rational(1)));

    const RVSpec one = parse_rv("constant:c=1");
    CHECK(euler_poly(one, 1) == Poly({Rational(-1, 2), Rational(1)}));          // x - 1/2
    CHECK(euler_poly(one, 2) == Poly({Rational(0), Rational(-1), Rational(1)})); // x^2 - x
    CHECK(euler_poly(one, 3) ==
          Poly({Rational(1, 4), Rational(0), Rational(-3, 2), Rational(1)}));
    CHECK(euler_poly(one, 4) ==
          Poly({Rational(0), Rational(1), Rational(0), Rational(-2), Rational(1)}));
}

TEST_CASE("euler polynomials: leading coefficient is the mean to the n-th power") {
    for (const auto& rv : grid())
        for (int n = 0; n <= 5; ++n) {
            const Poly e = euler_poly(rv, n);
            CHECK(e.coeff(n) == mean(rv).pow(n));
        }
}

TEST_CASE("expansion in the euler basis: catalog examples") {
    const RVSpec one = parse_rv("constant:c=1");
    // x^2 = E2 + E1 + (1/2) E0
    const auto a = expand_in_euler_basis(one, Poly::monomial(2));
    CHECK(a == std::vector<Rational>{Rational(1, 2), Rational(1), Rational(1)});

    // constants expand onto E0 alone
    const auto c = expand_in_euler_basis(parse_rv("poisson:alpha=1"), Poly::constant(Rational(7)));
    CHECK(c == std::vector<Rational>{Rational(7)});

    // a basis element expands to the matching unit vector
    const RVSpec geo = parse_rv("geometric:p=1/3");
    const auto unit = expand_in_euler_basis(geo, euler_poly(geo, 3));
    CHECK(unit == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1)});

    CHECK_THROWS_AS(expand_in_euler_basis(parse_rv("uniform:a=-1,b=1"), Poly::monomial(2)),
                    PreconditionError);
}

TEST_CASE("expansion round-trips and the three formulas agree") {
    auto gen = pt::make_gen(403);
    for (const auto& rv : grid())
        for (const Rational& lam : {Rational(0), Rational(1, 2)}) {
            std::vector<Poly> basis;
            for (int r = 0; r <= 6; ++r) basis.push_back(euler_poly(rv, r, lam));
            for (int trial = 0; trial < 5; ++trial) {
                const Poly q = random_poly(gen, 6);
                const auto a = expand_in_euler_basis(rv, q, lam);
                CHECK(a == expand_in_euler_basis(rv, q, lam, EulerExpandFormula::PointEvaluation));
                CHECK(a == expand_in_euler_basis(rv, q, lam, EulerExpandFormula::Derivative));
                Poly back;
                for (size_t r = 0; r < a.size(); ++r) back = back + a[r] * basis[r];
                CHECK(back == q);
            }
        }
}

TEST_CASE("euler addition identity") {
    CHECK(verify_euler_addition(parse_rv("poisson:alpha=1"), 0).ok);
    for (int n = 0; n <= 6; ++n) {
        CHECK(verify_euler_addition(parse_rv("constant:c=1"), n).ok);
        CHECK(verify_euler_addition(parse_rv("geometric:p=1/3"), n).ok);
        CHECK(verify_euler_addition(parse_rv("geometric:p=1/3"), n, Rational(1, 2)).ok);
        CHECK(verify_euler_addition(parse_rv("uniform:a=0,b=1"), n, Rational(1, 2)).ok);
    }
}
