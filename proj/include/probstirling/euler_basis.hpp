#pragma once

#include "probstirling/prob_stirling.hpp"
#include "probstirling/rational.hpp"
#include "probstirling/rv_models.hpp"

#include <iosfwd>
#include <vector>

namespace probstirling {

// Dense polynomial in one indeterminate over the rationals, power basis.
// Trailing zero coefficients are trimmed; the zero polynomial has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(int degree, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const; // zero outside [0, degree]
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly shifted(const Rational& c) const; // q(x + c)

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, const Poly& a);

// (x)_n as a polynomial.
Poly falling_factorial_poly(int n);

// r-fold forward difference via the alternating binomial shift sum.
Poly forward_difference(const Poly& q, int r = 1);

// Probabilistic (degenerate) Euler polynomial of degree n; lambda = 0 gives
// the plain probabilistic Euler polynomial. Materialized from the series
// 2/(M+1) * M^x by iterating powers of log M, M the (degenerate) mgf.
Poly euler_poly(const RVSpec& rv, int n, const Rational& lambda = Rational(0));

// The three equivalent coefficient formulas for expanding a polynomial in
// the probabilistic Euler basis; they must agree and are cross-checked in
// the test suites.
enum class EulerExpandFormula { ForwardDifference, PointEvaluation, Derivative };

// Coefficients a_0..a_deg(q) with q(x) = sum_r a_r E_r^Y(x), exactly.
// Requires E[Y] != 0.
std::vector<Rational> expand_in_euler_basis(
    const RVSpec& rv, const Poly& q, const Rational& lambda = Rational(0),
    EulerExpandFormula formula = EulerExpandFormula::ForwardDifference);

// Exact polynomial identity E_n^Y(x+1) + E_n^Y(x) = 2 sum_k S2^Y(n,k) (x)_k,
// compared coefficient by coefficient (degenerate version when lambda != 0).
VerifyReport verify_euler_addition(const RVSpec& rv, int n,
                                   const Rational& lambda = Rational(0));

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace probstirling
