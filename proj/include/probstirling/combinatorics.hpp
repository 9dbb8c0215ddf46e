#pragma once

#include "probstirling/egf_series.hpp"
#include "probstirling/rational.hpp"

#include <iosfwd>
#include <vector>

namespace probstirling {

Integer factorial(int n);
Integer binomial(int n, int k); // 0 outside 0 <= k <= n

// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, int n);

// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda); x^n at lambda = 0 and
// (x)_n at lambda = 1.
Rational degen_falling_factorial(const Rational& x, int n, const Rational& lambda);

// Stirling numbers of the second kind, via the alternating binomial sum.
Rational stirling2(int n, int k);

// Signed Stirling numbers of the first kind, by expanding (x)_n in the
// power basis.
Rational stirling1(int n, int k);

// Degenerate Stirling numbers; both reduce to the classical ones at
// lambda = 0. The first kind is read off the series (log_lambda(1+t))^k/k!.
Rational degen_stirling2(int n, int k, const Rational& lambda);
Rational degen_stirling1(int n, int k, const Rational& lambda);

// (1 + lambda t)^{x/lambda}, coefficients (x)_{n,lambda}; e^{xt} at lambda = 0.
EgfSeries degen_exp_series(const Rational& x, const Rational& lambda, int order);

// log_lambda(1+t) = ((1+t)^lambda - 1)/lambda; log(1+t) at lambda = 0.
EgfSeries degen_log_series(const Rational& lambda, int order);

// Frobenius-Euler numbers of order r: coefficients of ((1-u)/(e^t-u))^r.
// Requires u != 1. The degenerate version replaces e^t by e_lambda(t).
Rational frobenius_euler(int n, int r, const Rational& u);
Rational degen_frobenius_euler(int n, int r, const Rational& u, const Rational& lambda);

// Lower-triangular table of Rationals indexed by (n, k), 0 <= k <= n <= max_n.
// value() reads entries outside the triangle as zero.
class Triangle {
public:
    explicit Triangle(int max_n);

    int max_n() const { return static_cast<int>(rows_.size()) - 1; }
    Rational& at(int n, int k);
    const Rational& at(int n, int k) const;
    Rational value(int n, int k) const;

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::vector<Rational>> rows_;
};

std::ostream& operator<<(std::ostream& os, const Triangle& t);

} // namespace probstirling
