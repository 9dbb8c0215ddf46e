#pragma once

#include "probstirling/rational.hpp"

#include <iosfwd>
#include <vector>

namespace probstirling {

// Truncated formal power series in the exponential-generating-function
// convention: coeff(n) stores n! * [t^n] f(t), for 0 <= n <= order.
// Values are immutable after construction and every operation is a pure
// function, so shared instances are safe to use concurrently.
class EgfSeries {
public:
    explicit EgfSeries(int order);
    EgfSeries(int order, std::vector<Rational> coeffs);

    static EgfSeries constant(const Rational& c, int order);
    static EgfSeries identity(int order); // f(t) = t

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const;
    const Rational& operator[](int n) const { return coeff(n); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_delta() const; // zero constant term, nonzero linear term

    friend bool operator==(const EgfSeries& a, const EgfSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

EgfSeries operator+(const EgfSeries& a, const EgfSeries& b);
EgfSeries operator-(const EgfSeries& a, const EgfSeries& b);
EgfSeries operator-(const EgfSeries& a);
EgfSeries operator*(const EgfSeries& a, const EgfSeries& b); // EGF Cauchy product
EgfSeries operator*(const Rational& c, const EgfSeries& a);

// Adjust only the constant term.
EgfSeries operator+(const EgfSeries& a, const Rational& c);
EgfSeries operator-(const EgfSeries& a, const Rational& c);

// Multiplicative inverse; the constant term must be nonzero.
EgfSeries recip(const EgfSeries& a);

// exp(a) for a with zero constant term (exactness would otherwise need a
// transcendental scalar).
EgfSeries exp(const EgfSeries& a);

// log(1 + a) for a with zero constant term.
EgfSeries log1p(const EgfSeries& a);

// (1 + a)^e for rational e and a with zero constant term, via the binomial
// series with falling-factorial coefficients.
EgfSeries pow1p(const EgfSeries& a, const Rational& e);

// f(g(t)); g must have zero constant term and the same order as f.
EgfSeries compose(const EgfSeries& f, const EgfSeries& g);

// Compositional inverse of a delta series f (f(0) = 0, f'(0) != 0), solved
// coefficient by coefficient from f(g(t)) = t.
EgfSeries reversion(const EgfSeries& f);

// f(t)/t for f with zero constant term; drops the order by one.
EgfSeries divide_by_t(const EgfSeries& f);

// Prefix of a series; order must not exceed f.order().
EgfSeries truncated(const EgfSeries& f, int order);

std::ostream& operator<<(std::ostream& os, const EgfSeries& s);

} // namespace probstirling
