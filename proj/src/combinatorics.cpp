#include "probstirling/combinatorics.hpp"

#include "probstirling/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace probstirling {

namespace {

EgfSeries series_power(const EgfSeries& base, int k) {
    EgfSeries p = EgfSeries::constant(Rational(1), base.order());
    for (int i = 0; i < k; ++i) p = p * base;
    return p;
}

// j^n as an Integer with 0^0 = 1.
Integer int_pow(int j, int n) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
    return r;
}

} // namespace

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational falling_factorial(const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: negative length");
    Rational p(1);
    for (int i = 0; i < n; ++i) p *= x - Rational(i);
    return p;
}

Rational degen_falling_factorial(const Rational& x, int n, const Rational& lambda) {
    if (n < 0) throw std::invalid_argument("degen_falling_factorial: negative length");
    Rational p(1);
    for (int i = 0; i < n; ++i) p *= x - Rational(i) * lambda;
    return p;
}

Rational stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    Integer acc(0);
    for (int j = 0; j <= k; ++j) {
        Integer term = binomial(k, j) * int_pow(j, n);
        if ((k - j) % 2) acc -= term;
        else acc += term;
    }
    return Rational(acc, factorial(k));
}

Rational stirling1(int n, int k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    // Expand x(x-1)...(x-n+1); c[j] is the x^j coefficient.
    std::vector<Integer> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j >= 0; --j) {
            Integer v = j > 0 ? c[j - 1] : Integer(0);
            c[j] = v - i * c[j];
        }
    return Rational(c[k]);
}

Rational degen_stirling2(int n, int k, const Rational& lambda) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    Rational acc;
    for (int j = 0; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * degen_falling_factorial(Rational(j), n, lambda);
        if ((k - j) % 2) acc -= term;
        else acc += term;
    }
    return acc / Rational(factorial(k));
}

Rational degen_stirling1(int n, int k, const Rational& lambda) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    if (n == 0) return Rational(1);
    const EgfSeries lg = degen_log_series(lambda, n);
    return series_power(lg, k)[n] / Rational(factorial(k));
}

EgfSeries degen_exp_series(const Rational& x, const Rational& lambda, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) c[n] = degen_falling_factorial(x, n, lambda);
    return EgfSeries(order, std::move(c));
}

EgfSeries degen_log_series(const Rational& lambda, int order) {
    if (lambda.is_zero()) {
        // Mercator series in EGF form: n-th coefficient (-1)^(n-1) (n-1)!.
        std::vector<Rational> c(static_cast<size_t>(order) + 1);
        Rational f(1);
        for (int n = 1; n <= order; ++n) {
            c[n] = (n % 2) ? f : -f;
            f *= Rational(n);
        }
        return EgfSeries(order, std::move(c));
    }
    if (order == 0) return EgfSeries(0);
    const EgfSeries t = EgfSeries::identity(order);
    return Rational(1) / lambda * (pow1p(t, lambda) - Rational(1));
}

namespace {

Rational frobenius_euler_impl(int n, int r, const Rational& u, const EgfSeries& expo) {
    if (r == 0) return n == 0 ? Rational(1) : Rational(0);
    const EgfSeries denom = expo - u;
    const EgfSeries unit = (Rational(1) - u) * recip(denom);
    return series_power(unit, r)[n];
}

} // namespace

Rational frobenius_euler(int n, int r, const Rational& u) {
    if (n < 0 || r < 0) throw std::invalid_argument("frobenius_euler: negative index");
    if (u == Rational(1)) throw PreconditionError("frobenius_euler: u = 1 is excluded");
    std::vector<Rational> ones(static_cast<size_t>(n) + 1, Rational(1));
    return frobenius_euler_impl(n, r, u, EgfSeries(n, std::move(ones)));
}

Rational degen_frobenius_euler(int n, int r, const Rational& u, const Rational& lambda) {
    if (n < 0 || r < 0) throw std::invalid_argument("degen_frobenius_euler: negative index");
    if (u == Rational(1)) throw PreconditionError("degen_frobenius_euler: u = 1 is excluded");
    return frobenius_euler_impl(n, r, u, degen_exp_series(Rational(1), lambda, n));
}

Triangle::Triangle(int max_n) {
    if (max_n < 0) throw std::invalid_argument("triangle: negative size");
    rows_.resize(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) rows_[n].resize(static_cast<size_t>(n) + 1);
}

Rational& Triangle::at(int n, int k) {
    if (n < 0 || n > max_n() || k < 0 || k > n)
        throw std::out_of_range("triangle: index outside 0 <= k <= n <= max_n");
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const Rational& Triangle::at(int n, int k) const {
    if (n < 0 || n > max_n() || k < 0 || k > n)
        throw std::out_of_range("triangle: index outside 0 <= k <= n <= max_n");
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Rational Triangle::value(int n, int k) const {
    if (k < 0 || k > n) return Rational(0);
    return at(n, k);
}

std::ostream& operator<<(std::ostream& os, const Triangle& t) {
    for (int n = 0; n <= t.max_n(); ++n) {
        for (int k = 0; k <= n; ++k) {
            if (k) os << " ";
            os << t.at(n, k);
        }
        os << "\n";
    }
    return os;
}

} // namespace probstirling
