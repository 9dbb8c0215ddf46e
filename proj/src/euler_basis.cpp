#include "probstirling/euler_basis.hpp"

#include "probstirling/errors.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace probstirling {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

} // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Poly Poly::constant(const Rational& c) {
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("poly: negative degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<size_t>(i)];
    return acc;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rational> d(static_cast<size_t>(degree()));
    for (int i = 1; i <= degree(); ++i)
        d[static_cast<size_t>(i - 1)] = Rational(i) * coeffs_[static_cast<size_t>(i)];
    return Poly(std::move(d));
}

Poly Poly::shifted(const Rational& c) const {
    // q(x + c) by binomial re-expansion of each monomial.
    std::vector<Rational> out(coeffs_.size());
    for (int i = 0; i <= degree(); ++i) {
        if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        Rational cpow(1);
        for (int j = i; j >= 0; --j) {
            out[static_cast<size_t>(j)] +=
                coeffs_[static_cast<size_t>(i)] * Rational(binomial(i, j)) * cpow;
            cpow *= c;
        }
    }
    return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& a) {
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out) x *= c;
    return Poly(std::move(out));
}

Poly falling_factorial_poly(int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial_poly: negative length");
    Poly p = Poly::constant(Rational(1));
    for (int i = 0; i < n; ++i)
        p = p * Poly(std::vector<Rational>{Rational(-i), Rational(1)});
    return p;
}

Poly forward_difference(const Poly& q, int r) {
    if (r < 0) throw std::invalid_argument("forward_difference: negative order");
    Poly acc;
    for (int i = 0; i <= r; ++i) {
        const Poly term = Rational(binomial(r, i)) * q.shifted(Rational(i));
        acc = (r - i) % 2 ? acc - term : acc + term;
    }
    return acc;
}

Poly euler_poly(const RVSpec& rv, int n, const Rational& lambda) {
    if (n < 0) throw std::invalid_argument("euler_poly: negative degree");
    const EgfSeries m = degen_mgf_series(rv, lambda, n);
    const EgfSeries bias = Rational(2) * recip(m + Rational(1)); // 2/(M+1)
    const EgfSeries fbar = log1p(m - Rational(1));               // log M
    // Coefficient of x^k is the t^n coefficient of bias * fbar^k / k!.
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1);
    EgfSeries p = bias;
    Rational kfact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            p = p * fbar;
            kfact *= Rational(k);
        }
        coeffs[static_cast<size_t>(k)] = p[n] / kfact;
    }
    return Poly(std::move(coeffs));
}

std::vector<Rational> expand_in_euler_basis(const RVSpec& rv, const Poly& q,
                                            const Rational& lambda,
                                            EulerExpandFormula formula) {
    if (mean(rv).is_zero())
        throw PreconditionError("expand_in_euler_basis: first-kind numbers need E[Y] != 0, but " +
                                to_string(rv) + " has zero mean");
    const int n = q.is_zero() ? 0 : q.degree();
    const Triangle t1 = lambda.is_zero() ? s1y_triangle(rv, n)
                                         : s1y_degen_triangle(rv, lambda, n);
    std::vector<Rational> a(static_cast<size_t>(n) + 1);

    switch (formula) {
    case EulerExpandFormula::ForwardDifference: {
        // a_r = 1/2 sum_j S1(j,r) (D^j q(1) + D^j q(0)) / j!
        std::vector<Rational> dsum(static_cast<size_t>(n) + 1);
        Poly d = q;
        Rational jfact(1);
        for (int j = 0; j <= n; ++j) {
            if (j > 0) {
                d = forward_difference(d);
                jfact *= Rational(j);
            }
            dsum[static_cast<size_t>(j)] =
                (d.eval(Rational(1)) + d.eval(Rational(0))) / jfact;
        }
        for (int r = 0; r <= n; ++r) {
            Rational acc;
            for (int j = r; j <= n; ++j) acc += t1.at(j, r) * dsum[static_cast<size_t>(j)];
            a[static_cast<size_t>(r)] = acc / Rational(2);
        }
        break;
    }
    case EulerExpandFormula::PointEvaluation: {
        std::vector<Rational> qsum(static_cast<size_t>(n) + 2);
        for (int i = 0; i <= n + 1; ++i)
            qsum[static_cast<size_t>(i)] = q.eval(Rational(i + 1)) + q.eval(Rational(i));
        for (int r = 0; r <= n; ++r) {
            Rational acc;
            for (int j = r; j <= n; ++j)
                for (int i = 0; i <= j; ++i) {
                    Rational term = Rational(binomial(j, i), factorial(j)) * t1.at(j, r) *
                                    qsum[static_cast<size_t>(i)];
                    if ((j - i) % 2) acc -= term;
                    else acc += term;
                }
            a[static_cast<size_t>(r)] = acc / Rational(2);
        }
        break;
    }
    case EulerExpandFormula::Derivative: {
        std::vector<Rational> dsum(static_cast<size_t>(n) + 1);
        Poly d = q;
        Rational lfact(1);
        for (int l = 0; l <= n; ++l) {
            if (l > 0) {
                d = d.derivative();
                lfact *= Rational(l);
            }
            dsum[static_cast<size_t>(l)] =
                (d.eval(Rational(1)) + d.eval(Rational(0))) / lfact;
        }
        for (int r = 0; r <= n; ++r) {
            Rational acc;
            for (int j = r; j <= n; ++j)
                for (int l = j; l <= n; ++l)
                    acc += t1.at(j, r) * stirling2(l, j) * dsum[static_cast<size_t>(l)];
            a[static_cast<size_t>(r)] = acc / Rational(2);
        }
        break;
    }
    }
    return a;
}

VerifyReport verify_euler_addition(const RVSpec& rv, int n, const Rational& lambda) {
    const Poly en = euler_poly(rv, n, lambda);
    const Poly lhs = en.shifted(Rational(1)) + en;
    const Triangle t2 = lambda.is_zero() ? s2y_triangle(rv, n)
                                         : s2y_degen_triangle(rv, lambda, n);
    Poly rhs;
    for (int k = 0; k <= n; ++k)
        rhs = rhs + t2.at(n, k) * falling_factorial_poly(k);
    rhs = Rational(2) * rhs;
    if (lhs == rhs) return {};
    std::ostringstream os;
    os << to_string(rv) << ": Euler addition identity fails at n=" << n << ": " << lhs
       << " != " << rhs;
    return {false, os.str()};
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    os << "[";
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) os << ", ";
        os << p.coeff(i);
    }
    return os << "]";
}

} // namespace probstirling
