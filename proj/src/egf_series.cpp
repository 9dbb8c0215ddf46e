#include "probstirling/egf_series.hpp"

#include "probstirling/errors.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace probstirling {

namespace {

Integer binom(int n, int k) {
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void require_same_order(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("egf: order mismatch (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
}

void require_zero_constant(const EgfSeries& a, const char* op) {
    if (!a.coeff(0).is_zero())
        throw PreconditionError(std::string(op) + ": series must have zero constant term");
}

} // namespace

EgfSeries::EgfSeries(int order) {
    if (order < 0) throw std::invalid_argument("egf: negative order");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

EgfSeries::EgfSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (order < 0 || coeffs_.size() != static_cast<size_t>(order) + 1)
        throw std::invalid_argument("egf: coefficient count does not match order");
}

EgfSeries EgfSeries::constant(const Rational& c, int order) {
    EgfSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

EgfSeries EgfSeries::identity(int order) {
    if (order < 1) throw std::invalid_argument("egf: identity needs order >= 1");
    EgfSeries s(order);
    s.coeffs_[1] = Rational(1);
    return s;
}

const Rational& EgfSeries::coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("egf: coefficient index out of range");
    return coeffs_[static_cast<size_t>(n)];
}

bool EgfSeries::is_delta() const {
    return order() >= 1 && coeffs_[0].is_zero() && !coeffs_[1].is_zero();
}

EgfSeries operator+(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> c(a.coeffs());
    for (int n = 0; n <= a.order(); ++n) c[n] += b[n];
    return EgfSeries(a.order(), std::move(c));
}

EgfSeries operator-(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> c(a.coeffs());
    for (int n = 0; n <= a.order(); ++n) c[n] -= b[n];
    return EgfSeries(a.order(), std::move(c));
}

EgfSeries operator-(const EgfSeries& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& x : c) x = -x;
    return EgfSeries(a.order(), std::move(c));
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    const int N = a.order();
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Rational s;
        for (int i = 0; i <= n; ++i) {
            if (a[i].is_zero() || b[n - i].is_zero()) continue;
            s += Rational(binom(n, i)) * a[i] * b[n - i];
        }
        c[n] = s;
    }
    return EgfSeries(N, std::move(c));
}

EgfSeries operator*(const Rational& c, const EgfSeries& a) {
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out) x *= c;
    return EgfSeries(a.order(), std::move(out));
}

EgfSeries operator+(const EgfSeries& a, const Rational& c) {
    std::vector<Rational> out(a.coeffs());
    out[0] += c;
    return EgfSeries(a.order(), std::move(out));
}

EgfSeries operator-(const EgfSeries& a, const Rational& c) {
    return a + (-c);
}

EgfSeries recip(const EgfSeries& a) {
    if (a[0].is_zero())
        throw PreconditionError("recip: series with zero constant term is not a unit");
    const int N = a.order();
    std::vector<Rational> b(static_cast<size_t>(N) + 1);
    b[0] = Rational(1) / a[0];
    for (int n = 1; n <= N; ++n) {
        Rational s;
        for (int i = 1; i <= n; ++i) {
            if (a[i].is_zero()) continue;
            s += Rational(binom(n, i)) * a[i] * b[n - i];
        }
        b[n] = -b[0] * s;
    }
    return EgfSeries(N, std::move(b));
}

EgfSeries exp(const EgfSeries& a) {
    require_zero_constant(a, "exp");
    const int N = a.order();
    std::vector<Rational> b(static_cast<size_t>(N) + 1);
    b[0] = Rational(1);
    // b' = a' b, taken coefficient by coefficient.
    for (int n = 0; n < N; ++n) {
        Rational s;
        for (int i = 0; i <= n; ++i) {
            if (a[i + 1].is_zero()) continue;
            s += Rational(binom(n, i)) * a[i + 1] * b[n - i];
        }
        b[n + 1] = s;
    }
    return EgfSeries(N, std::move(b));
}

EgfSeries log1p(const EgfSeries& a) {
    require_zero_constant(a, "log1p");
    const int N = a.order();
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    // From c'(1+a) = a': c_{n+1} = a_{n+1} - sum_{i<n} C(n,i) c_{i+1} a_{n-i}.
    for (int n = 0; n < N; ++n) {
        Rational s = a[n + 1];
        for (int i = 0; i < n; ++i) {
            if (c[i + 1].is_zero() || a[n - i].is_zero()) continue;
            s -= Rational(binom(n, i)) * c[i + 1] * a[n - i];
        }
        c[n + 1] = s;
    }
    return EgfSeries(N, std::move(c));
}

EgfSeries pow1p(const EgfSeries& a, const Rational& e) {
    require_zero_constant(a, "pow1p");
    const int N = a.order();
    EgfSeries result = EgfSeries::constant(Rational(1), N);
    EgfSeries apow = EgfSeries::constant(Rational(1), N);
    Rational coef(1); // (e choose j) built incrementally
    for (int j = 1; j <= N; ++j) {
        apow = apow * a;
        coef = coef * (e - Rational(j - 1)) / Rational(j);
        if (coef.is_zero()) break; // e is a nonnegative integer < j
        result = result + (coef * apow);
    }
    return result;
}

EgfSeries compose(const EgfSeries& f, const EgfSeries& g) {
    require_same_order(f, g);
    require_zero_constant(g, "compose");
    const int N = f.order();
    std::vector<Rational> acc(static_cast<size_t>(N) + 1);
    acc[0] = f[0];
    EgfSeries gpow = EgfSeries::constant(Rational(1), N);
    Rational kfact(1);
    for (int k = 1; k <= N; ++k) {
        gpow = gpow * g;
        kfact *= Rational(k);
        if (f[k].is_zero()) continue;
        const Rational scale = f[k] / kfact;
        for (int n = k; n <= N; ++n) acc[n] += scale * gpow[n];
    }
    return EgfSeries(N, std::move(acc));
}

EgfSeries reversion(const EgfSeries& f) {
    if (!f.is_delta())
        throw PreconditionError("reversion: input must be a delta series "
                                "(zero constant term, nonzero linear term)");
    const int N = f.order();
    std::vector<Rational> g(static_cast<size_t>(N) + 1);
    g[1] = Rational(1) / f[1];
    // Triangular back-substitution: the order-m coefficient of f(g(t))
    // depends on g_m only through the linear term f_1 g_m.
    for (int m = 2; m <= N; ++m) {
        const EgfSeries fm = truncated(f, m);
        const EgfSeries gm(m, std::vector<Rational>(g.begin(), g.begin() + m + 1));
        const EgfSeries h = compose(fm, gm);
        g[m] = -h[m] / f[1];
    }
    return EgfSeries(N, std::move(g));
}

EgfSeries divide_by_t(const EgfSeries& f) {
    require_zero_constant(f, "divide_by_t");
    if (f.order() < 1) throw std::invalid_argument("divide_by_t: order must be >= 1");
    const int N = f.order() - 1;
    std::vector<Rational> c(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) c[n] = f[n + 1] / Rational(n + 1);
    return EgfSeries(N, std::move(c));
}

EgfSeries truncated(const EgfSeries& f, int order) {
    if (order < 0 || order > f.order())
        throw std::invalid_argument("truncated: bad order");
    return EgfSeries(order,
                     std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + order + 1));
}

std::ostream& operator<<(std::ostream& os, const EgfSeries& s) {
    os << "[";
    for (int n = 0; n <= s.order(); ++n) {
        if (n) os << ", ";
        os << s[n];
    }
    return os << "]";
}

} // namespace probstirling
