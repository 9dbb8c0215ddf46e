#include "probstirling/prob_stirling.hpp"

#include "probstirling/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace probstirling {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_nonzero_mean(const RVSpec& rv, const char* what) {
    if (mean(rv).is_zero())
        throw PreconditionError(std::string(what) + ": first-kind numbers need E[Y] != 0, but " +
                                to_string(rv) + " has zero mean");
}

EgfSeries e_y_series(const RVSpec& rv, const Rational& lambda, int order) {
    return degen_mgf_series(rv, lambda, order) - Rational(1);
}

// Entry (n, k) = n! [t^n] base(t)^k / k! for all 0 <= k <= n <= max_n,
// amortizing the successive powers of one series.
Triangle triangle_from_powers(const EgfSeries& base, int max_n) {
    Triangle t(max_n);
    EgfSeries p = EgfSeries::constant(Rational(1), max_n);
    Rational kfact(1);
    for (int k = 0; k <= max_n; ++k) {
        if (k > 0) {
            p = p * base;
            kfact *= Rational(k);
        }
        for (int n = k; n <= max_n; ++n) t.at(n, k) = p[n] / kfact;
    }
    return t;
}

} // namespace

Triangle s2y_triangle(const RVSpec& rv, int max_n) {
    return triangle_from_powers(e_y_series(rv, Rational(0), max_n), max_n);
}

namespace {

// Reversion needs at least a linear coefficient, so order-0 requests are
// computed at order 1 and cut back down.
Triangle first_kind_triangle(const RVSpec& rv, const Rational& lambda, int max_n) {
    const int eff = std::max(max_n, 1);
    Triangle full = triangle_from_powers(reversion(e_y_series(rv, lambda, eff)), eff);
    if (eff == max_n) return full;
    Triangle t(0);
    t.at(0, 0) = full.at(0, 0);
    return t;
}

} // namespace

Triangle s1y_triangle(const RVSpec& rv, int max_n) {
    require_nonzero_mean(rv, "s1y_triangle");
    return first_kind_triangle(rv, Rational(0), max_n);
}

Triangle s2y_degen_triangle(const RVSpec& rv, const Rational& lambda, int max_n) {
    return triangle_from_powers(e_y_series(rv, lambda, max_n), max_n);
}

Triangle s1y_degen_triangle(const RVSpec& rv, const Rational& lambda, int max_n) {
    require_nonzero_mean(rv, "s1y_degen_triangle");
    return first_kind_triangle(rv, lambda, max_n);
}

PartialSumMoments::PartialSumMoments(const RVSpec& rv, int max_j, int max_n) {
    if (max_j < 0 || max_n < 0)
        throw std::invalid_argument("partial_sum_moments: negative bounds");
    const EgfSeries mgf = mgf_series(rv, max_n);
    m_.assign(static_cast<size_t>(max_j) + 1,
              std::vector<Rational>(static_cast<size_t>(max_n) + 1));
    m_[0][0] = Rational(1); // S_0 = 0
    for (int j = 1; j <= max_j; ++j)
        for (int n = 0; n <= max_n; ++n) {
            Rational s;
            for (int i = 0; i <= n; ++i) {
                if (m_[j - 1][i].is_zero()) continue;
                s += Rational(binomial(n, i)) * m_[j - 1][i] * mgf[n - i];
            }
            m_[j][n] = s;
        }
}

const Rational& PartialSumMoments::at(int j, int n) const {
    if (j < 0 || j > max_j() || n < 0 || n > max_n())
        throw std::out_of_range("partial_sum_moments: index out of range");
    return m_[static_cast<size_t>(j)][static_cast<size_t>(n)];
}

Rational s2y_via_moments(const RVSpec& rv, int n, int k) {
    if (n < 0 || k < 0) return Rational(0);
    const PartialSumMoments m(rv, k, n);
    Rational acc;
    for (int j = 0; j <= k; ++j) {
        const Rational term = Rational(binomial(k, j)) * m.at(j, n);
        if ((k - j) % 2) acc -= term;
        else acc += term;
    }
    return acc / Rational(factorial(k));
}

Rational s2y_degen_via_moments(const RVSpec& rv, const Rational& lambda, int n, int k) {
    if (n < 0 || k < 0) return Rational(0);
    const PartialSumMoments m(rv, k, n);
    Rational acc;
    for (int j = 0; j <= k; ++j) {
        // E[(S_j)_{n,lambda}] via the basis conversion
        // (x)_{n,lambda} = sum_i S1(n,i) lambda^(n-i) x^i.
        Rational dm;
        for (int i = 0; i <= n; ++i) {
            const Rational s1 = stirling1(n, i);
            if (s1.is_zero()) continue;
            dm += s1 * lambda.pow(n - i) * m.at(j, i);
        }
        const Rational term = Rational(binomial(k, j)) * dm;
        if ((k - j) % 2) acc -= term;
        else acc += term;
    }
    return acc / Rational(factorial(k));
}

CumulantSequence::CumulantSequence(std::vector<Rational> kappa) : kappa_(std::move(kappa)) {
    if (kappa_.empty()) throw std::invalid_argument("cumulants: empty sequence");
}

const Rational& CumulantSequence::at(int n) const {
    if (n < 1 || n > max_n()) throw std::out_of_range("cumulants: index out of range");
    return kappa_[static_cast<size_t>(n)];
}

CumulantSequence cumulants(const RVSpec& rv, int max_n) {
    const Triangle t2 = s2y_triangle(rv, max_n);
    std::vector<Rational> kappa(static_cast<size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
        Rational acc;
        Rational fact(1); // (j-1)!
        for (int j = 1; j <= n; ++j) {
            if (j > 1) fact *= Rational(j - 1);
            const Rational term = fact * t2.at(n, j);
            if ((j - 1) % 2) acc -= term;
            else acc += term;
        }
        kappa[n] = acc;
    }
    return CumulantSequence(std::move(kappa));
}

EgfSeries fy_bar_series(const RVSpec& rv, int order) {
    return log1p(mgf_series(rv, order) - Rational(1));
}

EgfSeries fy_series(const RVSpec& rv, int order) {
    require_nonzero_mean(rv, "fy_series");
    const int eff = std::max(order, 1);
    return truncated(reversion(fy_bar_series(rv, eff)), order);
}

EgfSeries fy_bar_degen_series(const RVSpec& rv, const Rational& lambda, int order) {
    return log1p(degen_mgf_series(rv, lambda, order) - Rational(1));
}

EgfSeries fy_degen_series(const RVSpec& rv, const Rational& lambda, int order) {
    require_nonzero_mean(rv, "fy_degen_series");
    const int eff = std::max(order, 1);
    return truncated(reversion(fy_bar_degen_series(rv, lambda, eff)), order);
}

Rational adell_benyi_s(const RVSpec& rv, int n, int k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    const EgfSeries fbar = fy_bar_series(rv, n);
    EgfSeries p = EgfSeries::constant(Rational(1), n);
    for (int i = 0; i < k; ++i) p = p * fbar;
    const Rational c = p[n] / Rational(factorial(k));
    return (n - k) % 2 ? -c : c;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

namespace {

Rational cf_bernoulli(const BernoulliRV& y, StirlingKind kind, const Rational& lam, int n,
                      int k) {
    switch (kind) {
    case StirlingKind::S2Y: return y.p.pow(k) * stirling2(n, k);
    case StirlingKind::S1Y: return y.p.pow(-n) * stirling1(n, k);
    case StirlingKind::S2YL: return y.p.pow(k) * degen_stirling2(n, k, lam);
    case StirlingKind::S1YL: return y.p.pow(-n) * degen_stirling1(n, k, lam);
    }
    throw std::logic_error("unreachable");
}

Rational cf_binomial(const BinomialRV& y, StirlingKind kind, const Rational& lam, int n,
                     int k) {
    const Rational m(y.m);
    Rational acc;
    for (int j = k; j <= n; ++j)
        for (int i = j; i <= n; ++i) {
            Rational term;
            switch (kind) {
            case StirlingKind::S2Y:
                term = m.pow(j) * y.p.pow(i) * stirling2(j, k) * stirling1(i, j) * stirling2(n, i);
                break;
            case StirlingKind::S1Y:
                term = y.p.pow(-j) * m.pow(-i) * stirling1(j, k) * stirling2(i, j) * stirling1(n, i);
                break;
            case StirlingKind::S2YL:
                term = m.pow(j) * y.p.pow(i) * stirling2(j, k) * stirling1(i, j) *
                       degen_stirling2(n, i, lam);
                break;
            case StirlingKind::S1YL:
                term = y.p.pow(-j) * m.pow(-i) * degen_stirling1(j, k, lam) * stirling2(i, j) *
                       stirling1(n, i);
                break;
            }
            acc += term;
        }
    return acc;
}

Rational cf_poisson(const PoissonRV& y, StirlingKind kind, const Rational& lam, int n, int k) {
    Rational acc;
    for (int j = k; j <= n; ++j) {
        Rational term;
        switch (kind) {
        case StirlingKind::S2Y: term = y.alpha.pow(j) * stirling2(j, k) * stirling2(n, j); break;
        case StirlingKind::S1Y: term = y.alpha.pow(-j) * stirling1(j, k) * stirling1(n, j); break;
        case StirlingKind::S2YL:
            term = y.alpha.pow(j) * stirling2(j, k) * degen_stirling2(n, j, lam);
            break;
        case StirlingKind::S1YL:
            term = y.alpha.pow(-j) * degen_stirling1(j, k, lam) * stirling1(n, j);
            break;
        }
        acc += term;
    }
    return acc;
}

Rational cf_geometric(const GeometricRV& y, StirlingKind kind, const Rational& lam, int n,
                      int k) {
    const Rational u = Rational(1) / (Rational(1) - y.p);
    switch (kind) {
    case StirlingKind::S2Y:
    case StirlingKind::S2YL: {
        Rational acc;
        for (int j = 0; j <= k; ++j) {
            const Rational h = kind == StirlingKind::S2Y
                                   ? frobenius_euler(n, j, u)
                                   : degen_frobenius_euler(n, j, u, lam);
            const Rational term = Rational(binomial(k, j)) * h;
            if (j % 2) acc -= term;
            else acc += term;
        }
        return acc / (Rational(factorial(k)) * (y.p - Rational(1)).pow(k));
    }
    case StirlingKind::S1Y:
    case StirlingKind::S1YL: {
        Rational acc;
        for (int j = k; j <= n; ++j) {
            const Rational s1 = kind == StirlingKind::S1Y ? stirling1(j, k)
                                                          : degen_stirling1(j, k, lam);
            acc += Rational(binomial(n, j)) * falling_factorial(Rational(n - 1), n - j) *
                   y.p.pow(j) * (y.p - Rational(1)).pow(n - j) * s1;
        }
        return acc;
    }
    }
    throw std::logic_error("unreachable");
}

Rational cf_exponential(const ExponentialRV& y, StirlingKind kind, const Rational& lam, int n,
                        int k) {
    switch (kind) {
    case StirlingKind::S2Y:
        return Rational(binomial(n, k)) * falling_factorial(Rational(n - 1), n - k) *
               y.alpha.pow(-n);
    case StirlingKind::S1Y: {
        const Rational v = Rational(binomial(n, k)) *
                           falling_factorial(Rational(n - 1), n - k) * y.alpha.pow(k);
        return (n - k) % 2 ? -v : v;
    }
    case StirlingKind::S2YL: {
        Rational acc;
        for (int j = k; j <= n; ++j)
            acc += Rational(binomial(j, k)) * falling_factorial(Rational(j - 1), j - k) *
                   y.alpha.pow(-j) * lam.pow(n - j) * stirling1(n, j);
        return acc;
    }
    case StirlingKind::S1YL: {
        Rational acc;
        for (int j = k; j <= n; ++j) {
            Rational term = Rational(binomial(n, j)) *
                            falling_factorial(Rational(n - 1), n - j) * y.alpha.pow(j) *
                            lam.pow(j - k) * stirling2(j, k);
            if ((n - j) % 2) acc -= term;
            else acc += term;
        }
        return acc;
    }
    }
    throw std::logic_error("unreachable");
}

Rational cf_gamma(const GammaRV& y, StirlingKind kind, const Rational& lam, int n, int k) {
    switch (kind) {
    case StirlingKind::S2Y: {
        Rational acc;
        for (int j = 0; j <= k; ++j) {
            const Rational term =
                Rational(binomial(k, j)) *
                falling_factorial(y.alpha * Rational(j) + Rational(n - 1), n);
            if ((k - j) % 2) acc -= term;
            else acc += term;
        }
        return acc / (Rational(factorial(k)) * y.beta.pow(n));
    }
    case StirlingKind::S1Y: {
        Rational acc;
        for (int j = 0; j <= k; ++j) {
            const Rational term =
                Rational(binomial(k, j)) *
                degen_falling_factorial(Rational(j) + Rational(n - 1) * y.alpha, n, y.alpha);
            if (j % 2) acc -= term;
            else acc += term;
        }
        return acc * y.beta.pow(k) * (-Rational(1) / y.alpha).pow(n) / Rational(factorial(k));
    }
    case StirlingKind::S2YL: {
        Rational acc;
        for (int l = 0; l <= n; ++l) {
            const Rational s1 = stirling1(n, l);
            if (s1.is_zero()) continue;
            for (int j = 0; j <= k; ++j) {
                Rational term = Rational(binomial(k, j)) *
                                falling_factorial(y.alpha * Rational(j) + Rational(l - 1), l) *
                                y.beta.pow(-l) * lam.pow(n - l) * s1;
                if ((k - j) % 2) acc -= term;
                else acc += term;
            }
        }
        return acc / Rational(factorial(k));
    }
    case StirlingKind::S1YL: {
        Rational acc;
        for (int l = k; l <= n; ++l) {
            const Rational s2 = stirling2(l, k);
            if (s2.is_zero()) continue;
            for (int j = 0; j <= l; ++j) {
                Rational term =
                    s2 * Rational(binomial(l, j)) / Rational(factorial(l)) *
                    lam.pow(l - k) * y.beta.pow(l) * y.alpha.pow(-n) *
                    degen_falling_factorial(Rational(j) + Rational(n - 1) * y.alpha, n, y.alpha);
                if ((n - j) % 2) acc -= term;
                else acc += term;
            }
        }
        return acc;
    }
    }
    throw std::logic_error("unreachable");
}

Rational cf_normal_finite(const NormalRV& y, StirlingKind kind, const Rational& lam, int n,
                          int k) {
    const Rational half_s2 = y.sigma2 / Rational(2);
    switch (kind) {
    case StirlingKind::S2Y: {
        Rational acc;
        for (int j = k; j <= n; ++j) {
            if (n - j > j) continue; // binom(j, n-j) vanishes
            acc += Rational(factorial(n), factorial(j)) * Rational(binomial(j, n - j)) *
                   y.mu.pow(2 * j - n) * half_s2.pow(n - j) * stirling2(j, k);
        }
        return acc;
    }
    case StirlingKind::S1Y: {
        const Rational ratio = y.sigma2 / (y.mu * y.mu); // (sigma/mu)^2
        Rational acc;
        for (int j = 0; j <= k; ++j)
            for (int l = 0; l <= n; ++l) {
                const Rational s1 = stirling1(n, l);
                if (s1.is_zero()) continue;
                Rational term = Rational(binomial(k, j)) *
                                falling_factorial(Rational(j) / Rational(2), l) *
                                Rational(2).pow(l) * ratio.pow(l) * s1;
                if (j % 2) acc -= term;
                else acc += term;
            }
        return acc * (-y.mu / y.sigma2).pow(k) / Rational(factorial(k));
    }
    case StirlingKind::S2YL: {
        Rational acc;
        for (int m = k; m <= n; ++m) {
            const Rational s1 = stirling1(n, m);
            if (s1.is_zero()) continue;
            for (int j = k; j <= m; ++j) {
                if (m - j > j) continue;
                acc += Rational(factorial(m), factorial(j)) * Rational(binomial(j, m - j)) *
                       y.mu.pow(2 * j - m) * half_s2.pow(m - j) * lam.pow(n - m) *
                       stirling2(j, k) * s1;
            }
        }
        return acc;
    }
    default:
        throw std::logic_error("cf_normal_finite: infinite-sum kind");
    }
}

Rational cf_uniform(const UniformRV& y, StirlingKind kind, const Rational& lam, int n, int k) {
    const Rational width = y.b - y.a;
    switch (kind) {
    case StirlingKind::S2Y: {
        Rational acc;
        for (int j = 0; j <= k; ++j)
            for (int l = 0; l <= n; ++l) {
                const Rational s2 = stirling2(l + j, j);
                if (s2.is_zero()) continue;
                Rational term = Rational(binomial(n, l)) * Rational(binomial(k, j)) /
                                Rational(binomial(l + j, j)) *
                                (y.a * Rational(j)).pow(n - l) * width.pow(l) * s2;
                if ((k - j) % 2) acc -= term;
                else acc += term;
            }
        return acc / Rational(factorial(k));
    }
    case StirlingKind::S2YL: {
        Rational acc;
        for (int m = 0; m <= n; ++m) {
            const Rational s1 = stirling1(n, m);
            if (s1.is_zero()) continue;
            for (int j = 0; j <= k; ++j)
                for (int l = 0; l <= m; ++l) {
                    const Rational s2 = stirling2(l + j, j);
                    if (s2.is_zero()) continue;
                    Rational term = Rational(binomial(m, l)) * Rational(binomial(k, j)) /
                                    Rational(binomial(l + j, j)) *
                                    (y.a * Rational(j)).pow(m - l) * width.pow(l) *
                                    lam.pow(n - m) * s2 * s1;
                    if ((k - j) % 2) acc -= term;
                    else acc += term;
                }
        }
        return acc / Rational(factorial(k));
    }
    default:
        throw NotAvailableError(
            "uniform: no closed form is known for the first-kind numbers; "
            "only the generic compositional-inverse path computes them");
    }
}

} // namespace

Rational uniform0_s2y_closed(const Rational& b, int n, int k) {
    Rational acc;
    for (int j = 0; j <= k; ++j) {
        const Rational term = Rational(binomial(k, j)) / Rational(binomial(n + j, j)) *
                              stirling2(n + j, j);
        if ((k - j) % 2) acc -= term;
        else acc += term;
    }
    return acc * b.pow(n) / Rational(factorial(k));
}

Rational uniform0_s2y_degen_closed(const Rational& b, const Rational& lambda, int n, int k) {
    Rational acc;
    for (int m = 0; m <= n; ++m) {
        const Rational s1 = stirling1(n, m);
        if (s1.is_zero()) continue;
        for (int j = 0; j <= k; ++j) {
            const Rational term = Rational(binomial(k, j)) / Rational(binomial(m + j, j)) *
                                  b.pow(m) * lambda.pow(n - m) * stirling2(m + j, j) * s1;
            if ((k - j) % 2) acc -= term;
            else acc += term;
        }
    }
    return acc / Rational(factorial(k));
}

Rational normal_s1y_degen_sum(const NormalRV& rv, const Rational& lambda, int n, int k,
                              int terms) {
    if (terms < 1) throw std::invalid_argument("normal_s1y_degen_sum: needs terms >= 1");
    if (rv.mu.is_zero()) throw PreconditionError("normal_s1y_degen_sum: needs mu != 0");
    const Rational jbase = lambda * rv.mu / rv.sigma2;  // (lambda mu / sigma^2)
    const Rational ratio = rv.sigma2 / (rv.mu * rv.mu); // (sigma/mu)^2
    Rational acc;
    for (int m = 0; m <= n; ++m) {
        const Rational s1 = stirling1(n, m);
        if (s1.is_zero()) continue;
        const Rational mfac = Rational(2).pow(m) * ratio.pow(m) * s1;
        for (int j = k; j < k + terms; ++j) {
            const Rational s2 = stirling2(j, k);
            if (s2.is_zero()) continue;
            const Rational jfac = jbase.pow(j) / Rational(factorial(j)) * s2;
            for (int l = 0; l <= j; ++l) {
                Rational term = Rational(binomial(j, l)) *
                                falling_factorial(Rational(l) / Rational(2), m) * jfac * mfac;
                if ((j + l) % 2) acc -= term;
                else acc += term;
            }
        }
    }
    return acc;
}

bool closed_form_available(const RVSpec& rv, StirlingKind kind) {
    return std::visit(overloaded{
                          [](const ConstantRV&) { return false; },
                          [kind](const UniformRV&) {
                              return kind == StirlingKind::S2Y || kind == StirlingKind::S2YL;
                          },
                          [](const auto&) { return true; },
                      },
                      rv);
}

ClosedFormValue closed_form(const RVSpec& rv, StirlingKind kind, const Rational& lambda,
                            int n, int k, int partial_terms) {
    validate(rv);
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("closed_form: needs 0 <= k <= n");
    if (!closed_form_available(rv, kind))
        throw NotAvailableError("closed_form: no closed form for " + family_name(rv) +
                                " with the requested kind");
    // The normal first-kind degenerate number is the one infinite sum in the
    // catalog; everything else is a finite, exact sum.
    if (std::holds_alternative<NormalRV>(rv) && kind == StirlingKind::S1YL &&
        !lambda.is_zero()) {
        const auto& y = std::get<NormalRV>(rv);
        if (y.mu.is_zero())
            throw PreconditionError("closed_form: normal first kind needs mu != 0");
        const Rational sum = normal_s1y_degen_sum(y, lambda, n, k, partial_terms);
        ClosedFormValue out;
        out.partial = (sum / lambda.pow(k)).to_double();
        out.terms = partial_terms;
        return out;
    }
    const StirlingKind eff =
        lambda.is_zero() && kind == StirlingKind::S2YL
            ? StirlingKind::S2Y
            : (lambda.is_zero() && kind == StirlingKind::S1YL ? StirlingKind::S1Y : kind);
    ClosedFormValue out;
    out.exact = std::visit(
        overloaded{
            [&](const BernoulliRV& y) { return cf_bernoulli(y, eff, lambda, n, k); },
            [&](const BinomialRV& y) { return cf_binomial(y, eff, lambda, n, k); },
            [&](const PoissonRV& y) { return cf_poisson(y, eff, lambda, n, k); },
            [&](const GeometricRV& y) { return cf_geometric(y, eff, lambda, n, k); },
            [&](const ExponentialRV& y) { return cf_exponential(y, eff, lambda, n, k); },
            [&](const GammaRV& y) { return cf_gamma(y, eff, lambda, n, k); },
            [&](const NormalRV& y) {
                if ((eff == StirlingKind::S1Y || eff == StirlingKind::S1YL) && y.mu.is_zero())
                    throw PreconditionError("closed_form: normal first kind needs mu != 0");
                return cf_normal_finite(y, eff, lambda, n, k);
            },
            [&](const UniformRV& y) { return cf_uniform(y, eff, lambda, n, k); },
            [&](const ConstantRV&) -> Rational { throw std::logic_error("unreachable"); },
        },
        rv);
    return out;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

std::optional<std::string> orthogonality_violation(const Triangle& s2, const Triangle& s1) {
    const int N = std::min(s2.max_n(), s1.max_n());
    for (int n = 0; n <= N; ++n)
        for (int l = 0; l <= n; ++l) {
            const Rational want = n == l ? Rational(1) : Rational(0);
            Rational fwd, rev;
            for (int k = l; k <= n; ++k) {
                fwd += s2.at(n, k) * s1.at(k, l);
                rev += s1.at(n, k) * s2.at(k, l);
            }
            if (fwd != want || rev != want) {
                std::ostringstream os;
                os << "orthogonality fails at (n=" << n << ", l=" << l << "): sum "
                   << (fwd != want ? fwd : rev) << " != " << want;
                return os.str();
            }
        }
    return std::nullopt;
}

VerifyReport verify_orthogonality(const RVSpec& rv, const Rational& lambda, int max_n) {
    require_nonzero_mean(rv, "verify_orthogonality");
    if (auto v = orthogonality_violation(s2y_triangle(rv, max_n), s1y_triangle(rv, max_n)))
        return {false, to_string(rv) + ": " + *v};
    if (!lambda.is_zero()) {
        if (auto v = orthogonality_violation(s2y_degen_triangle(rv, lambda, max_n),
                                             s1y_degen_triangle(rv, lambda, max_n)))
            return {false, to_string(rv) + " (lambda=" + lambda.str() + "): " + *v};
    }
    return {};
}

namespace {

VerifyReport vanish_fail(const RVSpec& rv, const char* ident, int n, int k,
                         const Rational& got) {
    std::ostringstream os;
    os << to_string(rv) << ": " << ident << " sum at (n=" << n << ", k=" << k
       << ") is " << got << ", expected 0";
    return {false, os.str()};
}

} // namespace

VerifyReport verify_vanishing(const RVSpec& rv, const Rational& lambda, int max_k) {
    validate(rv);
    if (const auto* y = std::get_if<GeometricRV>(&rv)) {
        const Rational u = Rational(1) / (Rational(1) - y->p);
        for (int k = 1; k <= max_k; ++k)
            for (int n = 0; n < k; ++n) {
                Rational plain, degen;
                for (int j = 0; j <= k; ++j) {
                    const Rational sign = j % 2 ? Rational(-1) : Rational(1);
                    plain += sign * Rational(binomial(k, j)) * frobenius_euler(n, j, u);
                    if (!lambda.is_zero())
                        degen += sign * Rational(binomial(k, j)) *
                                 degen_frobenius_euler(n, j, u, lambda);
                }
                if (!plain.is_zero())
                    return vanish_fail(rv, "alternating Frobenius-Euler", n, k, plain);
                if (!degen.is_zero())
                    return vanish_fail(rv, "alternating degenerate Frobenius-Euler", n, k, degen);
            }
        return {};
    }
    if (const auto* y = std::get_if<GammaRV>(&rv)) {
        for (int k = 1; k <= max_k; ++k)
            for (int n = 0; n < k; ++n) {
                Rational second, first, degen;
                for (int j = 0; j <= k; ++j) {
                    const Rational b(binomial(k, j));
                    Rational t2 = b * falling_factorial(y->alpha * Rational(j) + Rational(n - 1), n);
                    if ((k - j) % 2) second -= t2;
                    else second += t2;
                    Rational t1 = b * degen_falling_factorial(
                                          Rational(j) + Rational(n - 1) * y->alpha, n, y->alpha);
                    if (j % 2) first -= t1;
                    else first += t1;
                    if (!lambda.is_zero())
                        for (int l = 0; l <= n; ++l) {
                            const Rational s1 = stirling1(n, l);
                            if (s1.is_zero()) continue;
                            Rational td = b *
                                          falling_factorial(y->alpha * Rational(j) + Rational(l - 1), l) *
                                          y->beta.pow(-l) * lambda.pow(n - l) * s1;
                            if ((k - j) % 2) degen -= td;
                            else degen += td;
                        }
                }
                if (!second.is_zero())
                    return vanish_fail(rv, "second-kind falling-factorial", n, k, second);
                if (!first.is_zero())
                    return vanish_fail(rv, "first-kind degenerate-factorial", n, k, first);
                if (!degen.is_zero())
                    return vanish_fail(rv, "degenerate second-kind", n, k, degen);
            }
        return {};
    }
    if (const auto* y = std::get_if<NormalRV>(&rv)) {
        if (y->mu.is_zero())
            throw PreconditionError("verify_vanishing: normal identities need mu != 0");
        const Rational ratio = y->sigma2 / (y->mu * y->mu);
        for (int k = 1; k <= max_k; ++k)
            for (int n = 0; n < k; ++n) {
                Rational acc;
                for (int j = 0; j <= k; ++j)
                    for (int l = 0; l <= n; ++l) {
                        const Rational s1 = stirling1(n, l);
                        if (s1.is_zero()) continue;
                        Rational term = Rational(binomial(k, j)) *
                                        falling_factorial(Rational(j) / Rational(2), l) *
                                        Rational(2).pow(l) * ratio.pow(l) * s1;
                        if (j % 2) acc -= term;
                        else acc += term;
                    }
                if (!acc.is_zero()) return vanish_fail(rv, "first-kind half-integer", n, k, acc);
            }
        return {};
    }
    if (const auto* y = std::get_if<UniformRV>(&rv)) {
        const Rational width = y->b - y->a;
        for (int k = 1; k <= max_k; ++k)
            for (int n = 0; n < k; ++n) {
                Rational plain;
                for (int j = 0; j <= k; ++j)
                    for (int l = 0; l <= n; ++l) {
                        const Rational s2 = stirling2(l + j, j);
                        if (s2.is_zero()) continue;
                        Rational term = Rational(binomial(n, l)) * Rational(binomial(k, j)) /
                                        Rational(binomial(l + j, j)) *
                                        (y->a * Rational(j)).pow(n - l) * width.pow(l) * s2;
                        if ((k - j) % 2) plain -= term;
                        else plain += term;
                    }
                if (!plain.is_zero()) return vanish_fail(rv, "second-kind", n, k, plain);
                if (y->a.is_zero()) {
                    Rational special;
                    for (int j = 0; j <= k; ++j) {
                        Rational term = Rational(binomial(k, j)) /
                                        Rational(binomial(n + j, j)) * stirling2(n + j, j);
                        if ((k - j) % 2) special -= term;
                        else special += term;
                    }
                    if (!special.is_zero())
                        return vanish_fail(rv, "second-kind (a=0)", n, k, special);
                }
                if (!lambda.is_zero()) {
                    Rational degen;
                    for (int m = 0; m <= n; ++m) {
                        const Rational s1 = stirling1(n, m);
                        if (s1.is_zero()) continue;
                        for (int j = 0; j <= k; ++j)
                            for (int l = 0; l <= m; ++l) {
                                const Rational s2 = stirling2(l + j, j);
                                if (s2.is_zero()) continue;
                                Rational term = Rational(binomial(m, l)) *
                                                Rational(binomial(k, j)) /
                                                Rational(binomial(l + j, j)) *
                                                (y->a * Rational(j)).pow(m - l) * width.pow(l) *
                                                lambda.pow(n - m) * s2 * s1;
                                if ((k - j) % 2) degen -= term;
                                else degen += term;
                            }
                    }
                    if (!degen.is_zero())
                        return vanish_fail(rv, "degenerate second-kind", n, k, degen);
                    if (y->a.is_zero()) {
                        Rational special;
                        for (int m = 0; m <= n; ++m) {
                            const Rational s1 = stirling1(n, m);
                            if (s1.is_zero()) continue;
                            for (int j = 0; j <= k; ++j) {
                                Rational term = Rational(binomial(k, j)) /
                                                Rational(binomial(m + j, j)) * y->b.pow(m) *
                                                lambda.pow(n - m) * stirling2(m + j, j) * s1;
                                if ((k - j) % 2) special -= term;
                                else special += term;
                            }
                        }
                        if (!special.is_zero())
                            return vanish_fail(rv, "degenerate second-kind (a=0)", n, k, special);
                    }
                }
            }
        return {};
    }
    throw NotAvailableError("verify_vanishing: no vanishing identities cataloged for " +
                            family_name(rv));
}

} // namespace probstirling
