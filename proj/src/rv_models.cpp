#include "probstirling/rv_models.hpp"

#include "probstirling/errors.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace probstirling {

namespace {

[[noreturn]] void bad_param(const std::string& family, const std::string& why) {
    throw std::invalid_argument("rv " + family + ": " + why);
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// e^t - 1 as an EGF series: [0, 1, 1, ...].
EgfSeries expm1_series(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(1));
    c[0] = Rational(0);
    return EgfSeries(order, std::move(c));
}

} // namespace

void validate(const RVSpec& rv) {
    std::visit(overloaded{
                   [](const ConstantRV&) {},
                   [](const BernoulliRV& y) {
                       if (!(y.p > Rational(0) && y.p <= Rational(1)))
                           bad_param("bernoulli", "requires 0 < p <= 1");
                   },
                   [](const BinomialRV& y) {
                       if (y.m < 1) bad_param("binomial", "requires m >= 1");
                       if (!(y.p > Rational(0) && y.p <= Rational(1)))
                           bad_param("binomial", "requires 0 < p <= 1");
                   },
                   [](const PoissonRV& y) {
                       if (!(y.alpha > Rational(0))) bad_param("poisson", "requires alpha > 0");
                   },
                   [](const GeometricRV& y) {
                       if (!(y.p > Rational(0) && y.p < Rational(1)))
                           bad_param("geometric", "requires 0 < p < 1");
                   },
                   [](const ExponentialRV& y) {
                       if (!(y.alpha > Rational(0))) bad_param("exponential", "requires alpha > 0");
                   },
                   [](const GammaRV& y) {
                       if (!(y.alpha > Rational(0) && y.beta > Rational(0)))
                           bad_param("gamma", "requires alpha > 0 and beta > 0");
                   },
                   [](const NormalRV& y) {
                       if (!(y.sigma2 > Rational(0))) bad_param("normal", "requires sigma2 > 0");
                   },
                   [](const UniformRV& y) {
                       if (!(y.a < y.b)) bad_param("uniform", "requires a < b");
                   },
               },
               rv);
}

namespace {

using ParamMap = std::map<std::string, Rational>;

Rational take(ParamMap& params, const std::string& family, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) bad_param(family, "missing parameter '" + key + "'");
    Rational v = it->second;
    params.erase(it);
    return v;
}

void expect_empty(const ParamMap& params, const std::string& family) {
    if (!params.empty()) bad_param(family, "unknown parameter '" + params.begin()->first + "'");
}

} // namespace

RVSpec parse_rv(std::string_view text) {
    const std::string s(text);
    const auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= s.size())
        throw std::invalid_argument("rv: expected 'family:key=value,...', got '" + s + "'");
    const std::string family = s.substr(0, colon);

    ParamMap params;
    std::stringstream rest(s.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
            bad_param(family, "expected 'key=value', got '" + item + "'");
        if (!params.emplace(item.substr(0, eq), Rational::parse(item.substr(eq + 1))).second)
            bad_param(family, "duplicate parameter '" + item.substr(0, eq) + "'");
    }

    RVSpec rv;
    if (family == "constant") {
        rv = ConstantRV{take(params, family, "c")};
    } else if (family == "bernoulli") {
        rv = BernoulliRV{take(params, family, "p")};
    } else if (family == "binomial") {
        const Rational m = take(params, family, "m");
        if (!m.is_integer()) bad_param(family, "m must be an integer");
        rv = BinomialRV{static_cast<int>(m.num().get_si()), take(params, family, "p")};
    } else if (family == "poisson") {
        rv = PoissonRV{take(params, family, "alpha")};
    } else if (family == "geometric") {
        rv = GeometricRV{take(params, family, "p")};
    } else if (family == "exponential") {
        rv = ExponentialRV{take(params, family, "alpha")};
    } else if (family == "gamma") {
        const Rational alpha = take(params, family, "alpha");
        rv = GammaRV{alpha, take(params, family, "beta")};
    } else if (family == "normal") {
        const Rational mu = take(params, family, "mu");
        rv = NormalRV{mu, take(params, family, "sigma2")};
    } else if (family == "uniform") {
        const Rational a = take(params, family, "a");
        rv = UniformRV{a, take(params, family, "b")};
    } else {
        throw std::invalid_argument("rv: unknown family '" + family + "'");
    }
    expect_empty(params, family);
    validate(rv);
    return rv;
}

std::string to_string(const RVSpec& rv) {
    return std::visit(
        overloaded{
            [](const ConstantRV& y) { return "constant:c=" + y.c.str(); },
            [](const BernoulliRV& y) { return "bernoulli:p=" + y.p.str(); },
            [](const BinomialRV& y) {
                return "binomial:m=" + std::to_string(y.m) + ",p=" + y.p.str();
            },
            [](const PoissonRV& y) { return "poisson:alpha=" + y.alpha.str(); },
            [](const GeometricRV& y) { return "geometric:p=" + y.p.str(); },
            [](const ExponentialRV& y) { return "exponential:alpha=" + y.alpha.str(); },
            [](const GammaRV& y) {
                return "gamma:alpha=" + y.alpha.str() + ",beta=" + y.beta.str();
            },
            [](const NormalRV& y) {
                return "normal:mu=" + y.mu.str() + ",sigma2=" + y.sigma2.str();
            },
            [](const UniformRV& y) { return "uniform:a=" + y.a.str() + ",b=" + y.b.str(); },
        },
        rv);
}

std::string family_name(const RVSpec& rv) {
    const std::string s = to_string(rv);
    return s.substr(0, s.find(':'));
}

Rational mean(const RVSpec& rv) {
    return std::visit(
        overloaded{
            [](const ConstantRV& y) { return y.c; },
            [](const BernoulliRV& y) { return y.p; },
            [](const BinomialRV& y) { return Rational(y.m) * y.p; },
            [](const PoissonRV& y) { return y.alpha; },
            [](const GeometricRV& y) { return Rational(1) / y.p; },
            [](const ExponentialRV& y) { return Rational(1) / y.alpha; },
            [](const GammaRV& y) { return y.alpha / y.beta; },
            [](const NormalRV& y) { return y.mu; },
            [](const UniformRV& y) { return (y.a + y.b) / Rational(2); },
        },
        rv);
}

EgfSeries mgf_series(const RVSpec& rv, int order) {
    validate(rv);
    const int N = order;
    return std::visit(
        overloaded{
            [N](const ConstantRV& y) {
                std::vector<Rational> c(static_cast<size_t>(N) + 1);
                for (int n = 0; n <= N; ++n) c[n] = y.c.pow(n);
                return EgfSeries(N, std::move(c));
            },
            [N](const BernoulliRV& y) {
                std::vector<Rational> c(static_cast<size_t>(N) + 1, y.p);
                c[0] = Rational(1);
                return EgfSeries(N, std::move(c));
            },
            [N](const BinomialRV& y) {
                return pow1p(y.p * expm1_series(N), Rational(y.m));
            },
            [N](const PoissonRV& y) { return exp(y.alpha * expm1_series(N)); },
            [N](const GeometricRV& y) {
                // p e^t / (1 - (1-p) e^t); the denominator has constant term p.
                std::vector<Rational> num(static_cast<size_t>(N) + 1, y.p);
                std::vector<Rational> den(static_cast<size_t>(N) + 1, y.p - Rational(1));
                den[0] = y.p;
                return EgfSeries(N, std::move(num)) * recip(EgfSeries(N, std::move(den)));
            },
            [N](const ExponentialRV& y) {
                // alpha/(alpha - t) = 1/(1 - t/alpha)
                EgfSeries lin(N);
                if (N >= 1) lin = Rational(-1) / y.alpha * EgfSeries::identity(N);
                return recip(lin + Rational(1));
            },
            [N](const GammaRV& y) {
                // (beta/(beta - t))^alpha = (1 - t/beta)^(-alpha)
                if (N == 0) return EgfSeries::constant(Rational(1), 0);
                return pow1p(Rational(-1) / y.beta * EgfSeries::identity(N), -y.alpha);
            },
            [N](const NormalRV& y) {
                // exp(mu t + sigma2 t^2/2): EGF coefficients mu and sigma2.
                EgfSeries arg(N);
                std::vector<Rational> c(static_cast<size_t>(N) + 1);
                if (N >= 1) c[1] = y.mu;
                if (N >= 2) c[2] = y.sigma2;
                return exp(EgfSeries(N, std::move(c)));
            },
            [N](const UniformRV& y) {
                // (e^{bt} - e^{at}) / ((b-a) t), dividing out the removable zero.
                std::vector<Rational> num(static_cast<size_t>(N) + 2);
                for (int n = 0; n <= N + 1; ++n) num[n] = y.b.pow(n) - y.a.pow(n);
                const EgfSeries shifted = divide_by_t(EgfSeries(N + 1, std::move(num)));
                return Rational(1) / (y.b - y.a) * shifted;
            },
        },
        rv);
}

EgfSeries degen_mgf_series(const RVSpec& rv, const Rational& lambda, int order) {
    const EgfSeries m = mgf_series(rv, order);
    if (lambda.is_zero()) return m;
    // log e_lambda(t) = (1/lambda) log(1 + lambda t), a delta series with
    // EGF coefficients (-lambda)^(n-1) (n-1)!.
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational term(1); // (n-1)! lambda^(n-1), with alternating sign
    for (int n = 1; n <= order; ++n) {
        c[n] = term;
        term *= Rational(-n) * lambda;
    }
    return compose(m, EgfSeries(order, std::move(c)));
}

Rational moment(const RVSpec& rv, int n) {
    if (n < 0) throw std::invalid_argument("moment: negative order");
    return mgf_series(rv, n)[n];
}

} // namespace probstirling
