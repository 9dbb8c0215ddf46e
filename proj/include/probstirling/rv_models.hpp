#pragma once

#include "probstirling/egf_series.hpp"
#include "probstirling/rational.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace probstirling {

// Catalog of random variables with exact rational parameters. Constant(c)
// realizes the Y = 1 reduction case; the other eight carry the usual
// parameter constraints, checked by validate().
struct ConstantRV { Rational c; };
struct BernoulliRV { Rational p; };            // 0 < p <= 1
struct BinomialRV { int m = 1; Rational p; };  // m >= 1, 0 < p <= 1
struct PoissonRV { Rational alpha; };          // alpha > 0
struct GeometricRV { Rational p; };            // 0 < p < 1
struct ExponentialRV { Rational alpha; };      // alpha > 0
struct GammaRV { Rational alpha; Rational beta; }; // alpha, beta > 0
struct NormalRV { Rational mu; Rational sigma2; }; // sigma2 > 0
struct UniformRV { Rational a; Rational b; };      // a < b

using RVSpec = std::variant<ConstantRV, BernoulliRV, BinomialRV, PoissonRV, GeometricRV,
                            ExponentialRV, GammaRV, NormalRV, UniformRV>;

// Throws std::invalid_argument when a parameter is outside its range.
// Zero-mean specs are accepted here; operations that need E[Y] != 0 check
// it themselves.
void validate(const RVSpec& rv);

// Canonical textual form, e.g. "geometric:p=1/3", "normal:mu=1,sigma2=2".
RVSpec parse_rv(std::string_view text);
std::string to_string(const RVSpec& rv);
std::string family_name(const RVSpec& rv);

Rational mean(const RVSpec& rv);

// Truncated EGF of E[e^{Yt}]: coeff(0) = 1, coeff(n) = E[Y^n].
EgfSeries mgf_series(const RVSpec& rv, int order);

// Truncated EGF of E[e_lambda^Y(t)]: coeff(n) = E[(Y)_{n,lambda}]. Computed
// uniformly as the mgf composed with (1/lambda) log(1 + lambda t); equals
// mgf_series exactly at lambda = 0.
EgfSeries degen_mgf_series(const RVSpec& rv, const Rational& lambda, int order);

// E[Y^n].
Rational moment(const RVSpec& rv, int n);

} // namespace probstirling
