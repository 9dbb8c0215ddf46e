#pragma once

#include "probstirling/combinatorics.hpp"
#include "probstirling/rv_models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace probstirling {

// Which of the four number families a query refers to.
enum class StirlingKind { S2Y, S1Y, S2YL, S1YL };

// Probabilistic Stirling triangles from powers of e_Y(t) = E[e^{Yt}] - 1 and
// of its compositional inverse. The degenerate versions use
// e_{Y,lambda}(t) = E[e_lambda^Y(t)] - 1 instead and reduce to the plain ones
// at lambda = 0. First-kind triangles require E[Y] != 0.
Triangle s2y_triangle(const RVSpec& rv, int max_n);
Triangle s1y_triangle(const RVSpec& rv, int max_n);
Triangle s2y_degen_triangle(const RVSpec& rv, const Rational& lambda, int max_n);
Triangle s1y_degen_triangle(const RVSpec& rv, const Rational& lambda, int max_n);

// Moments E[S_j^n] of the partial sums S_j = Y_1 + ... + Y_j of independent
// copies of Y, built by binomial convolution.
class PartialSumMoments {
public:
    PartialSumMoments(const RVSpec& rv, int max_j, int max_n);

    int max_j() const { return static_cast<int>(m_.size()) - 1; }
    int max_n() const { return static_cast<int>(m_.front().size()) - 1; }
    const Rational& at(int j, int n) const;

private:
    std::vector<std::vector<Rational>> m_;
};

// Second-kind numbers through the alternating binomial sum over partial-sum
// moments -- an oracle path independent of series powers. The degenerate
// version converts E[S_j^n] to E[(S_j)_{n,lambda}] with classical first-kind
// Stirling numbers.
Rational s2y_via_moments(const RVSpec& rv, int n, int k);
Rational s2y_degen_via_moments(const RVSpec& rv, const Rational& lambda, int n, int k);

// Cumulants kappa_1..kappa_max_n of Y, from the alternating factorial sum
// over the second-kind triangle; equal to the EGF coefficients of
// log E[e^{Yt}].
class CumulantSequence {
public:
    explicit CumulantSequence(std::vector<Rational> kappa);
    int max_n() const { return static_cast<int>(kappa_.size()) - 1; }
    const Rational& at(int n) const; // 1 <= n <= max_n

private:
    std::vector<Rational> kappa_;
};

CumulantSequence cumulants(const RVSpec& rv, int max_n);

// log E[e^{Yt}] and its compositional inverse, plus the degenerate pair.
// The inverses require E[Y] != 0.
EgfSeries fy_bar_series(const RVSpec& rv, int order);
EgfSeries fy_series(const RVSpec& rv, int order);
EgfSeries fy_bar_degen_series(const RVSpec& rv, const Rational& lambda, int order);
EgfSeries fy_degen_series(const RVSpec& rv, const Rational& lambda, int order);

// The comparison numbers s_Y(n,k) built on the cumulant generating function:
// (1/k!) (log E[e^{Yt}])^k = sum_n (-1)^(n-k) s_Y(n,k) t^n/n!.
Rational adell_benyi_s(const RVSpec& rv, int n, int k);

// Closed-form value of a probabilistic Stirling number. Finite sums are
// exact; the one genuinely infinite case (normal, first kind, degenerate)
// yields a truncated partial sum reported in floating point.
struct ClosedFormValue {
    std::optional<Rational> exact;
    std::optional<double> partial;
    int terms = 0;
};

bool closed_form_available(const RVSpec& rv, StirlingKind kind);
ClosedFormValue closed_form(const RVSpec& rv, StirlingKind kind, const Rational& lambda,
                            int n, int k, int partial_terms = 40);

// Specialized second-kind closed forms for the uniform variable on (0, b).
Rational uniform0_s2y_closed(const Rational& b, int n, int k);
Rational uniform0_s2y_degen_closed(const Rational& b, const Rational& lambda, int n, int k);

// Raw truncated sum behind the normal first-kind degenerate closed form;
// evaluates to ~0 for n < k and to lambda^k times the number for n >= k.
Rational normal_s1y_degen_sum(const NormalRV& rv, const Rational& lambda, int n, int k,
                              int terms);

struct VerifyReport {
    bool ok = true;
    std::string detail; // first violation when !ok
};

// Exact orthogonality of the second- and first-kind triangles, both
// multiplication orders; checks the degenerate pair too when lambda != 0.
VerifyReport verify_orthogonality(const RVSpec& rv, const Rational& lambda, int max_n);

// Low-level check used by verify_orthogonality and by perturbation tests.
std::optional<std::string> orthogonality_violation(const Triangle& s2, const Triangle& s1);

// The catalog's vanishing identities (exact zero for 0 <= n < k), for the
// geometric, gamma, normal and uniform variables; degenerate variants are
// included when lambda != 0 (the normal degenerate case is an infinite sum
// and is excluded here -- see normal_s1y_degen_sum).
VerifyReport verify_vanishing(const RVSpec& rv, const Rational& lambda, int max_k);

} // namespace probstirling
