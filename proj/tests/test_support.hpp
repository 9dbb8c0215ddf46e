#pragma once

// Shared helpers for the test suites: deterministic random generators for
// rationals/series/polynomials and brute-force oracles that stay independent
// of the library's computation paths.

#include "probstirling/egf_series.hpp"
#include "probstirling/rational.hpp"

#include <random>
#include <vector>

namespace probstirling::testing {

inline std::mt19937_64 make_gen(unsigned long seed = 987654321u) {
    return std::mt19937_64(seed);
}

inline Rational random_rational(std::mt19937_64& gen, long max_num = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(gen), den(gen));
}

inline Rational random_nonzero_rational(std::mt19937_64& gen, long max_num = 9,
                                        long max_den = 5) {
    for (;;) {
        const Rational r = random_rational(gen, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline EgfSeries random_series(std::mt19937_64& gen, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (auto& x : c) x = random_rational(gen);
    return EgfSeries(order, std::move(c));
}

inline EgfSeries random_delta_series(std::mt19937_64& gen, int order) {
    EgfSeries s = random_series(gen, order);
    std::vector<Rational> c = s.coeffs();
    c[0] = Rational(0);
    c[1] = random_nonzero_rational(gen);
    return EgfSeries(order, std::move(c));
}

// EGF product recomputed through ordinary coefficients: divide by n!, do a
// plain polynomial convolution, multiply back. Exercises a different code
// path than the binomial convolution in the library.
inline EgfSeries mul_oracle(const EgfSeries& a, const EgfSeries& b) {
    const int N = a.order();
    std::vector<Rational> fa(static_cast<size_t>(N) + 1), fb(fa), fc(fa);
    Rational fact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= Rational(n);
        fa[n] = a[n] / fact;
        fb[n] = b[n] / fact;
    }
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i <= n; ++i) fc[n] += fa[i] * fb[n - i];
    std::vector<Rational> out(static_cast<size_t>(N) + 1);
    fact = Rational(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= Rational(n);
        out[n] = fc[n] * fact;
    }
    return EgfSeries(N, std::move(out));
}

// Composition by direct substitution of the truncated polynomial g into f,
// again through ordinary coefficients.
inline EgfSeries compose_oracle(const EgfSeries& f, const EgfSeries& g) {
    const int N = f.order();
    std::vector<Rational> ff(static_cast<size_t>(N) + 1), fg(ff);
    Rational fact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= Rational(n);
        ff[n] = f[n] / fact;
        fg[n] = g[n] / fact;
    }
    // result = sum_k ff[k] * g(t)^k, all as ordinary truncated polynomials
    std::vector<Rational> res(static_cast<size_t>(N) + 1);
    std::vector<Rational> gpow(static_cast<size_t>(N) + 1);
    gpow[0] = Rational(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            std::vector<Rational> next(static_cast<size_t>(N) + 1);
            for (int i = 0; i <= N; ++i)
                for (int j = 0; i + j <= N; ++j) next[i + j] += gpow[i] * fg[j];
            gpow = std::move(next);
        }
        if (ff[k].is_zero()) continue;
        for (int n = 0; n <= N; ++n) res[n] += ff[k] * gpow[n];
    }
    std::vector<Rational> out(static_cast<size_t>(N) + 1);
    fact = Rational(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= Rational(n);
        out[n] = res[n] * fact;
    }
    return EgfSeries(N, std::move(out));
}

// Count the set partitions of {1..n} with exactly k blocks by enumerating
// restricted growth strings.
inline long count_partitions(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    long count = 0;
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    for (;;) {
        int blocks = 0;
        for (int i = 0; i < n; ++i) blocks = std::max(blocks, rgs[i] + 1);
        if (blocks == k) ++count;
        // next restricted growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] <= prefix_max) break;
        }
        if (i == 0) return count;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
}

// Bell numbers by summing the partition counts.
inline long bell_number(int n) {
    long total = 0;
    for (int k = 0; k <= n; ++k) total += count_partitions(n, k);
    return total;
}

// Classical Stirling recurrences, used only as test oracles.
inline Rational stirling2_recurrence(int n, int k) {
    if (n == 0 && k == 0) return Rational(1);
    if (n <= 0 || k <= 0 || k > n) return Rational(0);
    return Rational(k) * stirling2_recurrence(n - 1, k) + stirling2_recurrence(n - 1, k - 1);
}

inline Rational stirling1_recurrence(int n, int k) {
    if (n == 0 && k == 0) return Rational(1);
    if (n <= 0 || k <= 0 || k > n) return Rational(0);
    return stirling1_recurrence(n - 1, k - 1) - Rational(n - 1) * stirling1_recurrence(n - 1, k);
}

} // namespace probstirling::testing
