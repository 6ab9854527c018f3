#pragma once

// Small statistics helpers for the Monte Carlo harnesses.

#include <algorithm>
#include <cmath>
#include <vector>

#include "whitconv/errors.hpp"

namespace whitconv {

// Sum in a fixed pairwise-tree order: deterministic and accurate.
inline double pairwise_sum(const std::vector<double>& v, size_t lo, size_t hi) {
    size_t n = hi - lo;
    if (n <= 8) {
        double s = 0;
        for (size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    size_t mid = lo + n / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v, 0, v.size()); }

struct MeanSE {
    double mean = 0;
    double se = 0;
    size_t n = 0;
};

inline MeanSE mean_se(const std::vector<double>& v) {
    MeanSE r;
    r.n = v.size();
    if (r.n == 0) return r;
    r.mean = pairwise_sum(v) / static_cast<double>(r.n);
    if (r.n < 2) return r;
    std::vector<double> sq(v.size());
    for (size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - r.mean) * (v[i] - r.mean);
    double var = pairwise_sum(sq) / static_cast<double>(r.n - 1);
    r.se = std::sqrt(var / static_cast<double>(r.n));
    return r;
}

// One-sample Kolmogorov-Smirnov statistic against a CDF given as sorted sample
// values paired with CDF values at those points.
inline double ks_statistic(std::vector<double> sample, const std::vector<double>& cdf_at_sorted) {
    size_t n = sample.size();
    double d = 0;
    for (size_t i = 0; i < n; ++i) {
        double F = cdf_at_sorted[i];
        double lo = static_cast<double>(i) / n, hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::fabs(F - lo), std::fabs(F - hi)));
    }
    return d;
}

// Critical value for the one-sample KS test, asymptotic form c(alpha)/sqrt(n).
inline double ks_critical(double alpha_level, size_t n) {
    // c(0.01) = 1.62762, c(0.05) = 1.35810
    double c = alpha_level <= 0.01 ? 1.62762 : 1.35810;
    return c / std::sqrt(static_cast<double>(n));
}

// Two-sample KS statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        double fa = static_cast<double>(i) / a.size();
        double fb = static_cast<double>(j) / b.size();
        d = std::max(d, std::fabs(fa - fb));
    }
    return d;
}

inline double ks_two_sample_critical(double alpha_level, size_t n, size_t m) {
    double c = alpha_level <= 0.01 ? 1.62762 : 1.35810;
    return c * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
}

// Chi-square upper quantile via the Wilson-Hilferty approximation; adequate
// for the df ~ 30..100 used by the histogram tests.
inline double chi2_quantile(double prob, int df) {
    double z;
    if (prob >= 0.99)
        z = 2.3263478740408408;
    else if (prob >= 0.95)
        z = 1.6448536269514722;
    else
        z = inverse_normal_cdf(prob);
    double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
    return df * t * t * t;
}

} // namespace whitconv
