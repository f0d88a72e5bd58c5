#pragma once

// Shared fixtures for the test binaries: deterministic random data built on
// the library's counter-based generator, plus small statistics helpers used
// by the distribution checks.

#include "cmv/densemat.hpp"
#include "cmv/opuc.hpp"
#include "cmv/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace testutil {

using cmv::cplx;

inline cplx random_point_in_disk(cmv::SeededRng& rng, double rmax) {
    const double r = rmax * std::sqrt(rng.uniform());
    return std::polar(r, rng.angle());
}

inline std::vector<cplx> random_proper(cmv::SeededRng& rng, int n, double rmax = 0.9) {
    std::vector<cplx> out(n);
    for (cplx& a : out) a = random_point_in_disk(rng, rmax);
    return out;
}

inline std::vector<cplx> random_improper(cmv::SeededRng& rng, int n, double rmax = 0.9) {
    std::vector<cplx> out = random_proper(rng, n - 1, rmax);
    out.push_back(rng.unit_circle());
    return out;
}

inline double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (cplx x : v) m = std::max(m, std::abs(x));
    return m;
}

// Kolmogorov-Smirnov distance of a sorted sample against a CDF, and the
// asymptotic tail probability Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2).
template <typename Cdf>
double ks_statistic(std::vector<double> sample, Cdf cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

inline double kolmogorov_tail(double lambda) {
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-16) break;
    }
    return std::min(1.0, std::max(0.0, sum));
}

template <typename Cdf>
double ks_pvalue(const std::vector<double>& sample, Cdf cdf) {
    const double d = ks_statistic(sample, cdf);
    const double n = static_cast<double>(sample.size());
    const double lambda = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
    return kolmogorov_tail(lambda);
}

} // namespace testutil
