#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmv/cmv_matrix.hpp"
#include "cmv/random_models.hpp"
#include "helpers.hpp"

#include <cmath>
#include <numbers>

using namespace cmv;
using testutil::ks_pvalue;

namespace {

constexpr double pi = std::numbers::pi;

// Survival function of chi-square with even degrees of freedom, where the
// incomplete gamma collapses to a finite sum: e^{-s} sum_{i<df/2} s^i / i!.
double chi_square_pvalue_even_df(double x, int df) {
    REQUIRE(df % 2 == 0);
    const double s = 0.5 * x;
    double term = 1.0, sum = 1.0;
    for (int i = 1; i < df / 2; ++i) {
        term *= s / i;
        sum += term;
    }
    return std::exp(-s) * sum;
}

double two_sample_ks_pvalue(std::vector<double> x, std::vector<double> y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] <= y[j]) ++i; else ++j;
        d = std::max(d, std::abs(i / nx - j / ny));
    }
    const double ne = std::sqrt(nx * ny / (nx + ny));
    return testutil::kolmogorov_tail((ne + 0.12 + 0.11 / ne) * d);
}

// Equiprobable-bin goodness of fit of a sample against a CDF inverse.
template <typename InverseCdf>
double equiprobable_chi_square_pvalue(const std::vector<double>& sample,
                                      InverseCdf inverse, int bins) {
    std::vector<double> edges(bins - 1);
    for (int b = 1; b < bins; ++b)
        edges[b - 1] = inverse(static_cast<double>(b) / bins);
    std::vector<int> counts(bins, 0);
    for (double v : sample) {
        int b = static_cast<int>(std::lower_bound(edges.begin(), edges.end(), v) -
                                 edges.begin());
        ++counts[b];
    }
    const double expected = static_cast<double>(sample.size()) / bins;
    double x2 = 0.0;
    for (int c : counts) x2 += (c - expected) * (c - expected) / expected;
    return chi_square_pvalue_even_df(x2, bins - 1);
}

} // namespace

TEST_CASE("seeded generator is deterministic and well ranged") {
    SeededRng a(97), b(97);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    SeededRng r(98);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        const double t = r.angle();
        CHECK(t >= 0.0);
        CHECK(t < 2.0 * pi);
    }

    const SeededRng base(99);
    SeededRng s0 = base.derive(0);
    SeededRng s1 = base.derive(1);
    SeededRng s0_again = base.derive(0);
    CHECK(s0.next_u64() != s1.next_u64());
    CHECK(base.derive(0).next_u64() == s0_again.next_u64());
}

TEST_CASE("disk marginal density values and normalization") {
    CHECK(std::abs(disk_marginal_density(cplx(0.3, 0.1), 0.0) - 1.0 / pi) < 1e-15);
    CHECK(std::abs(disk_marginal_density(cplx(0.0), 1.0) - 2.0 / pi) < 1e-15);

    // The density is radial, so the disk integral reduces to one dimension:
    // 2 pi int_0^1 f(r) r dr, handled by composite Simpson.
    for (double nu : {0.0, 1.0, 2.5, 7.0}) {
        const int m = 2000;
        const double h = 1.0 / m;
        double acc = 0.0;
        for (int i = 0; i <= m; ++i) {
            const double r = i * h;
            const double f = disk_marginal_density(cplx(r * (1.0 - 1e-14)), nu) * r;
            const double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += w * f;
        }
        acc *= 2.0 * pi * h / 3.0;
        CHECK(std::abs(acc - 1.0) < 1e-6);
    }

    CHECK_THROWS(disk_marginal_density(cplx(1.0), 1.0));
    CHECK_THROWS(disk_marginal_density(cplx(0.2), -0.5));
}

TEST_CASE("cue coefficient marginals follow the beta radial law") {
    SeededRng rng(121);

    // Same seed, same draw.
    {
        SeededRng s1(5), s2(5);
        const VerblunskySequence d1 = sample_cue_alphas(6, s1);
        const VerblunskySequence d2 = sample_cue_alphas(6, s2);
        for (int j = 0; j < 6; ++j) CHECK(d1.alpha(j) == d2.alpha(j));
    }

    // n = 3 head: |alpha_0|^2 ~ Beta(1, 2) with mean 1/3.
    double acc = 0.0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t)
        acc += std::norm(sample_cue_alphas(3, rng).alpha(0));
    CHECK(std::abs(acc / trials - 1.0 / 3.0) < 0.01);

    // n = 5: each head slot j has |alpha_j|^2 ~ Beta(1, n - j - 1).
    const int draws = 10000;
    std::vector<std::vector<double>> r2(4);
    for (int t = 0; t < draws; ++t) {
        const VerblunskySequence seq = sample_cue_alphas(5, rng);
        for (int j = 0; j < 4; ++j) r2[j].push_back(std::norm(seq.alpha(j)));
        CHECK(std::abs(std::abs(seq.alpha(4)) - 1.0) < 1e-15);
    }
    for (int j = 0; j < 4; ++j) {
        const double m = 4.0 - j;
        const double p = equiprobable_chi_square_pvalue(
            r2[j], [&](double q) { return 1.0 - std::pow(1.0 - q, 1.0 / m); }, 11);
        CHECK(p >= 0.01);
    }

    // n = 2 head coefficient is uniform on the disk: squared radius uniform.
    std::vector<double> flat;
    for (int t = 0; t < draws; ++t)
        flat.push_back(std::norm(sample_cue_alphas(2, rng).alpha(0)));
    CHECK(ks_pvalue(flat, [](double t) { return t; }) >= 0.01);

    CHECK(sample_cue_alphas(4, rng).is_improper());
    CHECK_THROWS(sample_cue_alphas(0, rng));
}

TEST_CASE("su samples pin the terminal coefficient and share the cue head") {
    SeededRng rng(122);
    for (int t = 0; t < 20; ++t) {
        CHECK(sample_su_alphas(2, rng).alpha(1) == cplx(-1.0));
        CHECK(sample_su_alphas(3, rng).alpha(2) == cplx(1.0));
    }

    std::vector<double> cue_head, su_head;
    for (int t = 0; t < 10000; ++t) {
        cue_head.push_back(std::abs(sample_cue_alphas(4, rng).alpha(0)));
        su_head.push_back(std::abs(sample_su_alphas(4, rng).alpha(0)));
    }
    CHECK(two_sample_ks_pvalue(cue_head, su_head) >= 0.01);
}

TEST_CASE("so samples are real symmetric beta coefficients") {
    SeededRng rng(123);

    for (int t = 0; t < 50; ++t) {
        const VerblunskySequence seq = sample_so_alphas(5, rng);
        for (int k = 0; k < 4; ++k) {
            CHECK(seq.alpha(k).imag() == 0.0);
            CHECK(std::abs(seq.alpha(k).real()) < 1.0);
        }
        CHECK(seq.alpha(4) == cplx(1.0));    // (-1)^{n-1} with n = 5
    }
    CHECK(sample_so_alphas(4, rng).alpha(3) == cplx(-1.0));

    // n = 3, slot 0 has symmetric Beta exponent 0: uniform on (-1, 1).
    std::vector<double> u;
    for (int t = 0; t < 10000; ++t)
        u.push_back(sample_so_alphas(3, rng).alpha(0).real());
    CHECK(ks_pvalue(u, [](double x) { return 0.5 * (x + 1.0); }) >= 0.01);

    // Symmetry of every slot's law (covers the rejection, uniform, and
    // arcsine sampling paths at a = 2, 3/2, 1, 1/2).
    std::vector<double> mean(4, 0.0);
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        const VerblunskySequence seq = sample_so_alphas(5, rng);
        for (int k = 0; k < 4; ++k) mean[k] += seq.alpha(k).real();
    }
    for (int k = 0; k < 4; ++k) CHECK(std::abs(mean[k] / draws) <= 0.02);

    // The a = 1/2 branch is the arcsine law with CDF (2/pi) asin(sqrt(x)).
    std::vector<double> arcsine;
    for (int t = 0; t < 10000; ++t)
        arcsine.push_back(sample_symmetric_beta(0.5, rng));
    CHECK(ks_pvalue(arcsine, [](double x) {
              return 2.0 / pi * std::asin(std::sqrt(x));
          }) >= 0.01);

    // Rejection branch: Beta(5/2, 5/2) has mean 1/2 and variance 1/24.
    double m1 = 0.0, m2 = 0.0;
    for (int t = 0; t < 10000; ++t) {
        const double b = sample_symmetric_beta(2.5, rng);
        m1 += b;
        m2 += b * b;
    }
    m1 /= 10000.0;
    m2 /= 10000.0;
    CHECK(std::abs(m1 - 0.5) < 0.01);
    CHECK(std::abs((m2 - m1 * m1) - 1.0 / 24.0) < 0.002);

    CHECK_THROWS(sample_symmetric_beta(0.3, rng));
    CHECK_THROWS(sample_so_alphas(1, rng));
}

TEST_CASE("sampled spectra reproduce the small-n circular laws") {
    SeededRng rng(124);

    // n = 1: the lone eigenvalue is uniform on the circle.
    std::vector<double> angles;
    for (int t = 0; t < 10000; ++t) {
        const SpectrumResult s = sample_spectrum({Ensemble::Cue, 1}, rng);
        REQUIRE(s.eigenvalues.size() == 1);
        angles.push_back(std::arg(s.eigenvalues[0]) < 0.0
                             ? std::arg(s.eigenvalues[0]) + 2.0 * pi
                             : std::arg(s.eigenvalues[0]));
    }
    CHECK(ks_pvalue(angles, [](double t) { return t / (2.0 * pi); }) >= 0.01);

    // n = 2: squared gap moment 3 and the folded gap law (g - sin g)/pi.
    double moment = 0.0;
    std::vector<double> gaps;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        const SpectrumResult s = sample_spectrum({Ensemble::Cue, 2}, rng);
        REQUIRE(s.eigenvalues.size() == 2);
        moment += std::norm(s.eigenvalues[0] - s.eigenvalues[1]);
        double g = std::abs(std::arg(s.eigenvalues[0] / s.eigenvalues[1]));
        gaps.push_back(std::min(g, 2.0 * pi - g));
    }
    CHECK(std::abs(moment / trials - 3.0) < 0.05);
    CHECK(ks_pvalue(gaps, [](double g) { return (g - std::sin(g)) / pi; }) >= 0.01);
}

TEST_CASE("mean level density is flat and rotation invariant") {
    SeededRng rng(125);

    const int draws = 10000, n = 6, bins = 24;
    std::vector<int> counts(bins, 0);
    for (int t = 0; t < draws; ++t) {
        const SpectrumResult s = sample_spectrum({Ensemble::Cue, n}, rng);
        for (cplx ev : s.eigenvalues) {
            double a = std::arg(ev);
            if (a < 0.0) a += 2.0 * pi;
            ++counts[std::min(bins - 1, static_cast<int>(a / (2.0 * pi) * bins))];
        }
    }
    const double total = static_cast<double>(draws) * n;
    const double expected = total / bins;
    const double sigma = std::sqrt(total * (1.0 / bins) * (1.0 - 1.0 / bins));
    for (int b = 0; b < bins; ++b)
        CHECK(std::abs(counts[b] - expected) <= 3.0 * sigma);

    // Rigid rotation does not change the law: compare the lowest sorted
    // angle across plain draws and independently rotated draws.
    std::vector<double> plain, rotated;
    for (int t = 0; t < 4000; ++t) {
        const SpectrumResult s = sample_spectrum({Ensemble::Cue, 3}, rng);
        double lo = 2.0 * pi;
        for (cplx ev : s.eigenvalues) {
            double a = std::arg(ev);
            if (a < 0.0) a += 2.0 * pi;
            lo = std::min(lo, a);
        }
        plain.push_back(lo);

        const SpectrumResult r = sample_spectrum({Ensemble::Cue, 3}, rng);
        const double phase = rng.angle();
        lo = 2.0 * pi;
        for (cplx ev : r.eigenvalues) {
            double a = std::arg(ev) + phase;
            a = std::fmod(a, 2.0 * pi);
            if (a < 0.0) a += 2.0 * pi;
            lo = std::min(lo, a);
        }
        rotated.push_back(lo);
    }
    CHECK(two_sample_ks_pvalue(plain, rotated) >= 0.01);
}

TEST_CASE("su draws have unit determinant") {
    SeededRng rng(126);
    for (int n : {2, 3, 6}) {
        for (int t = 0; t < 50; ++t) {
            const VerblunskySequence seq = sample_su_alphas(n, rng);
            const cplx d = det(build_cmv(seq).to_dense());
            CHECK(std::abs(d - 1.0) <= 1e-10);
        }
    }
}
