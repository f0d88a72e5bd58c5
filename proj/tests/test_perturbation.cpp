#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmv/perturbation.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace cmv;
using testutil::random_point_in_disk;
using testutil::random_proper;

TEST_CASE("schatten norms of structured matrices") {
    CHECK(std::abs(schatten_norm(Matrix::identity(7), 1.0) - 7.0) < 1e-12);

    SeededRng rng(111);
    // A rank-one outer product has the single singular value |u||v|.
    const int n = 6;
    std::vector<cplx> u(n), v(n);
    double nu = 0.0, nv = 0.0;
    for (int i = 0; i < n; ++i) {
        u[i] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        v[i] = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
        nu += std::norm(u[i]);
        nv += std::norm(v[i]);
    }
    Matrix outer(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) outer(i, j) = u[i] * std::conj(v[j]);
    // Singular values come from the Gram matrix, so the mathematically zero
    // ones surface at sqrt(eps) scale and the p = 1 sum inherits that floor.
    const double expect = std::sqrt(nu) * std::sqrt(nv);
    for (double p : {1.0, 2.0, 3.5}) CHECK(std::abs(schatten_norm(outer, p) - expect) < 1e-6);
}

TEST_CASE("scalar rho-difference inequalities") {
    SeededRng rng(112);
    const double r = 0.92;
    for (int trial = 0; trial < 10000; ++trial) {
        const cplx z = random_point_in_disk(rng, r);
        const cplx w = random_point_in_disk(rng, r);
        const double dz = std::sqrt(1.0 - std::norm(z));
        const double dw = std::sqrt(1.0 - std::norm(w));
        CHECK(std::abs(dz - dw) <= std::abs(z - w) / std::sqrt(1.0 - r * r) + 1e-14);
        CHECK(std::abs(dz - dw) <= std::sqrt(2.0 * std::abs(z - w)) + 1e-14);
    }
}

TEST_CASE("identical sequences give a zero report") {
    const VerblunskySequence a = VerblunskySequence::proper({0.3, cplx(0.1, -0.4)});
    const SchattenReport r = cmv_diff_bound(a, a, 2.0);
    CHECK(r.lhs_norm == 0.0);
    CHECK(r.rhs_bound == 0.0);
    CHECK(r.slack == 0.0);
}

TEST_CASE("hand-checked trace-norm bound for a single coefficient move") {
    const SchattenReport r = cmv_diff_bound(VerblunskySequence::proper({0.5}),
                                            VerblunskySequence::proper({0.0}), 1.0);
    // Only one 2x2 block of L changes and M is shared, so the difference is
    // that block times a unitary. The block is sqrt(|dalpha|^2 + drho^2)
    // times a unitary itself, giving two equal singular values and trace
    // norm 2 sqrt(1/4 + (1 - sqrt(3)/2)^2) = sqrt(6) - sqrt(2).
    const double expect_lhs = std::sqrt(6.0) - std::sqrt(2.0);
    const double expect_rhs = 2.0 * (0.5 + (1.0 - std::sqrt(3.0) / 2.0));
    CHECK(std::abs(r.lhs_norm - expect_lhs) < 1e-10);
    CHECK(std::abs(r.rhs_bound - expect_rhs) < 1e-12);
    CHECK(r.slack >= 0.0);
}

TEST_CASE("all three bound variants hold across random pairs and p") {
    SeededRng rng(113);
    const double inf = std::numeric_limits<double>::infinity();
    for (double p : {1.0, 2.0, inf}) {
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng.uniform() * 6);
            const VerblunskySequence a = VerblunskySequence::proper(random_proper(rng, n));
            const VerblunskySequence b = VerblunskySequence::proper(random_proper(rng, n));
            const SchattenReport r = cmv_diff_bound(a, b, p);
            CHECK(r.slack >= -1e-10);
            REQUIRE(r.rhs_alpha_only.has_value());
            CHECK(*r.rhs_alpha_only - r.lhs_norm >= -1e-10);
            CHECK(r.rhs_root_variant - r.lhs_norm >= -1e-10);
        }
    }
    CHECK_THROWS(cmv_diff_bound(VerblunskySequence::proper({0.1}),
                                VerblunskySequence::proper({0.2}), 0.5));
}

TEST_CASE("szego function of simple supports") {
    const VerblunskySequence free = VerblunskySequence::proper(std::vector<cplx>(3, 0.0));
    for (cplx z : {cplx(0.0), cplx(0.5, 0.2), cplx(-0.3, -0.6)})
        CHECK(std::abs(szego_function(free, z) - 1.0) < 1e-14);

    const double a = 0.4;
    const VerblunskySequence single = VerblunskySequence::proper({a, 0.0});
    const double rho = std::sqrt(1.0 - a * a);
    for (cplx z : {cplx(0.2, 0.3), cplx(-0.6, 0.1)})
        CHECK(std::abs(szego_function(single, z) - rho / (1.0 - a * z)) < 1e-14);

    SeededRng rng(114);
    const std::vector<cplx> coeffs = random_proper(rng, 5);
    const VerblunskySequence alphas = VerblunskySequence::proper(coeffs);
    double rho_prod = 1.0;
    for (int j = 0; j < 5; ++j) rho_prod *= alphas.rho(j);
    CHECK(std::abs(szego_function(alphas, 0.0) - rho_prod) < 1e-13);
    CHECK_THROWS(szego_function(alphas, cplx(1.0, 0.2)));
}

TEST_CASE("determinant ratio equals the szego-function ratio") {
    const VerblunskySequence free = VerblunskySequence::proper(std::vector<cplx>(4, 0.0));
    CHECK(std::abs(det_ratio(free, cplx(0.3, 0.5)) - 1.0) < 1e-13);

    const double a = 0.35;
    const VerblunskySequence single = VerblunskySequence::proper({a, 0.0});
    for (cplx z : {cplx(0.4, 0.1), cplx(-0.2, 0.5)})
        CHECK(std::abs(det_ratio(single, z) - (1.0 - a * z)) < 1e-12);

    SeededRng rng(115);
    for (int trial = 0; trial < 20; ++trial) {
        const int support = 1 + static_cast<int>(rng.uniform() * 4);
        const VerblunskySequence alphas =
            VerblunskySequence::proper(random_proper(rng, support, 0.8));
        const cplx z = random_point_in_disk(rng, 0.85);
        const cplx via_det = det_ratio(alphas, z);
        const cplx via_szego = szego_function(alphas, 0.0) / szego_function(alphas, z);
        CHECK(std::abs(via_det - via_szego) < 1e-10);
    }
}

TEST_CASE("regularized determinant bridges through the explicit trace") {
    // Two-coefficient sequence by hand: the trace picks up one band term
    // past -z w_1, namely -alpha_1 rho_0 z^2.
    {
        const cplx a(0.3, -0.2), b(-0.1, 0.5);
        const VerblunskySequence two = VerblunskySequence::proper({a, b});
        const double rho0 = std::sqrt(1.0 - std::norm(a));
        const cplx z(0.4, 0.3);
        const cplx expect = -z * (a - b * std::conj(a)) - b * rho0 * z * z;
        CHECK(std::abs(det_ratio_trace(two, z) - expect) < 1e-13);
    }

    SeededRng rng(116);
    for (int trial = 0; trial < 20; ++trial) {
        const int support = 2 + static_cast<int>(rng.uniform() * 3);
        const std::vector<cplx> coeffs = random_proper(rng, support, 0.8);
        const VerblunskySequence alphas = VerblunskySequence::proper(coeffs);
        const cplx z = random_point_in_disk(rng, 0.8);

        // The closed-form trace against the numerical one buried inside
        // det2_ratio: det = det2 * exp(trace).
        const cplx trace = det_ratio_trace(alphas, z);
        const cplx full = det_ratio(alphas, z);
        const cplx regularized = det2_ratio(alphas, z);
        CHECK(std::abs(full - regularized * std::exp(trace)) < 1e-10);
    }

    // With a single nonzero coefficient the trace is -z w_1 on the nose, so
    // the regularized determinant carries exactly the e^{-z w_1} factor.
    // The sign matters: e^{+z w_1} would be wrong.
    for (int trial = 0; trial < 10; ++trial) {
        const cplx a = random_point_in_disk(rng, 0.9);
        const VerblunskySequence single = VerblunskySequence::proper({a});
        const cplx z = random_point_in_disk(rng, 0.8);
        CHECK(std::abs(det_ratio_trace(single, z) - (-z * a)) < 1e-15);
        const cplx full = det_ratio(single, z);
        const cplx regularized = det2_ratio(single, z);
        CHECK(std::abs(full - regularized * std::exp(-z * a)) < 1e-12);
        if (std::abs(z * a) > 0.05)
            CHECK(std::abs(full - regularized * std::exp(z * a)) > 1e-3);
    }
}
