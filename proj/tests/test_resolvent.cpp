#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmv/resolvent.hpp"
#include "cmv/cmv_matrix.hpp"
#include "cmv/rank_one.hpp"
#include "cmv/spectral.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace cmv;
using testutil::random_improper;
using testutil::random_proper;

namespace {

// Coefficients with small support inside a longer zero tail.
VerblunskySequence padded_support(SeededRng& rng, int support, int length) {
    std::vector<cplx> coeffs(length, 0.0);
    for (int j = 0; j < support; ++j) coeffs[j] = testutil::random_point_in_disk(rng, 0.8);
    return VerblunskySequence::proper(coeffs);
}

} // namespace

TEST_CASE("Caratheodory function of discrete measures") {
    const DiscreteCircleMeasure mu({CircleAtom{0.0, 0.25}, CircleAtom{1.3, 0.75}});
    CHECK(caratheodory_discrete(mu, 0.0).f == cplx(1.0));

    const DiscreteCircleMeasure point({CircleAtom{0.0, 1.0}});
    CHECK(std::abs(caratheodory_discrete(point, 0.5).f - 3.0) < 1e-14);

    CHECK_THROWS(caratheodory_discrete(mu, cplx(1.0, 0.0)));
    CHECK_THROWS(caratheodory_discrete(mu, cplx(0.8, 0.7)));
}

TEST_CASE("Caratheodory function of eventually free sequences") {
    const VerblunskySequence free = VerblunskySequence::proper(std::vector<cplx>(4, 0.0));
    for (cplx z : {cplx(0.0), cplx(0.4, 0.3), cplx(-0.7, 0.1)})
        CHECK(std::abs(caratheodory_limit(free, z).f - 1.0) < 1e-14);

    const VerblunskySequence single = VerblunskySequence::proper({0.5, 0.0, 0.0});
    CHECK(std::abs(caratheodory_limit(single, 0.0).f - 1.0) < 1e-14);

    SeededRng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const VerblunskySequence alphas =
            VerblunskySequence::proper({testutil::random_point_in_disk(rng, 0.9)});
        const cplx z = testutil::random_point_in_disk(rng, 0.95);
        CHECK(caratheodory_limit(alphas, z).f.real() > 0.0);
    }

    CHECK_THROWS(caratheodory_limit(VerblunskySequence::improper({0.2, 1.0}), 0.3));
}

TEST_CASE("Schur transform and its inverse") {
    CHECK(std::abs(schur_from_caratheodory(1.0, cplx(0.3, 0.1))) < 1e-15);

    SeededRng rng(102);
    for (int trial = 0; trial < 50; ++trial) {
        const VerblunskySequence alphas = padded_support(rng, 3, 6);
        const cplx z = testutil::random_point_in_disk(rng, 0.9);
        if (std::abs(z) < 0.05) continue;
        const cplx f_val = caratheodory_limit(alphas, z).f;
        const cplx schur = schur_from_caratheodory(f_val, z);
        CHECK(std::abs(schur) <= 1.0 + 1e-12);
        const cplx back = (1.0 + z * schur) / (1.0 - z * schur);
        CHECK(std::abs(back - f_val) < 1e-14 * std::abs(f_val));
    }
}

TEST_CASE("scaling the first column rotates the Schur function") {
    SeededRng rng(103);
    const int n = 6;
    const std::vector<cplx> coeffs = random_improper(rng, n);
    const cplx lambda = std::polar(1.0, rng.angle());
    const BandedUnitary c = build_cmv(VerblunskySequence::improper(coeffs));
    const BandedUnitary twisted = column_phase(c, 0, lambda);

    const DiscreteCircleMeasure mu =
        spectrum_to_measure(spectrum_of_unitary(c.to_dense()));
    const DiscreteCircleMeasure mu_twisted =
        spectrum_to_measure(spectrum_of_unitary(twisted.to_dense()));

    for (cplx z : {cplx(0.3, 0.2), cplx(-0.5, 0.4), cplx(0.1, -0.6)}) {
        const cplx f0 = schur_from_caratheodory(caratheodory_discrete(mu, z).f, z);
        const cplx f1 = schur_from_caratheodory(caratheodory_discrete(mu_twisted, z).f, z);
        CHECK(std::abs(f1 - f0 / lambda) < 1e-8);
    }
}

TEST_CASE("chi and x families are pointwise eigenfunctions of the matrix") {
    SeededRng rng(104);
    const int n = 24;
    const VerblunskySequence alphas = padded_support(rng, 5, n);
    const cplx z = std::polar(0.6, 1.9);
    const WeylSolutions w = weyl_solutions(alphas, z, n);
    const BandedUnitary c = build_cmv(alphas);

    // Transpose relation for chi, direct relation for x; rows near the window
    // edge are truncated and skipped.
    for (int l = 0; l + 3 < n; ++l) {
        cplx via_chi = 0.0, via_x = 0.0;
        for (int k = std::max(0, l - 2); k <= l + 2; ++k) {
            via_chi += c.at(k, l) * w.chi[k];
            via_x += c.at(l, k) * w.x[k];
        }
        CHECK(std::abs(via_chi - z * w.chi[l]) < 1e-12);
        CHECK(std::abs(via_x - z * w.x[l]) < 1e-12);
    }
}

TEST_CASE("free-case Weyl combinations collapse to powers") {
    const VerblunskySequence free = VerblunskySequence::proper(std::vector<cplx>(12, 0.0));
    const cplx z(0.35, -0.3);
    const WeylSolutions w = weyl_solutions(free, z, 12);
    CHECK(std::abs(w.f - 1.0) < 1e-14);
    for (int l = 1; l <= 5; ++l) {
        const cplx zl = std::pow(z, l);
        CHECK(std::abs(w.p[2 * l] - 2.0 * zl) < 1e-13);
        CHECK(std::abs(w.p[2 * l - 1]) < 1e-13);
        CHECK(std::abs(w.pi[2 * l - 1] - 2.0 * zl) < 1e-13);
        CHECK(std::abs(w.pi[2 * l]) < 1e-13);
    }
    CHECK_THROWS(weyl_solutions(free, cplx(1.1, 0.0), 6));
}

TEST_CASE("Weyl solutions decay geometrically past the support") {
    SeededRng rng(105);
    const int n = 40;
    const VerblunskySequence alphas = padded_support(rng, 6, n);
    const cplx z = std::polar(0.9, 0.4);
    const WeylSolutions w = weyl_solutions(alphas, z, n);
    // Odd entries vanish identically once the recursion runs free.
    for (int l = 5; 2 * l - 1 < n; ++l) CHECK(std::abs(w.p[2 * l - 1]) < 1e-12);
    // Even entries pick up one factor of z per step.
    for (int l = 5; 2 * l + 2 < n; ++l)
        CHECK(std::abs(w.p[2 * l + 2] - z * w.p[2 * l]) < 1e-12);
}

TEST_CASE("free diagonal resolvent entry vanishes at the origin index") {
    const VerblunskySequence free = VerblunskySequence::proper(std::vector<cplx>(8, 0.0));
    for (cplx z : {cplx(0.2, 0.1), cplx(-0.4, 0.4), cplx(0.05, -0.6)})
        CHECK(std::abs(cmv_resolvent_entry(free, z, 0, 0)) < 1e-14);
    CHECK_THROWS(cmv_resolvent_entry(free, 0.0, 0, 0));
}

TEST_CASE("resolvent entries match the inverse of a long truncation") {
    SeededRng rng(106);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<cplx> coeffs(64, 0.0);
        const int support = 2 + static_cast<int>(rng.uniform() * 5);
        for (int j = 0; j < support; ++j) coeffs[j] = testutil::random_point_in_disk(rng, 0.8);
        coeffs[63] = 1.0;
        const Matrix c64 = build_cmv(VerblunskySequence::improper(coeffs)).to_dense();

        const VerblunskySequence proper_version =
            VerblunskySequence::proper(std::vector<cplx>(coeffs.begin(), coeffs.begin() + 16));
        const cplx z = std::polar(rng.uniform(0.15, 0.7), rng.angle());

        Matrix shifted = c64;
        for (int i = 0; i < 64; ++i) shifted(i, i) -= z;
        const Matrix inv = inverse(shifted);
        for (int k = 0; k < 6; ++k)
            for (int l = 0; l < 6; ++l)
                CHECK(std::abs(cmv_resolvent_entry(proper_version, z, k, l) - inv(k, l)) < 1e-6);
    }
}

TEST_CASE("the resolvent solves its defining equation on interior rows") {
    SeededRng rng(107);
    const int n = 64;
    const VerblunskySequence alphas = padded_support(rng, 6, n);
    const BandedUnitary c = build_cmv(alphas);
    for (int trial = 0; trial < 5; ++trial) {
        const cplx z = std::polar(rng.uniform(0.15, 0.8), rng.angle());
        Matrix g(n, n);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) g(k, l) = cmv_resolvent_entry(alphas, z, k, l);
        for (int k = 0; k + 3 < n; ++k)
            for (int l = 0; l < n; ++l) {
                cplx acc = -z * g(k, l);
                for (int m = std::max(0, k - 2); m <= std::min(n - 1, k + 2); ++m)
                    acc += c.at(k, m) * g(m, l);
                CHECK(std::abs(acc - (k == l ? 1.0 : 0.0)) < 1e-10);
            }
    }
}

TEST_CASE("diagonal spectral integral identity on finite measures") {
    SeededRng rng(108);
    const int n_atoms = 6;
    const std::vector<cplx> coeffs = random_improper(rng, n_atoms);
    const VerblunskySequence alphas = VerblunskySequence::improper(coeffs);
    const DiscreteCircleMeasure mu = spectrum_to_measure(finite_cmv_spectrum(alphas));
    const auto phi = orthonormal_polys(alphas, n_atoms - 2);
    const auto psi = second_kind_polys(alphas, n_atoms - 2);

    for (cplx z : {cplx(0.3, 0.25), cplx(-0.2, 0.5), cplx(0.55, -0.1)}) {
        const cplx f_val = caratheodory_discrete(mu, z).f;
        for (int n = 0; n <= n_atoms - 2; ++n) {
            cplx lhs = 0.0;
            for (int i = 0; i < mu.size(); ++i) {
                const cplx lam = mu.point(i);
                lhs += mu.atoms()[i].weight * std::norm(phi[n].first.eval(lam)) / (lam - z);
            }
            const cplx rhs = phi[n].first.eval(z) *
                             (-psi[n].second.eval(z) + f_val * phi[n].second.eval(z)) /
                             (2.0 * std::pow(z, n + 1));
            CHECK(std::abs(lhs - rhs) < 1e-8);
        }
    }
}
