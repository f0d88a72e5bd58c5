#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmv/densemat.hpp"
#include "helpers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

using namespace cmv;
using testutil::random_point_in_disk;

namespace {

Matrix random_matrix(SeededRng& rng, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return m;
}

} // namespace

TEST_CASE("matrix product against a hand multiply") {
    Matrix a(2, 2), b(2, 2);
    a(0, 0) = 1;  a(0, 1) = cplx(0, 1);
    a(1, 0) = 2;  a(1, 1) = -1;
    b(0, 0) = 3;  b(0, 1) = 1;
    b(1, 0) = 0;  b(1, 1) = cplx(1, 1);
    const Matrix c = a * b;
    CHECK(std::abs(c(0, 0) - cplx(3, 0)) == 0.0);
    CHECK(std::abs(c(0, 1) - (cplx(1, 0) + cplx(0, 1) * cplx(1, 1))) == 0.0);
    CHECK(std::abs(c(1, 0) - cplx(6, 0)) == 0.0);
    CHECK(std::abs(c(1, 1) - (cplx(2, 0) - cplx(1, 1))) == 0.0);
}

TEST_CASE("adjoint conjugates and transposes") {
    SeededRng rng(11);
    const Matrix a = random_matrix(rng, 4);
    const Matrix ad = a.adjoint();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(ad(i, j) == std::conj(a(j, i)));
}

TEST_CASE("lu solve and inverse reproduce the identity") {
    SeededRng rng(12);
    const Matrix a = random_matrix(rng, 6);
    const Matrix inv = inverse(a);
    CHECK(max_abs_diff(a * inv, Matrix::identity(6)) < 1e-12);

    std::vector<cplx> b(6);
    for (cplx& x : b) x = cplx(rng.uniform(), rng.uniform());
    const std::vector<cplx> x = lu_solve(lu_factor(a), b);
    const std::vector<cplx> ax = a.apply(x);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(ax[i] - b[i]) < 1e-12);
}

TEST_CASE("determinant of a triangular matrix is the diagonal product") {
    Matrix t(3, 3);
    t(0, 0) = 2;  t(0, 1) = 5;           t(0, 2) = cplx(0, 1);
    t(1, 1) = cplx(0, 3);                t(1, 2) = -1;
    t(2, 2) = -4;
    CHECK(std::abs(det(t) - cplx(2) * cplx(0, 3) * cplx(-4)) < 1e-12);
}

TEST_CASE("hermitian eigensolver on a known 2x2") {
    Matrix a(2, 2);
    a(0, 0) = 2; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = 2;
    HermitianEigen eig = hermitian_eigen(a);
    std::vector<double> v = eig.values;
    std::sort(v.begin(), v.end());
    CHECK(std::abs(v[0] - 1.0) < 1e-14);
    CHECK(std::abs(v[1] - 3.0) < 1e-14);
    // residual A V = V diag(values)
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r) {
            cplx lhs = a(r, 0) * eig.vectors(0, c) + a(r, 1) * eig.vectors(1, c);
            CHECK(std::abs(lhs - eig.values[c] * eig.vectors(r, c)) < 1e-13);
        }
}

TEST_CASE("hermitian eigensolver diagonalizes random hermitian matrices") {
    SeededRng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform() * 7);
        Matrix a = random_matrix(rng, n);
        a = a + a.adjoint();
        const HermitianEigen eig = hermitian_eigen(a);
        Matrix d(n, n);
        for (int i = 0; i < n; ++i) d(i, i) = eig.values[i];
        CHECK(max_abs_diff(a * eig.vectors, eig.vectors * d) < 1e-11 * (1.0 + a.max_abs()));
        CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors, Matrix::identity(n)) < 1e-12);
    }
}

TEST_CASE("hermitian square root squares back") {
    SeededRng rng(14);
    Matrix a = random_matrix(rng, 5);
    a = a * a.adjoint();  // positive semidefinite
    const Matrix r = hermitian_sqrt(a);
    CHECK(max_abs_diff(r * r, a) < 1e-11 * (1.0 + a.max_abs()));
    CHECK(max_abs_diff(r, r.adjoint()) < 1e-12);
}

TEST_CASE("singular values of a diagonal matrix are the moduli") {
    Matrix d(3, 3);
    d(0, 0) = cplx(0, -2);
    d(1, 1) = 0.5;
    d(2, 2) = -3;
    const std::vector<double> s = singular_values(d);
    CHECK(std::abs(s[0] - 3.0) < 1e-13);
    CHECK(std::abs(s[1] - 2.0) < 1e-13);
    CHECK(std::abs(s[2] - 0.5) < 1e-13);
}

TEST_CASE("schatten norms on a known diagonal") {
    Matrix d(2, 2);
    d(0, 0) = 3;
    d(1, 1) = 4;
    CHECK(std::abs(schatten_norm(d, 1.0) - 7.0) < 1e-13);
    CHECK(std::abs(schatten_norm(d, 2.0) - 5.0) < 1e-13);
    CHECK(std::abs(schatten_norm(d, std::numeric_limits<double>::infinity()) - 4.0) < 1e-13);
    CHECK_THROWS_AS((void)schatten_norm(d, 0.5), std::invalid_argument);
}

TEST_CASE("schatten 2-norm equals the frobenius norm") {
    SeededRng rng(15);
    const Matrix a = random_matrix(rng, 6);
    CHECK(std::abs(schatten_norm(a, 2.0) - a.frobenius()) < 1e-11);
}

TEST_CASE("normal eigensolver on a plane rotation") {
    const double t = 0.7;
    Matrix u(2, 2);
    u(0, 0) = std::cos(t);  u(0, 1) = -std::sin(t);
    u(1, 0) = std::sin(t);  u(1, 1) = std::cos(t);
    const NormalEigen eig = normal_eigen(u);
    std::vector<double> args;
    for (cplx v : eig.values) {
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
        args.push_back(std::arg(v));
    }
    std::sort(args.begin(), args.end());
    CHECK(std::abs(args[0] + t) < 1e-12);
    CHECK(std::abs(args[1] - t) < 1e-12);
}

TEST_CASE("normal eigensolver reconstructs a random unitary") {
    SeededRng rng(16);
    // Product of plane rotations with random phases is unitary.
    const int n = 5;
    Matrix u = Matrix::identity(n);
    for (int k = 0; k + 1 < n; ++k) {
        Matrix g = Matrix::identity(n);
        const double t = rng.angle();
        const double c = std::cos(t), s = std::sin(t);
        const cplx ph = rng.unit_circle();
        g(k, k) = c * ph;
        g(k, k + 1) = -s;
        g(k + 1, k) = s * ph;
        g(k + 1, k + 1) = c;
        u = u * g;
    }
    const NormalEigen eig = normal_eigen(u);
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = eig.values[i];
    CHECK(max_abs_diff(u * eig.vectors, eig.vectors * d) < 1e-10);
}
