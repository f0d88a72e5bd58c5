// Small dense complex matrices with just enough linear algebra for this
// project: LU solves, a cyclic-Jacobi Hermitian eigensolver, singular values,
// and an eigendecomposition for normal (in practice unitary) matrices.
// Everything here targets dimensions up to a few hundred.
#pragma once

#include <complex>
#include <vector>

namespace cmv {

using cplx = std::complex<double>;

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(cplx s) const;

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;

    std::vector<cplx> apply(const std::vector<cplx>& v) const;

    double max_abs() const;              // entrywise max modulus
    double frobenius() const;

private:
    int rows_, cols_;
    std::vector<cplx> data_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

// LU with partial pivoting. Throws std::domain_error on exactly singular input.
struct LuFactors {
    Matrix lu;
    std::vector<int> perm;
    int sign;
};
LuFactors lu_factor(Matrix a);
std::vector<cplx> lu_solve(const LuFactors& f, std::vector<cplx> b);
Matrix lu_inverse(const LuFactors& f);
cplx lu_det(const LuFactors& f);
cplx det(const Matrix& a);
Matrix inverse(const Matrix& a);

// Cyclic Jacobi on a Hermitian matrix; sweeps until the off-diagonal mass
// drops below 1e-13 * scale. Eigenvalues ascending, columns of `vectors`
// are the matching orthonormal eigenvectors.
struct HermitianEigen {
    std::vector<double> values;
    Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix& a);

// Hermitian positive-semidefinite square root; eigenvalues clamped at zero
// when rounding pushes them slightly negative.
Matrix hermitian_sqrt(const Matrix& a);

// Singular values (descending) via hermitian_eigen of A^* A.
std::vector<double> singular_values(const Matrix& a);

// Schatten p-norm for p in [1, infinity]; p = infinity (the floating-point
// value) gives the operator norm.
double schatten_norm(const Matrix& a, double p);

// Eigendecomposition of a normal matrix (unitary in all our uses) through the
// commuting Hermitian pair (A + A^*)/2 and (A - A^*)/(2i): diagonalize the
// first, then resolve each eigenvalue cluster with the second.
struct NormalEigen {
    std::vector<cplx> values;
    Matrix vectors;   // columns
};
NormalEigen normal_eigen(const Matrix& a);

} // namespace cmv
