#include "cmv/densemat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cmv {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            cplx a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix::operator-: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::conj() const {
    Matrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = std::conj((*this)(i, j));
    return out;
}

std::vector<cplx> Matrix::apply(const std::vector<cplx>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<cplx> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const cplx& x : data_) m = std::max(m, std::abs(x));
    return m;
}

double Matrix::frobenius() const {
    double s = 0.0;
    for (const cplx& x : data_) s += std::norm(x);
    return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).max_abs();
}

LuFactors lu_factor(Matrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("lu_factor: square matrix required");
    const int n = a.rows();
    LuFactors f{std::move(a), std::vector<int>(n), 1};
    for (int i = 0; i < n; ++i) f.perm[i] = i;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(f.lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(f.lu(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best == 0.0) throw std::domain_error("lu_factor: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        const cplx inv_piv = 1.0 / f.lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            cplx m = f.lu(i, k) * inv_piv;
            f.lu(i, k) = m;
            if (m == 0.0) continue;
            for (int j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    return f;
}

std::vector<cplx> lu_solve(const LuFactors& f, std::vector<cplx> b) {
    const int n = f.lu.rows();
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("lu_solve: size mismatch");
    std::vector<cplx> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
    return x;
}

Matrix lu_inverse(const LuFactors& f) {
    const int n = f.lu.rows();
    Matrix out(n, n);
    std::vector<cplx> e(n);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), cplx(0.0));
        e[j] = 1.0;
        std::vector<cplx> col = lu_solve(f, e);
        for (int i = 0; i < n; ++i) out(i, j) = col[i];
    }
    return out;
}

cplx lu_det(const LuFactors& f) {
    cplx d = static_cast<double>(f.sign);
    for (int i = 0; i < f.lu.rows(); ++i) d *= f.lu(i, i);
    return d;
}

cplx det(const Matrix& a) { return lu_det(lu_factor(a)); }
Matrix inverse(const Matrix& a) { return lu_inverse(lu_factor(a)); }

namespace {

double off_diagonal_mass(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

HermitianEigen hermitian_eigen(const Matrix& a_in) {
    if (a_in.rows() != a_in.cols()) throw std::invalid_argument("hermitian_eigen: square matrix required");
    const int n = a_in.rows();
    Matrix a = a_in;
    Matrix v = Matrix::identity(n);
    const double scale = std::max(a.frobenius(), 1e-300);
    const double tol = 1e-13 * scale;

    int sweep = 0;
    for (; sweep < 60 && off_diagonal_mass(a) > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Unitary 2x2 that zeroes the (p,q) entry: phase out apq, then
                // a real Jacobi rotation on the resulting symmetric block.
                const cplx phase = apq / std::abs(apq);
                const double g = std::abs(apq);
                const double tau = (aqq - app) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;   // complex sine carrying the phase
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(sp) * akq;
                    a(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sp * aqk;
                    a(q, k) = std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(sp) * vkq;
                    v(k, q) = sp * vkp + c * vkq;
                }
            }
        }
    }

    if (off_diagonal_mass(a) > tol)
        throw std::runtime_error("hermitian_eigen: Jacobi sweeps did not converge");

    HermitianEigen out;
    out.values.resize(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) { out.values[i] = a(i, i).real(); order[i] = i; }
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });
    std::sort(out.values.begin(), out.values.end());
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    return out;
}

Matrix hermitian_sqrt(const Matrix& a) {
    HermitianEigen e = hermitian_eigen(a);
    const int n = a.rows();
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = std::sqrt(std::max(e.values[i], 0.0));
    return e.vectors * d * e.vectors.adjoint();
}

std::vector<double> singular_values(const Matrix& a) {
    HermitianEigen e = hermitian_eigen(a.adjoint() * a);
    std::vector<double> s(e.values.size());
    for (size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(std::max(e.values[i], 0.0));
    std::reverse(s.begin(), s.end());
    return s;
}

double schatten_norm(const Matrix& a, double p) {
    std::vector<double> s = singular_values(a);
    if (std::isinf(p) && p > 0.0) return s.empty() ? 0.0 : s.front();   // operator norm
    if (p < 1.0 || std::isnan(p)) throw std::invalid_argument("schatten_norm: p in [1, infinity] required");
    double acc = 0.0;
    for (double x : s) acc += std::pow(x, p);
    return std::pow(acc, 1.0 / p);
}

NormalEigen normal_eigen(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("normal_eigen: square matrix required");
    const int n = a.rows();
    const Matrix ah = a.adjoint();
    Matrix re(n, n), im(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            re(i, j) = 0.5 * (a(i, j) + ah(i, j));
            im(i, j) = cplx(0.0, -0.5) * (a(i, j) - ah(i, j));
        }
    HermitianEigen e1 = hermitian_eigen(re);

    NormalEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    const double cluster_tol = 1e-9 * std::max(1.0, re.frobenius());

    int i = 0;
    while (i < n) {
        int j = i + 1;
        while (j < n && e1.values[j] - e1.values[i] < cluster_tol) ++j;
        const int m = j - i;
        if (m == 1) {
            std::vector<cplx> v(n);
            for (int k = 0; k < n; ++k) v[k] = e1.vectors(k, i);
            std::vector<cplx> av = a.apply(v);
            cplx lam = 0.0;
            for (int k = 0; k < n; ++k) lam += std::conj(v[k]) * av[k];
            out.values[i] = lam;
            for (int k = 0; k < n; ++k) out.vectors(k, i) = v[k];
        } else {
            // Project the skew part onto the cluster and rediagonalize.
            Matrix basis(n, m);
            for (int c = 0; c < m; ++c)
                for (int k = 0; k < n; ++k) basis(k, c) = e1.vectors(k, i + c);
            Matrix small = basis.adjoint() * im * basis;
            HermitianEigen e2 = hermitian_eigen(small);
            Matrix rotated = basis * e2.vectors;
            for (int c = 0; c < m; ++c) {
                std::vector<cplx> v(n);
                for (int k = 0; k < n; ++k) v[k] = rotated(k, c);
                std::vector<cplx> av = a.apply(v);
                cplx lam = 0.0;
                for (int k = 0; k < n; ++k) lam += std::conj(v[k]) * av[k];
                out.values[i + c] = lam;
                for (int k = 0; k < n; ++k) out.vectors(k, i + c) = v[k];
            }
        }
        i = j;
    }
    return out;
}

} // namespace cmv
