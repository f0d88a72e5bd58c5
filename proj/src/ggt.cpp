#include "cmv/ggt.hpp"

#include "cmv/cmv_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace cmv {

GGTMatrix build_ggt(const VerblunskySequence& alphas) {
    const int n = alphas.size();
    if (n < 1) throw std::invalid_argument("build_ggt: empty sequence");
    auto alpha = [&](int j) -> cplx { return j < 0 ? cplx(-1.0) : alphas.alpha(j); };
    Matrix g(n, n);
    for (int l = 0; l < n; ++l) {
        for (int k = 0; k <= l; ++k) {
            cplx v = -std::conj(alpha(l)) * alpha(k - 1);
            for (int m = k; m < l; ++m) v *= alphas.rho(m);
            g(k, l) = v;
        }
        if (l + 1 < n) g(l + 1, l) = alphas.rho(l);
    }
    return GGTMatrix{std::move(g)};
}

Matrix AGRFactorization::factor_matrix(int i) const {
    const AGRFactor& f = factors.at(i);
    Matrix m = Matrix::identity(n);
    if (f.terminal) {
        m(n - 1, n - 1) = std::conj(f.alpha);
    } else {
        ThetaBlock t = theta(f.alpha);
        const int j = f.position;
        m(j, j) = t.a;
        m(j, j + 1) = t.b;
        m(j + 1, j) = t.c;
        m(j + 1, j + 1) = t.d;
    }
    return m;
}

Matrix AGRFactorization::product() const {
    Matrix acc = Matrix::identity(n);
    for (int i = 0; i < static_cast<int>(factors.size()); ++i)
        acc = acc * factor_matrix(i);
    return acc;
}

AGRFactorization agr_factor(const VerblunskySequence& alphas) {
    if (!alphas.is_improper())
        throw std::invalid_argument("agr_factor: terminal coefficient must be unimodular");
    const int n = alphas.size();
    AGRFactorization f;
    f.n = n;
    f.factors.reserve(n);
    for (int j = 0; j + 1 < n; ++j)
        f.factors.push_back(AGRFactor{j, false, alphas.alpha(j)});
    f.factors.push_back(AGRFactor{n - 1, true, alphas.alpha(n - 1)});
    return f;
}

Matrix agr_partial_product(const std::vector<cplx>& alphas, int dim) {
    const int len = static_cast<int>(alphas.size());
    if (len + 1 > dim)
        throw std::invalid_argument("agr_partial_product: dim too small for factor count");
    Matrix acc = Matrix::identity(dim);
    for (int j = 0; j < len; ++j) {
        ThetaBlock t = theta(alphas[j]);
        // Right-multiply acc by the elementary block on columns (j, j+1).
        for (int r = 0; r < dim; ++r) {
            cplx cj = acc(r, j), cj1 = acc(r, j + 1);
            acc(r, j) = cj * t.a + cj1 * t.c;
            acc(r, j + 1) = cj * t.b + cj1 * t.d;
        }
    }
    return acc;
}

LMFromAGR lm_from_agr(const VerblunskySequence& alphas) {
    if (!alphas.is_improper())
        throw std::invalid_argument("lm_from_agr: terminal coefficient must be unimodular");
    const int n = alphas.size();
    if (n == 1) {
        Matrix l(1, 1);
        l(0, 0) = std::conj(alphas.alpha(0));
        return LMFromAGR{Matrix::identity(1), std::move(l), Matrix::identity(1)};
    }

    std::vector<cplx> shifted(alphas.coeffs().begin() + 1, alphas.coeffs().end());
    LMFromAGR inner = lm_from_agr(VerblunskySequence::classify(std::move(shifted)));

    auto pad = [n](const Matrix& a) {
        Matrix out = Matrix::identity(n);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) out(i + 1, j + 1) = a(i, j);
        return out;
    };

    Matrix theta0 = Matrix::identity(n);
    ThetaBlock t = theta(alphas.alpha(0));
    theta0(0, 0) = t.a;
    theta0(0, 1) = t.b;
    theta0(1, 0) = t.c;
    theta0(1, 1) = t.d;

    Matrix m1 = pad(inner.m);
    LMFromAGR out;
    out.v = m1 * pad(inner.v);
    out.l = m1 * theta0;
    out.m = pad(inner.l);
    return out;
}

CosetMaps coset_maps(const std::vector<cplx>& z) {
    const int n = static_cast<int>(z.size());
    if (n < 2) throw std::invalid_argument("coset_maps: dimension >= 2 required");
    double nrm = 0.0;
    for (const cplx& v : z) nrm += std::norm(v);
    if (std::abs(nrm - 1.0) > 1e-10)
        throw std::invalid_argument("coset_maps: unit vector required");

    const cplx z0 = z[0];
    const double p2 = std::max(0.0, 1.0 - std::norm(z0));
    const double p = std::sqrt(p2);
    if (p <= 1e-12)
        throw std::domain_error("coset_maps: undefined when z is a multiple of delta_0");

    CosetMaps out;
    out.a = std::conj(z0);
    out.p = p;
    out.g2.resize(n);
    out.g2[0] = 0.0;
    for (int i = 1; i < n; ++i) out.g2[i] = z[i] / p;

    // g1 = I + (z - delta_0) <delta_0, .> + (-a g2 + p delta_0 - g2) <g2, .>
    Matrix g1 = Matrix::identity(n);
    for (int i = 0; i < n; ++i) {
        g1(i, 0) += z[i] - (i == 0 ? cplx(1.0) : cplx(0.0));
        cplx corr = -out.a * out.g2[i] + (i == 0 ? cplx(p) : cplx(0.0)) - out.g2[i];
        for (int j = 0; j < n; ++j) g1(i, j) += corr * std::conj(out.g2[j]);
    }
    out.g1 = std::move(g1);
    return out;
}

} // namespace cmv
