#include "cmv/cmv_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace cmv {

namespace {

double rho_of(cplx alpha) {
    // Coefficients within rounding of the circle (e.g. built with std::polar)
    // must act as exactly unimodular, otherwise the decoupling entries leak
    // at sqrt(ulp) scale instead of vanishing.
    const double gap = 1.0 - std::norm(alpha);
    return gap <= 1e-15 ? 0.0 : std::sqrt(gap);
}

void require_unit_disk_closed(cplx alpha, const char* what) {
    require_finite(alpha, what);
    if (std::abs(alpha) > 1.0 + 1e-14)
        throw std::invalid_argument(std::string(what) + ": |alpha| > 1");
}

} // namespace

ThetaBlock theta(cplx alpha) {
    require_unit_disk_closed(alpha, "theta");
    const double r = rho_of(alpha);
    return ThetaBlock{alpha, std::conj(alpha), r, r, -alpha};
}

BandedUnitary::BandedUnitary(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("BandedUnitary: negative dimension");
    for (auto& d : diags_) d.assign(n, 0.0);
}

cplx BandedUnitary::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return 0.0;
    int o = j - i;
    if (o < -2 || o > 2) return 0.0;
    return diags_[o + 2][i];
}

void BandedUnitary::set(int i, int j, cplx v) {
    int o = j - i;
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || o < -2 || o > 2)
        throw std::out_of_range("BandedUnitary::set outside band");
    diags_[o + 2][i] = v;
}

const std::vector<cplx>& BandedUnitary::diagonal(int offset) const {
    if (offset < -2 || offset > 2) throw std::out_of_range("BandedUnitary::diagonal");
    return diags_[offset + 2];
}

std::vector<cplx> BandedUnitary::matvec(const std::vector<cplx>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("BandedUnitary::matvec: size mismatch");
    std::vector<cplx> out(n_);
    for (int i = 0; i < n_; ++i) {
        cplx s = 0.0;
        const int jlo = std::max(0, i - 2), jhi = std::min(n_ - 1, i + 2);
        for (int j = jlo; j <= jhi; ++j) s += diags_[j - i + 2][i] * v[j];
        out[i] = s;
    }
    return out;
}

Matrix BandedUnitary::to_dense() const {
    Matrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = std::max(0, i - 2); j <= std::min(n_ - 1, i + 2); ++j)
            m(i, j) = at(i, j);
    return m;
}

void BandedUnitary::scale_column(int j, cplx s) {
    if (j < 0 || j >= n_) throw std::out_of_range("BandedUnitary::scale_column");
    for (int i = std::max(0, j - 2); i <= std::min(n_ - 1, j + 2); ++i)
        diags_[j - i + 2][i] *= s;
}

double unitarity_defect(const BandedUnitary& c) {
    // (C*C)_{jk} = sum_i conj(C_{ij}) C_{ik}; bands overlap only for |j-k|<=4.
    const int n = c.dim();
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = std::max(0, j - 4); k <= std::min(n - 1, j + 4); ++k) {
            cplx s = 0.0;
            const int ilo = std::max({0, j - 2, k - 2});
            const int ihi = std::min({n - 1, j + 2, k + 2});
            for (int i = ilo; i <= ihi; ++i) s += std::conj(c.at(i, j)) * c.at(i, k);
            if (j == k) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

cplx cmv_entry(const std::function<cplx(int)>& alpha_at, int k, int l) {
    const int d = l - k;
    if (d < -2 || d > 2) return 0.0;
    auto a = [&](int j) { return alpha_at(j); };
    auto r = [&](int j) { return rho_of(alpha_at(j)); };
    if ((k & 1) == 0) {                       // row 2m
        const int m2 = k;                     // = 2m
        switch (d) {
            case -1: return std::conj(a(m2)) * r(m2 - 1);
            case  0: return -std::conj(a(m2)) * a(m2 - 1);
            case  1: return std::conj(a(m2 + 1)) * r(m2);
            case  2: return r(m2 + 1) * r(m2);
            default: return 0.0;              // (2m, 2m-2) structural zero
        }
    }
    const int m2 = k - 1;                     // row 2m+1, m2 = 2m
    switch (d) {
        case -2: return r(m2) * r(m2 - 1);
        case -1: return -r(m2) * a(m2 - 1);
        case  0: return -std::conj(a(m2 + 1)) * a(m2);
        case  1: return -r(m2 + 1) * a(m2);
        default: return 0.0;                  // (2m+1, 2m+3) structural zero
    }
}

namespace {

std::function<cplx(int)> half_line_alpha(const std::vector<cplx>& alphas, int n) {
    return [&alphas, n](int j) -> cplx {
        if (j == -1) return cplx(-1.0);       // alpha_{-1} = -1 convention
        if (j < -1 || j >= n) return cplx(0.0);
        return alphas[j];
    };
}

} // namespace

BandedUnitary build_cmv_window(const std::vector<cplx>& alphas, int n) {
    if (n < 0 || n > static_cast<int>(alphas.size()))
        throw std::invalid_argument("build_cmv_window: window exceeds coefficient count");
    for (const cplx& a : alphas) require_unit_disk_closed(a, "build_cmv_window");
    auto at = half_line_alpha(alphas, n);
    BandedUnitary c(n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j)
            c.set(i, j, cmv_entry(at, i, j));
    return c;
}

BandedUnitary build_cmv(const VerblunskySequence& alphas) {
    return build_cmv_window(alphas.coeffs(), alphas.size());
}

LMFactors build_lm_window(const std::vector<cplx>& alphas, int n) {
    if (n < 0 || n > static_cast<int>(alphas.size()))
        throw std::invalid_argument("build_lm_window: window exceeds coefficient count");
    BandedUnitary l(n), m(n);
    // A Theta block sits at rows/cols (j, j+1); when j+1 lands outside the
    // window only the scalar conj(alpha_j) survives, which is exactly the
    // terminal 1x1 block of the finite odd/even factorizations.
    auto place = [&](BandedUnitary& target, int j) {
        ThetaBlock t = theta(alphas[j]);
        target.set(j, j, t.a);
        if (j + 1 < n) {
            target.set(j, j + 1, t.b);
            target.set(j + 1, j, t.c);
            target.set(j + 1, j + 1, t.d);
        }
    };
    for (int j = 0; j < n; j += 2) place(l, j);
    if (n > 0) m.set(0, 0, 1.0);
    for (int j = 1; j < n; j += 2) place(m, j);
    return LMFactors{std::move(l), std::move(m)};
}

LMFactors build_lm(const VerblunskySequence& alphas) {
    return build_lm_window(alphas.coeffs(), alphas.size());
}

Matrix cutoff_cmv(const VerblunskySequence& alphas, int n) {
    if (n < 1 || n > alphas.proper_count())
        throw std::invalid_argument("cutoff_cmv: needs n proper coefficients");
    auto at = half_line_alpha(alphas.coeffs(), n);
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j)
            a(i, j) = cmv_entry(at, i, j);
    return a;
}

ExtendedWindow extended_cmv_window(const std::vector<cplx>& alphas, int first_index, int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("extended_cmv_window: empty window");
    const int last_index = first_index + static_cast<int>(alphas.size()) - 1;
    if (first_index > lo - 2 || last_index < hi + 2)
        throw std::invalid_argument("extended_cmv_window: need coefficients on [lo-2, hi+2]");
    for (const cplx& a : alphas) require_unit_disk_closed(a, "extended_cmv_window");
    auto at = [&](int j) -> cplx {
        if (j < first_index || j > last_index) return 0.0;   // outside padding; never reached in-window
        return alphas[j - first_index];
    };
    const int w = hi - lo + 1;
    ExtendedWindow out{lo, hi, Matrix(w, w)};
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            out.entries(i, j) = cmv_entry(at, lo + i, lo + j);
    return out;
}

cplx FloquetCMV::beta() const { return std::polar(1.0, beta_angle); }

FloquetCMV floquet_cmv(const std::vector<cplx>& alphas, double beta_angle) {
    const int p = static_cast<int>(alphas.size());
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("floquet_cmv: period must be even and >= 2");
    for (const cplx& a : alphas) {
        require_finite(a, "floquet_cmv");
        if (std::abs(a) >= 1.0) throw std::invalid_argument("floquet_cmv: periodic coefficients must be proper");
    }
    const cplx beta = std::polar(1.0, beta_angle);

    Matrix lp(p, p), mp(p, p);
    for (int j = 0; j < p; j += 2) {
        ThetaBlock t = theta(alphas[j]);
        lp(j, j) = t.a; lp(j, j + 1) = t.b;
        lp(j + 1, j) = t.c; lp(j + 1, j + 1) = t.d;
    }
    for (int j = 1; j + 1 < p; j += 2) {
        ThetaBlock t = theta(alphas[j]);
        mp(j, j) = t.a; mp(j, j + 1) = t.b;
        mp(j + 1, j) = t.c; mp(j + 1, j + 1) = t.d;
    }
    // Corner block acts on (delta_{p-1}, delta_0):
    // [[conj(a), rho beta], [rho conj(beta), -a]].
    {
        const cplx a = alphas[p - 1];
        const double r = rho_of(a);
        mp(p - 1, p - 1) = std::conj(a);
        mp(p - 1, 0) = r * beta;
        mp(0, p - 1) = r * std::conj(beta);
        mp(0, 0) = -a;
    }
    return FloquetCMV{p, beta_angle, lp * mp};
}

} // namespace cmv
