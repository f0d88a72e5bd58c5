#include "cmv/perturbation.hpp"

#include "cmv/cmv_matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cmv {

namespace {

double rho_of(cplx a) { return std::sqrt(std::max(0.0, 1.0 - std::norm(a))); }

// l^p combination with the p = infinity limit folded in.
double lp_accumulate(const std::vector<double>& terms, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double t : terms) m = std::max(m, t);
        return m;
    }
    double acc = 0.0;
    for (double t : terms) acc += std::pow(t, p);
    return std::pow(acc, 1.0 / p);
}

// Prefactor of the coefficient-difference bounds. Splitting each factor of
// C = L M into its three diagonals costs 3^{1-1/p}, each alpha and rho
// increment appears twice inside its 2x2 block (2^{1/p}), and adding the L
// and M contributions costs another 2^{1-1/p}; the product is 2 * 3^{1-1/p}.
// The p = 1 value 2 is sharp for a single coefficient moved across zero.
double bound_prefactor(double p) {
    return std::isinf(p) ? 6.0 : 2.0 * std::pow(3.0, 1.0 - 1.0 / p);
}

} // namespace

SchattenReport cmv_diff_bound(const VerblunskySequence& alphas,
                              const VerblunskySequence& betas, double p) {
    if (std::isnan(p) || p < 1.0)
        throw std::invalid_argument("cmv_diff_bound: p in [1, infinity] required");

    const int support = std::max(alphas.size(), betas.size());
    auto a_at = [&](int j) { return j < alphas.size() ? alphas.alpha(j) : cplx(0.0); };
    auto b_at = [&](int j) { return j < betas.size() ? betas.alpha(j) : cplx(0.0); };

    // Window large enough that both matrices are exactly free past the
    // difference's support; the window difference then equals the full one.
    int window = support + 6;
    if (window % 2 != 0) ++window;
    std::vector<cplx> apad(window + 2), bpad(window + 2);
    for (int j = 0; j < window + 2; ++j) {
        apad[j] = a_at(j);
        bpad[j] = b_at(j);
    }
    Matrix diff = build_cmv_window(apad, window).to_dense() -
                  build_cmv_window(bpad, window).to_dense();

    std::vector<double> both, alpha_only, root_variant;
    double sup_modulus = 0.0;
    for (int j = 0; j < support; ++j) {
        const cplx da = a_at(j) - b_at(j);
        const double dalpha = std::abs(da);
        const double drho = std::abs(rho_of(a_at(j)) - rho_of(b_at(j)));
        both.push_back(dalpha);
        both.push_back(drho);
        alpha_only.push_back(dalpha);
        root_variant.push_back(dalpha);
        root_variant.push_back(std::sqrt(2.0 * dalpha));
        sup_modulus = std::max({sup_modulus, std::abs(a_at(j)), std::abs(b_at(j))});
    }

    SchattenReport r;
    r.p = p;
    r.lhs_norm = schatten_norm(diff, p);
    r.rhs_bound = bound_prefactor(p) * lp_accumulate(both, p);
    r.slack = r.rhs_bound - r.lhs_norm;
    r.rhs_root_variant = bound_prefactor(p) * lp_accumulate(root_variant, p);
    if (sup_modulus < 1.0 - tol::exact) {
        const double g = 1.0 / std::sqrt(1.0 - sup_modulus * sup_modulus);
        const double factor =
            std::isinf(p) ? std::max(1.0, g)
                          : std::pow(1.0 + std::pow(g, p), 1.0 / p);
        r.rhs_alpha_only = bound_prefactor(p) * factor * lp_accumulate(alpha_only, p);
    }
    return r;
}

cplx szego_function(const VerblunskySequence& alphas, cplx z) {
    require_finite(z, "szego_function");
    if (std::abs(z) >= 1.0)
        throw std::invalid_argument("szego_function: |z| < 1 required");
    if (alphas.is_improper())
        throw std::invalid_argument("szego_function: eventually-zero sequence required");
    cplx phi = 1.0, phistar = 1.0;
    for (int n = 0; n < alphas.size(); ++n) {
        const cplx a = alphas.alpha(n);
        const double rho = alphas.rho(n);
        const cplx next_phi = (z * phi - std::conj(a) * phistar) / rho;
        phistar = (phistar - a * z * phi) / rho;
        phi = next_phi;
    }
    if (phistar == 0.0)
        throw std::runtime_error("szego_function: phistar vanished inside the disk");
    return 1.0 / phistar;
}

namespace {

// The half-line CMV basis order linearizes to the two-sided shift: sigma maps
// odd 2k-1 to +k and even 2k to -k, and the free matrix moves sigma up by one.
// Hence (1 - z C_0)^{-1}_{kj} = z^{sigma(k)-sigma(j)} when sigma(k) >= sigma(j).
int shift_index(int idx) { return idx % 2 == 1 ? (idx + 1) / 2 : -(idx / 2); }

// Block of A = -z (conj(C) - C_0) (1 - z C_0)^{-1} on [0, m)^2. Rows of A
// vanish past the support of the difference, so det(1 + A) over this block
// is the full Fredholm determinant.
Matrix det_block(const VerblunskySequence& alphas, cplx z, int m) {
    auto alpha_at = [&](int j) -> cplx {
        if (j < 0) return -1.0;
        return j < alphas.size() ? alphas.alpha(j) : cplx(0.0);
    };
    auto free_at = [](int j) -> cplx { return j < 0 ? cplx(-1.0) : cplx(0.0); };

    const int cols = m + 2;   // difference columns reach two past the rows
    Matrix a(m, m);
    for (int i = 0; i < m; ++i) {
        for (int k = std::max(0, i - 2); k < std::min(cols, i + 3); ++k) {
            const cplx d = std::conj(cmv_entry(alpha_at, i, k)) - cmv_entry(free_at, i, k);
            if (d == 0.0) continue;
            const int sk = shift_index(k);
            for (int j = 0; j < m; ++j) {
                const int sj = shift_index(j);
                if (sk < sj) continue;
                a(i, j) += -z * d * std::pow(z, sk - sj);
            }
        }
    }
    return a;
}

} // namespace

cplx det_ratio(const VerblunskySequence& alphas, cplx z) {
    require_finite(z, "det_ratio");
    if (std::abs(z) >= 1.0)
        throw std::invalid_argument("det_ratio: |z| < 1 required");
    if (alphas.is_improper())
        throw std::invalid_argument("det_ratio: eventually-zero sequence required");
    const int m = alphas.size() + 4;
    Matrix a = det_block(alphas, z, m);
    return det(Matrix::identity(m) + a);
}

cplx det_ratio_trace(const VerblunskySequence& alphas, cplx z) {
    require_finite(z, "det_ratio_trace");
    if (alphas.is_improper())
        throw std::invalid_argument("det_ratio_trace: eventually-zero sequence required");
    // Diagonal of A in powers of z: the constant Tr(conj(C) - C_0) is
    // w_1 = alpha_0 - sum_{j>=1} alpha_j conj(alpha_{j-1}), and the n-th
    // power of the free matrix aligns exactly one band entry of the
    // difference with the diagonal, contributing alpha_n rho_{n-1} z^n.
    cplx series = alphas.size() > 0 ? alphas.alpha(0) : cplx(0.0);
    for (int j = 1; j < alphas.size(); ++j)
        series -= alphas.alpha(j) * std::conj(alphas.alpha(j - 1));
    cplx zn = 1.0;
    for (int n = 1; n < alphas.size(); ++n) {
        zn *= z;
        series += alphas.alpha(n) * alphas.rho(n - 1) * zn;
    }
    return -z * series;
}

cplx det2_ratio(const VerblunskySequence& alphas, cplx z) {
    require_finite(z, "det2_ratio");
    if (std::abs(z) >= 1.0)
        throw std::invalid_argument("det2_ratio: |z| < 1 required");
    if (alphas.is_improper())
        throw std::invalid_argument("det2_ratio: eventually-zero sequence required");
    const int m = alphas.size() + 4;
    Matrix a = det_block(alphas, z, m);
    cplx trace = 0.0;
    for (int i = 0; i < m; ++i) trace += a(i, i);
    return det(Matrix::identity(m) + a) * std::exp(-trace);
}

} // namespace cmv
