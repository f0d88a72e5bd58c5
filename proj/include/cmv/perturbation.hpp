#pragma once

// Schatten-norm distance bounds between CMV matrices, the Szegő function for
// finitely supported coefficients, and the Fredholm determinant identities
// linking the two. Sequences are treated as eventually zero past their stored
// head, which keeps every operator difference finite rank and every
// determinant an honest finite determinant.

#include "cmv/densemat.hpp"
#include "cmv/opuc.hpp"

#include <optional>

namespace cmv {

// One evaluation of the coefficient-wise bounds on ||C(alpha) - C(beta)||_p.
// rhs_bound is 2 * 3^{1-1/p} (sum |dalpha|^p + |drho|^p)^{1/p}; rhs_alpha_only
// trades the rho terms for a (1 - R^2)^{-1/2} factor and only applies when
// both sequences stay strictly inside a common disk of radius R < 1;
// rhs_root_variant replaces the rho increments by sqrt(2 |dalpha|) terms and
// always applies. p = infinity is accepted and handled as the limit.
struct SchattenReport {
    double p;
    double lhs_norm;
    double rhs_bound;
    double slack;                          // rhs_bound - lhs_norm
    std::optional<double> rhs_alpha_only;
    double rhs_root_variant;
};

SchattenReport cmv_diff_bound(const VerblunskySequence& alphas,
                              const VerblunskySequence& betas, double p);

// D(z) = 1/phistar(z) past the support; exact for eventually zero
// coefficients. D(0) equals the product of the rho_j.
cplx szego_function(const VerblunskySequence& alphas, cplx z);

// det((1 - z conj(C)) (1 - z conj(C_0))^{-1}), evaluated on the finite block
// that carries the rank of conj(C) - conj(C_0). Equals D(z)^{-1} D(0).
cplx det_ratio(const VerblunskySequence& alphas, cplx z);

// Trace of A = -z (conj(C) - conj(C_0)) (1 - z conj(C_0))^{-1}, a polynomial
// in z: -z (w_1 + sum_{n>=1} alpha_n rho_{n-1} z^n) with
// w_1 = alpha_0 - sum_{j>=1} alpha_j conj(alpha_{j-1}). When only alpha_0 is
// nonzero the series is empty and the trace is exactly -z w_1.
cplx det_ratio_trace(const VerblunskySequence& alphas, cplx z);

// Hilbert-Schmidt regularized determinant of the same operator:
// det2(1 + A) = det(1 + A) exp(-Tr A).
cplx det2_ratio(const VerblunskySequence& alphas, cplx z);

} // namespace cmv
