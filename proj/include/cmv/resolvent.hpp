#pragma once

// Carathéodory and Schur functions plus the closed-form CMV resolvent.
//
// For a coefficient sequence with finite support the Carathéodory function
// is an exact rational expression: past the support, the starred Szegő
// recursion freezes, so F(z) = psistar_N(z) / phistar_N(z) with no limit to
// take. The resolvent of the half-line CMV matrix is then assembled from the
// two Laurent-adjusted solution families evaluated pointwise.

#include "cmv/opuc.hpp"

#include <vector>

namespace cmv {

struct CaratheodoryValue {
    cplx z;
    cplx f;   // F(z), Re F > 0 on the open disk
};

// F(z) = sum of w_i (e^{i theta_i} + z) / (e^{i theta_i} - z). Requires |z| < 1.
CaratheodoryValue caratheodory_discrete(const DiscreteCircleMeasure& mu, cplx z);

// F for an eventually-zero coefficient sequence, exact via the frozen ratio.
// Improper sequences are rejected; their F lives in caratheodory_discrete.
CaratheodoryValue caratheodory_limit(const VerblunskySequence& alphas, cplx z);

// f = (F - 1) / (z (F + 1)); the inverse of F = (1 + z f)/(1 - z f).
cplx schur_from_caratheodory(cplx f_value, cplx z);

// Pointwise values at fixed z of the CMV basis functions chi_n, x_n, the
// second-kind counterparts y_n, Upsilon_n, and the Weyl combinations
// p_n = y_n + F x_n, pi_n = Upsilon_n + F chi_n, for n = 0..m-1.
struct WeylSolutions {
    cplx z;
    cplx f;   // the Carathéodory value used
    std::vector<cplx> chi, x, y, upsilon, p, pi;
};

WeylSolutions weyl_solutions(const VerblunskySequence& alphas, cplx z, int m);

// Entry (k, l) of (C - z)^{-1} for the half-line CMV matrix of an eventually
// zero sequence, 0 < |z| < 1:
//   (2z)^{-1} chi_l(z) p_k(z)   when k > l, or k = l odd,
//   (2z)^{-1} pi_l(z) x_k(z)    when l > k, or k = l even.
cplx cmv_resolvent_entry(const VerblunskySequence& alphas, cplx z, int k, int l);

} // namespace cmv
