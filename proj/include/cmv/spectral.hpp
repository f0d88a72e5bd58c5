// Root finding and spectra: zeros of OPUC, eigenvalues and spectral measures
// of finite CMV matrices, periodic discriminants, band structure, and the
// Floquet determinant identity.
#pragma once

#include "cmv/cmv_matrix.hpp"
#include "cmv/opuc.hpp"

namespace cmv {

// Simultaneous-iteration (Aberth) root finder for monic polynomials.
// Initial guesses sit on a circle of radius |c_0|^{1/deg} clamped to
// [0.1, 0.9]; hard iteration cap 200, nonconvergence throws.
std::vector<cplx> roots_monic(const CPoly& p);

// Zeros of the monic OPUC Phi_n; they lie strictly inside the unit disk.
std::vector<cplx> opuc_zeros(const VerblunskySequence& alphas, int n);

struct SpectrumResult {
    std::vector<cplx> eigenvalues;   // sorted by argument in [0, 2pi)
    std::vector<double> weights;     // empty unless requested
};

// Eigenvalues of the finite unitary CMV matrix as roots of the degree-N
// paraorthogonal polynomial (plus one Newton step); weights as squared first
// components of inverse-iteration eigenvectors, renormalized.
SpectrumResult finite_cmv_spectrum(const VerblunskySequence& alphas, bool with_weights = true);

DiscreteCircleMeasure spectrum_to_measure(const SpectrumResult& s);

// Exact characteristic polynomial det(z 1 - A) by cofactor expansion.
// Restricted to n <= 8; used as the independent cross-check path.
CPoly char_poly_expand(const Matrix& a);

// Spectrum of a small (n <= 8) unitary with cyclic delta_0, through the
// characteristic polynomial and inverse iteration.
SpectrumResult spectrum_of_unitary(const Matrix& u, bool with_weights = true);

struct Discriminant {
    int p;                 // period, even
    LaurentPoly delta;     // degrees -p/2 .. p/2, conj-symmetric coefficients
};

// Delta(z) = z^{-p/2} Tr(A(alpha_{p-1}, z) ... A(alpha_0, z)).
Discriminant discriminant(const std::vector<cplx>& alphas);

// Circular arc theta in [lo, hi], with 0 <= lo < 2pi and hi <= lo + 2pi;
// the full circle comes back as the single arc [0, 2pi].
struct Arc {
    double lo, hi;
};

// Spectrum of the periodic operator: arcs where Delta(e^{i theta}) lies in
// [-2, 2], endpoints located by bisection to 1e-10 from a 4096-point scan.
std::vector<Arc> bands(const std::vector<cplx>& alphas);

// Residual of det(z - E_p(beta)) = (prod rho_j) z^{p/2} (Delta(z) - beta - 1/beta).
double floquet_check(const std::vector<cplx>& alphas, cplx beta, cplx z);

} // namespace cmv
