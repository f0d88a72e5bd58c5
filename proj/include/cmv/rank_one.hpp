#pragma once

// Multiplicative rank-one tweaks of CMV matrices. Scaling one column of C by
// a phase is the same operator move as twisting the tail of the coefficient
// sequence, and the bridge between the two pictures is conjugation by an
// explicit diagonal of phases. This header exposes all three ingredients.

#include "cmv/cmv_matrix.hpp"
#include "cmv/densemat.hpp"
#include "cmv/opuc.hpp"

namespace cmv {

// A diagonal matrix of unimodular entries over a finite window.
struct PhaseDiagonal {
    std::vector<cplx> entries;

    explicit PhaseDiagonal(std::vector<cplx> d);

    int size() const { return static_cast<int>(entries.size()); }

    // D * A * D^{-1} on a dense window of matching size.
    Matrix conjugate(const Matrix& a) const;
};

// Scale column m of C by lambda, |lambda| = 1. Every other entry unchanged.
BandedUnitary column_phase(const BandedUnitary& c, int m, cplx lambda);

// beta_j = alpha_j for j < n, lambda * alpha_j for j >= n.
VerblunskySequence twist_tail(const VerblunskySequence& alphas, int n, cplx lambda);

// The diagonal U_n conjugating the tail twist into a single column phase:
//   U_n * C(twist_tail(alpha, n, 1/lambda)) * U_n^{-1} = C(alpha) * W^{(n)}(lambda).
// Odd n = 2k-1 gives the pattern 1^{2k} followed by (1, lambda) repeating;
// even n = 2k gives lambda^{2k} followed by (1, lambda) repeating.
PhaseDiagonal conjugating_diagonal(int n, cplx lambda, int window);

// The two-sided analogue: entries d_j = 1 for even j, lambda for odd j,
// laid out over absolute indices [lo, hi]. Conjugation by it maps the
// extended matrix of alpha to that of lambda * alpha.
PhaseDiagonal alternating_diagonal(cplx lambda, int lo, int hi);

} // namespace cmv
