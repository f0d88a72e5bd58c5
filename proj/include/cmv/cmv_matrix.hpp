// Theta blocks, L/M factors, and the five-diagonal CMV matrices built from
// them: finite unitary (improper terminal), windows of semi-infinite proper
// operators, cutoffs, two-sided extended windows, and Floquet wraps.
#pragma once

#include "cmv/densemat.hpp"
#include "cmv/opuc.hpp"

#include <array>
#include <functional>

namespace cmv {

struct ThetaBlock {
    cplx alpha;
    cplx a, b, c, d;   // [[conj(alpha), rho], [rho, -alpha]]
};

// theta accepts |alpha| <= 1: a unimodular alpha gives the degenerate block
// diag(conj(alpha), -alpha) that decouples the matrix.
ThetaBlock theta(cplx alpha);

// Five-diagonal storage: diag(o) holds C_{i, i+o} at array index i for the
// rows where the entry exists. Structural zeros of the CMV pattern
// (C_{k,k+2} for odd k, C_{k,k-2} for even k) are stored as exact zeros.
class BandedUnitary {
public:
    BandedUnitary() : n_(0) {}
    explicit BandedUnitary(int n);

    int dim() const { return n_; }
    cplx at(int i, int j) const;
    void set(int i, int j, cplx v);

    std::vector<cplx> matvec(const std::vector<cplx>& v) const;
    Matrix to_dense() const;
    void scale_column(int j, cplx s);

    const std::vector<cplx>& diagonal(int offset) const;

private:
    int n_;
    std::array<std::vector<cplx>, 5> diags_;   // offsets -2..2
};

double unitarity_defect(const BandedUnitary& c);   // max |(C*C - I)_{ij}|

// Closed-form CMV entry. alpha_at must honor the convention the caller wants
// at negative indices; the half-line matrix uses alpha_{-1} = -1.
cplx cmv_entry(const std::function<cplx(int)>& alpha_at, int k, int l);

// Window build from a raw coefficient array (|alpha_j| <= 1 admitted, so
// interior unimodular coefficients and their decoupling are reachable).
BandedUnitary build_cmv_window(const std::vector<cplx>& alphas, int n);

// Proper input: the n x n corner window of the semi-infinite matrix, n =
// sequence length (not unitary). Improper input: the exact finite unitary.
BandedUnitary build_cmv(const VerblunskySequence& alphas);

struct LMFactors {
    BandedUnitary l;
    BandedUnitary m;
};

// Direct sums of Theta blocks; a block straddling the window edge contributes
// its top-left scalar, which reproduces the finite odd/even terminal forms
// (1x1 conj(alpha) block) and window truncation with one rule.
LMFactors build_lm(const VerblunskySequence& alphas);
LMFactors build_lm_window(const std::vector<cplx>& alphas, int n);

// Top-left n x n block of the semi-infinite matrix; a strict contraction on
// the open disk side of the spectral picture, never unitary.
Matrix cutoff_cmv(const VerblunskySequence& alphas, int n);

// Two-sided (extended) CMV window. alphas[i] is the coefficient with index
// first_index + i; data must cover [lo-2, hi+2].
struct ExtendedWindow {
    int lo, hi;
    Matrix entries;    // (hi-lo+1)^2, entries(i,j) = E_{lo+i, lo+j}
};
ExtendedWindow extended_cmv_window(const std::vector<cplx>& alphas, int first_index, int lo, int hi);

struct FloquetCMV {
    int p;
    double beta_angle;       // beta = e^{i beta_angle}, stored as angle
    Matrix e;                // dense p x p
    cplx beta() const;
};

// Periodic wrap E_p(beta) = L_p M_p(beta); the corner block couples
// delta_{p-1} to delta_0 with the beta phases.
FloquetCMV floquet_cmv(const std::vector<cplx>& alphas, double beta_angle);

} // namespace cmv
