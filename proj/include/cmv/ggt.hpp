#pragma once

// GGT (Hessenberg) companions of CMV matrices. The GGT matrix of a finite
// coefficient sequence is upper Hessenberg with closed-form entries, it
// factors as an ordered product of elementary 2x2 rotations (the AGR
// factorization), and that factorization in turn yields a constructive
// conjugation onto the five-diagonal form. GGT matrices are stored dense:
// unlike the CMV form they are not banded.

#include "cmv/densemat.hpp"
#include "cmv/opuc.hpp"

#include <vector>

namespace cmv {

struct GGTMatrix {
    Matrix entries;

    int size() const { return entries.rows(); }
};

// Closed-form Hessenberg entries. Works for any finite sequence; the result
// is unitary exactly when the terminal coefficient is unimodular.
GGTMatrix build_ggt(const VerblunskySequence& alphas);

// One factor of the AGR product: an elementary block on coordinates
// (position, position + 1), or the terminal scalar conj(alpha) in the last
// diagonal slot.
struct AGRFactor {
    int position;
    bool terminal;
    cplx alpha;
};

struct AGRFactorization {
    int n;
    std::vector<AGRFactor> factors;

    Matrix factor_matrix(int i) const;
    Matrix product() const;
};

// G = Theta_0(alpha_0) ... Theta_{N-2}(alpha_{N-2}) * (1 + ... + conj(alpha_{N-1})).
// Requires a unimodular terminal coefficient.
AGRFactorization agr_factor(const VerblunskySequence& alphas);

// Partial product Theta_0(alphas[0]) ... Theta_{len-1}(alphas[len-1]) embedded
// in a dim x dim identity. Used to watch the product stabilize columnwise.
Matrix agr_partial_product(const std::vector<cplx>& alphas, int dim);

struct LMFromAGR {
    Matrix v;
    Matrix l;
    Matrix m;
};

// Constructive conjugation of the Hessenberg form onto the five-diagonal one:
// v * G * v^{-1} = l * m with v fixing the first basis vector. Follows the
// inductive peel of the leading rotation, recursing on the shifted sequence.
LMFromAGR lm_from_agr(const VerblunskySequence& alphas);

// The sphere-to-group section behind the coefficient stripping argument.
// Given a unit vector z != delta_0, g1 is a unitary with g1 delta_0 = z that
// acts as the identity orthogonal to span{delta_0, g2}, and g2 is the unit
// vector along the component of z orthogonal to delta_0.
struct CosetMaps {
    Matrix g1;
    std::vector<cplx> g2;
    cplx a;    // conj of the delta_0 component of z
    double p;  // norm of the orthogonal component
};

CosetMaps coset_maps(const std::vector<cplx>& z);

} // namespace cmv
