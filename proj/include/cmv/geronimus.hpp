#pragma once

// The circle-to-interval dictionary for conjugation-symmetric measures: the
// pushforward under x = 2 cos(theta), the closed-form map from real
// Verblunsky coefficients to Jacobi parameters, and the constructive
// reduction that folds a real-coefficient CMV matrix into a direct sum of
// two Jacobi matrices.

#include "cmv/densemat.hpp"
#include "cmv/opuc.hpp"

#include <vector>

namespace cmv {

struct JacobiOperator {
    std::vector<double> a;   // off-diagonal, a[n] = a_{n+1} > 0
    std::vector<double> b;   // diagonal, b[n] = b_{n+1}
};

// A discrete circle measure invariant under theta -> -theta; atoms at 0 and
// pi are self-paired, everything else must appear in mirror pairs with equal
// weights.
class SymmetricCircleMeasure {
public:
    explicit SymmetricCircleMeasure(DiscreteCircleMeasure mu);
    const DiscreteCircleMeasure& measure() const { return mu_; }

private:
    DiscreteCircleMeasure mu_;
};

struct IntervalAtom {
    double x;        // in [-2, 2]
    double weight;
};

// Pushforward under x = 2 cos(theta); mirror pairs merge with summed weight.
// Result sorted by x ascending.
std::vector<IntervalAtom> szego_map(const SymmetricCircleMeasure& xi);

// Closed-form Jacobi parameters from real coefficients:
//   a_{n+1}^2 = (1 - alpha_{2n-1}) (1 - alpha_{2n}^2) (1 + alpha_{2n+1})
//   b_{n+1}   = (1 - alpha_{2n-1}) alpha_{2n} - (1 + alpha_{2n-1}) alpha_{2n-2}
// with alpha_{-1} = -1, alpha_{-2} = 0, and zero padding past the stored
// head. Returns the first `count` parameter pairs.
JacobiOperator geronimus_jacobi(const std::vector<double>& alphas, int count);

// The 2x2 rotation diagonalizing the real elementary block: conjugating
// Theta(alpha) by it gives diag(-1, 1).
Matrix geronimus_s_block(double alpha);

// Window reduction: with S = 1 + S(alpha_1) + S(alpha_3) + ..., form
// R = S M S^{-1} (diagonal of signs), B = S L S^{-1} (bandwidth three), and
// fold C + C^{-1} into R B + B R, which commutes with R. The two Jacobi
// matrices live on R's sign eigenspaces, read off into `even` (R = +1,
// starting at index 0) and `odd` (R = -1); away from the window edge the
// signs alternate so the names match the index parities, while an improper
// terminal +1 joins the final index to the even block.
// For an improper all-real sequence with window == size the folding is exact;
// for proper sequences the outermost rows of the window are edge-affected and
// callers should compare interior entries only.
struct JacobiReduction {
    JacobiOperator even;
    JacobiOperator odd;
    Matrix folded;   // R B + B R on the window
    Matrix b;
    Matrix r;
};

JacobiReduction reduce_to_jacobi(const VerblunskySequence& alphas, int window);

} // namespace cmv
