#pragma once

// Matrix-valued Verblunsky coefficients: k x k coefficient blocks with
// operator norm below one. The scalar machinery survives almost unchanged,
// except that a single defect rho splits into a left and a right version,
//
//   rho_L = (1 - a^* a)^{1/2}    rho_R = (1 - a a^*)^{1/2}
//
// and factor ordering inside products starts to matter. The elementary
// rotation becomes the 2k x 2k unitary
//
//   Theta(a) = [ a^*  rho_L ]
//              [ rho_R  -a  ]
//
// and the five-diagonal matrix is again the product of two block direct sums
// of these. Left and right module inner products over a matrix measure take
// the place of the scalar integral; bases are orthonormal in the left one.

#include "cmv/densemat.hpp"

#include <cstddef>
#include <vector>

namespace cmv {

// (1 - a^* a)^{1/2} and (1 - a a^*)^{1/2}, Hermitian square roots.
Matrix block_rho_left(const Matrix& alpha);
Matrix block_rho_right(const Matrix& alpha);

// The 2k x 2k elementary unitary above. Requires ||alpha|| < 1.
Matrix block_theta(const Matrix& alpha);

// A finite sequence of k x k coefficient blocks. Proper sequences have every
// block strictly contractive; improper ones end in a unitary block and give
// finite unitary matrices, mirroring the scalar |alpha_{N-1}| = 1 case.
class MatrixVerblunsky {
public:
    static MatrixVerblunsky proper(std::vector<Matrix> blocks);
    static MatrixVerblunsky improper(std::vector<Matrix> blocks);

    int block_size() const { return k_; }
    std::size_t size() const { return blocks_.size(); }
    const Matrix& at(std::size_t j) const { return blocks_[j]; }
    const std::vector<Matrix>& blocks() const { return blocks_; }
    bool is_improper() const { return improper_; }

private:
    MatrixVerblunsky(std::vector<Matrix> blocks, bool improper);

    std::vector<Matrix> blocks_;
    int k_;
    bool improper_;
};

// Five-diagonal container: k x k blocks on block-diagonals -2..2, dimension
// n blocks. Blocks outside the band are identically zero.
class BlockBandedUnitary {
public:
    BlockBandedUnitary(int nblocks, int k);

    int block_count() const { return n_; }
    int block_size() const { return k_; }

    Matrix block(int j, int l) const;
    void set_block(int j, int l, const Matrix& b);

    Matrix to_dense() const;

private:
    int n_;
    int k_;
    std::vector<Matrix> band_;  // (offset + 2) * n_ + j, offset = l - j

    bool in_band(int j, int l) const;
};

struct BlockLM {
    Matrix l;
    Matrix m;
    int block_size;
};

// L = Theta_0 + Theta_2 + ..., M = 1 + Theta_1 + Theta_3 + ... as dense
// matrices of dimension size() * k. A block whose partner index would fall
// off the end contributes only its top-left corner a^*, so an improper
// sequence yields unitary factors and a proper one a banded truncation.
BlockLM build_block_lm(const MatrixVerblunsky& alphas);

// The product L * M packed into the five-diagonal container.
BlockBandedUnitary build_block_cmv(const MatrixVerblunsky& alphas);

// Block Hessenberg companion: G_{kl} = -alpha_{k-1} rho_L_k ... rho_L_{l-1}
// alpha_l^* above the diagonal (alpha_{-1} = -1), rho_R_l on the subdiagonal,
// zero below. Unitary exactly when the terminal block is.
Matrix build_block_ggt(const MatrixVerblunsky& alphas);

// Polynomial with k x k matrix coefficients, ascending powers. Trailing zero
// blocks are kept; degree() reports the stored length minus one.
class BlockPoly {
public:
    BlockPoly() : k_(0) {}
    explicit BlockPoly(std::vector<Matrix> coeffs);
    static BlockPoly constant(const Matrix& c);

    int block_size() const { return k_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Matrix coeff(int j) const;
    const std::vector<Matrix>& coeffs() const { return coeffs_; }

    Matrix eval(cplx z) const;
    BlockPoly shifted(int m) const;             // multiply by z^m
    BlockPoly left_mul(const Matrix& b) const;  // b * p, blockwise
    BlockPoly right_mul(const Matrix& b) const; // p * b, blockwise
    BlockPoly operator-(const BlockPoly& rhs) const;

private:
    std::vector<Matrix> coeffs_;
    int k_;
};

// Szego reversal relative to declared degree n: (p*)_j = (p_{n-j})^*.
BlockPoly block_star(const BlockPoly& p, int n);

// One orthonormal pair at a common degree: phi_l = phi^L_n and
// phi_r_star = (phi^R_n)^*.
struct BlockSzegoPair {
    BlockPoly phi_l;
    BlockPoly phi_r_star;
};

BlockSzegoPair block_szego_seed(int k);

// Forward recursion step,
//   phi^L_{n+1}     = rho_L^{-1} (z phi^L_n - a^* (phi^R_n)^*)
//   (phi^R_{n+1})^* = rho_R^{-1} ((phi^R_n)^* - a z phi^L_n)
// Requires ||alpha|| < 1.
BlockSzegoPair block_szego_step(const BlockSzegoPair& pair, const Matrix& alpha);

// Pairs 0..n generated from the leading coefficient blocks (n <= size()).
std::vector<BlockSzegoPair> block_szego_sequence(const MatrixVerblunsky& alphas, int n);

// CMV basis chi and alternate basis x evaluated at z != 0:
//   chi_{2k} = z^{-k} (phi^R_{2k})^*    chi_{2k-1} = z^{-k+1} phi^L_{2k-1}
//   x_{2k}   = z^{-k} phi^L_{2k}        x_{2k-1}   = z^{-k} (phi^R_{2k-1})^*
Matrix block_chi(const std::vector<BlockSzegoPair>& seq, int ell, cplx z);
Matrix block_x(const std::vector<BlockSzegoPair>& seq, int ell, cplx z);

// Discrete k x k matrix measure: atoms exp(i theta) with positive
// semidefinite weight blocks summing to the identity.
struct BlockCircleAtom {
    double theta;
    Matrix weight;
};

class MatrixCircleMeasure {
public:
    explicit MatrixCircleMeasure(std::vector<BlockCircleAtom> atoms);

    int block_size() const { return k_; }
    std::size_t size() const { return atoms_.size(); }
    const BlockCircleAtom& atom(std::size_t i) const { return atoms_[i]; }

private:
    std::vector<BlockCircleAtom> atoms_;
    int k_;
};

// Module inner products against the measure, for matrix polynomials:
// right: sum f(z)^* W g(z), left: sum g(z) W f(z)^*.
Matrix block_inner_right(const MatrixCircleMeasure& mu, const BlockPoly& f, const BlockPoly& g);
Matrix block_inner_left(const MatrixCircleMeasure& mu, const BlockPoly& f, const BlockPoly& g);

struct ModuleBases {
    std::vector<BlockPoly> phi_l;  // left-orthonormal
    std::vector<BlockPoly> phi_r;  // right-orthonormal
};

// Gram-Schmidt over the monomials z^0..z^n in both module senses. Each
// normalizer H must stay positive definite; a smallest eigenvalue below
// 1e-10 means the measure is too trivial to support degree n and throws.
ModuleBases module_gram_schmidt(const MatrixCircleMeasure& mu, int n);

} // namespace cmv
