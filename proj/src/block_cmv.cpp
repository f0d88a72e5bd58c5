#include "cmv/block_cmv.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace cmv {

namespace {

void require_square(const Matrix& a, const char* who) {
    if (a.rows() == 0 || a.rows() != a.cols())
        throw std::invalid_argument(std::string(who) + ": square nonempty block required");
}

double op_norm(const Matrix& a) {
    return schatten_norm(a, std::numeric_limits<double>::infinity());
}

Matrix inverse_of(const Matrix& a) { return lu_inverse(lu_factor(a)); }

// Embed a k x k block at block position (bi, bj) of a dense matrix.
void place_block(Matrix& dest, int bi, int bj, const Matrix& b) {
    const int k = b.rows();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < b.cols(); ++j) dest(bi * k + i, bj * k + j) = b(i, j);
}

Matrix read_block(const Matrix& src, int bi, int bj, int k) {
    Matrix out(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out(i, j) = src(bi * k + i, bj * k + j);
    return out;
}

} // namespace

Matrix block_rho_left(const Matrix& alpha) {
    require_square(alpha, "block_rho_left");
    return hermitian_sqrt(Matrix::identity(alpha.rows()) - alpha.adjoint() * alpha);
}

Matrix block_rho_right(const Matrix& alpha) {
    require_square(alpha, "block_rho_right");
    return hermitian_sqrt(Matrix::identity(alpha.rows()) - alpha * alpha.adjoint());
}

Matrix block_theta(const Matrix& alpha) {
    require_square(alpha, "block_theta");
    if (op_norm(alpha) >= 1.0)
        throw std::invalid_argument("block_theta: coefficient block must satisfy ||alpha|| < 1");
    const int k = alpha.rows();
    const Matrix rl = block_rho_left(alpha);
    const Matrix rr = block_rho_right(alpha);
    Matrix out(2 * k, 2 * k);
    place_block(out, 0, 0, alpha.adjoint());
    place_block(out, 0, 1, rl);
    place_block(out, 1, 0, rr);
    place_block(out, 1, 1, alpha * cplx(-1.0));
    return out;
}

MatrixVerblunsky::MatrixVerblunsky(std::vector<Matrix> blocks, bool improper)
    : blocks_(std::move(blocks)), k_(blocks_.empty() ? 0 : blocks_[0].rows()), improper_(improper) {}

MatrixVerblunsky MatrixVerblunsky::proper(std::vector<Matrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("MatrixVerblunsky: empty sequence");
    const int k = blocks[0].rows();
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        require_square(blocks[j], "MatrixVerblunsky");
        if (blocks[j].rows() != k)
            throw std::invalid_argument("MatrixVerblunsky: mixed block sizes");
        if (op_norm(blocks[j]) >= 1.0)
            throw std::invalid_argument("MatrixVerblunsky: ||alpha_" + std::to_string(j) +
                                        "|| >= 1 in a proper sequence");
    }
    return MatrixVerblunsky(std::move(blocks), false);
}

MatrixVerblunsky MatrixVerblunsky::improper(std::vector<Matrix> blocks) {
    if (blocks.empty()) throw std::invalid_argument("MatrixVerblunsky: empty sequence");
    const int k = blocks[0].rows();
    for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
        require_square(blocks[j], "MatrixVerblunsky");
        if (blocks[j].rows() != k)
            throw std::invalid_argument("MatrixVerblunsky: mixed block sizes");
        if (op_norm(blocks[j]) >= 1.0)
            throw std::invalid_argument("MatrixVerblunsky: interior block " + std::to_string(j) +
                                        " must be strictly contractive");
    }
    const Matrix& last = blocks.back();
    require_square(last, "MatrixVerblunsky");
    if (last.rows() != k) throw std::invalid_argument("MatrixVerblunsky: mixed block sizes");
    const Matrix defect = last.adjoint() * last - Matrix::identity(k);
    if (defect.max_abs() > 1e-10)
        throw std::invalid_argument("MatrixVerblunsky: terminal block of an improper sequence "
                                    "must be unitary");
    return MatrixVerblunsky(std::move(blocks), true);
}

BlockBandedUnitary::BlockBandedUnitary(int nblocks, int k) : n_(nblocks), k_(k) {
    if (nblocks <= 0 || k <= 0)
        throw std::invalid_argument("BlockBandedUnitary: positive dimensions required");
    band_.assign(static_cast<std::size_t>(5) * n_, Matrix(k, k));
}

bool BlockBandedUnitary::in_band(int j, int l) const {
    return j >= 0 && j < n_ && l >= 0 && l < n_ && l - j >= -2 && l - j <= 2;
}

Matrix BlockBandedUnitary::block(int j, int l) const {
    if (j < 0 || j >= n_ || l < 0 || l >= n_)
        throw std::out_of_range("BlockBandedUnitary::block");
    if (!in_band(j, l)) return Matrix(k_, k_);
    return band_[static_cast<std::size_t>(l - j + 2) * n_ + j];
}

void BlockBandedUnitary::set_block(int j, int l, const Matrix& b) {
    if (!in_band(j, l)) throw std::out_of_range("BlockBandedUnitary::set_block: outside band");
    if (b.rows() != k_ || b.cols() != k_)
        throw std::invalid_argument("BlockBandedUnitary::set_block: wrong block size");
    band_[static_cast<std::size_t>(l - j + 2) * n_ + j] = b;
}

Matrix BlockBandedUnitary::to_dense() const {
    Matrix out(n_ * k_, n_ * k_);
    for (int j = 0; j < n_; ++j)
        for (int l = std::max(0, j - 2); l <= std::min(n_ - 1, j + 2); ++l)
            place_block(out, j, l, block(j, l));
    return out;
}

BlockLM build_block_lm(const MatrixVerblunsky& alphas) {
    const int n = static_cast<int>(alphas.size());
    const int k = alphas.block_size();
    Matrix l(n * k, n * k);
    Matrix m(n * k, n * k);
    place_block(m, 0, 0, Matrix::identity(k));
    for (int j = 0; j < n; ++j) {
        Matrix& dest = (j % 2 == 0) ? l : m;
        if (j + 1 < n) {
            const Matrix th = block_theta(alphas.at(j));
            place_block(dest, j, j, read_block(th, 0, 0, k));
            place_block(dest, j, j + 1, read_block(th, 0, 1, k));
            place_block(dest, j + 1, j, read_block(th, 1, 0, k));
            place_block(dest, j + 1, j + 1, read_block(th, 1, 1, k));
        } else {
            // The partner index falls off the end: keep the top-left corner.
            place_block(dest, j, j, alphas.at(j).adjoint());
        }
    }
    // Both parities cover every block row: the factor that would have its
    // last Theta straddle the edge receives the corner block instead.
    return BlockLM{std::move(l), std::move(m), k};
}

BlockBandedUnitary build_block_cmv(const MatrixVerblunsky& alphas) {
    const BlockLM lm = build_block_lm(alphas);
    const Matrix dense = lm.l * lm.m;
    const int n = static_cast<int>(alphas.size());
    const int k = alphas.block_size();
    BlockBandedUnitary out(n, k);
    for (int j = 0; j < n; ++j)
        for (int l = std::max(0, j - 2); l <= std::min(n - 1, j + 2); ++l)
            out.set_block(j, l, read_block(dense, j, l, k));
    return out;
}

Matrix build_block_ggt(const MatrixVerblunsky& alphas) {
    const int n = static_cast<int>(alphas.size());
    const int k = alphas.block_size();
    std::vector<Matrix> rho_l(n);
    for (int j = 0; j < n; ++j)
        rho_l[j] = block_rho_left(alphas.at(j));

    Matrix g(n * k, n * k);
    for (int col = 0; col < n; ++col) {
        for (int row = 0; row <= col; ++row) {
            // -alpha_{row-1} with the alpha_{-1} = -1 convention.
            Matrix acc = (row == 0) ? Matrix::identity(k) : alphas.at(row - 1) * cplx(-1.0);
            for (int mid = row; mid < col; ++mid) acc = acc * rho_l[mid];
            place_block(g, row, col, acc * alphas.at(col).adjoint());
        }
        if (col + 1 < n) place_block(g, col + 1, col, block_rho_right(alphas.at(col)));
    }
    return g;
}

BlockPoly::BlockPoly(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("BlockPoly: empty coefficient list");
    k_ = coeffs_[0].rows();
    for (const Matrix& c : coeffs_)
        if (c.rows() != k_ || c.cols() != k_)
            throw std::invalid_argument("BlockPoly: inconsistent block sizes");
}

BlockPoly BlockPoly::constant(const Matrix& c) { return BlockPoly(std::vector<Matrix>{c}); }

Matrix BlockPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Matrix(k_, k_);
    return coeffs_[j];
}

Matrix BlockPoly::eval(cplx z) const {
    Matrix acc = coeffs_.back();
    for (int j = static_cast<int>(coeffs_.size()) - 2; j >= 0; --j)
        acc = acc * z + coeffs_[j];
    return acc;
}

BlockPoly BlockPoly::shifted(int m) const {
    if (m < 0) throw std::invalid_argument("BlockPoly::shifted: negative shift");
    std::vector<Matrix> out(coeffs_.size() + m, Matrix(k_, k_));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j + m] = coeffs_[j];
    return BlockPoly(std::move(out));
}

BlockPoly BlockPoly::left_mul(const Matrix& b) const {
    std::vector<Matrix> out;
    out.reserve(coeffs_.size());
    for (const Matrix& c : coeffs_) out.push_back(b * c);
    return BlockPoly(std::move(out));
}

BlockPoly BlockPoly::right_mul(const Matrix& b) const {
    std::vector<Matrix> out;
    out.reserve(coeffs_.size());
    for (const Matrix& c : coeffs_) out.push_back(c * b);
    return BlockPoly(std::move(out));
}

BlockPoly BlockPoly::operator-(const BlockPoly& rhs) const {
    if (k_ != rhs.k_) throw std::invalid_argument("BlockPoly: size mismatch");
    std::vector<Matrix> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Matrix(k_, k_));
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = coeff(static_cast<int>(j)) - rhs.coeff(static_cast<int>(j));
    return BlockPoly(std::move(out));
}

BlockPoly block_star(const BlockPoly& p, int n) {
    if (n < p.degree())
        throw std::invalid_argument("block_star: declared degree below stored degree");
    std::vector<Matrix> out(static_cast<std::size_t>(n) + 1, Matrix(p.block_size(), p.block_size()));
    for (int j = 0; j <= n; ++j) out[j] = p.coeff(n - j).adjoint();
    return BlockPoly(std::move(out));
}

BlockSzegoPair block_szego_seed(int k) {
    if (k <= 0) throw std::invalid_argument("block_szego_seed: positive block size required");
    return BlockSzegoPair{BlockPoly::constant(Matrix::identity(k)),
                          BlockPoly::constant(Matrix::identity(k))};
}

BlockSzegoPair block_szego_step(const BlockSzegoPair& pair, const Matrix& alpha) {
    require_square(alpha, "block_szego_step");
    if (alpha.rows() != pair.phi_l.block_size())
        throw std::invalid_argument("block_szego_step: block size mismatch");
    if (op_norm(alpha) >= 1.0)
        throw std::invalid_argument("block_szego_step: ||alpha|| < 1 required");
    const Matrix inv_rl = inverse_of(block_rho_left(alpha));
    const Matrix inv_rr = inverse_of(block_rho_right(alpha));
    const BlockPoly zl = pair.phi_l.shifted(1);
    BlockPoly next_l = (zl - pair.phi_r_star.left_mul(alpha.adjoint())).left_mul(inv_rl);
    BlockPoly next_rs = (pair.phi_r_star - zl.left_mul(alpha)).left_mul(inv_rr);
    return BlockSzegoPair{std::move(next_l), std::move(next_rs)};
}

std::vector<BlockSzegoPair> block_szego_sequence(const MatrixVerblunsky& alphas, int n) {
    if (n < 0 || n > static_cast<int>(alphas.size()))
        throw std::invalid_argument("block_szego_sequence: 0 <= n <= size() required");
    std::vector<BlockSzegoPair> seq;
    seq.reserve(static_cast<std::size_t>(n) + 1);
    seq.push_back(block_szego_seed(alphas.block_size()));
    for (int j = 0; j < n; ++j) seq.push_back(block_szego_step(seq.back(), alphas.at(j)));
    return seq;
}

namespace {

cplx int_pow(cplx z, int m) {
    if (m >= 0) return std::pow(z, m);
    return cplx(1.0) / std::pow(z, -m);
}

} // namespace

Matrix block_chi(const std::vector<BlockSzegoPair>& seq, int ell, cplx z) {
    if (ell < 0 || ell >= static_cast<int>(seq.size()))
        throw std::out_of_range("block_chi: index beyond generated pairs");
    if (z == cplx(0.0)) throw std::invalid_argument("block_chi: z != 0 required");
    if (ell % 2 == 0) {
        const int m = ell / 2;
        return seq[ell].phi_r_star.eval(z) * int_pow(z, -m);
    }
    const int m = (ell + 1) / 2;
    return seq[ell].phi_l.eval(z) * int_pow(z, -m + 1);
}

Matrix block_x(const std::vector<BlockSzegoPair>& seq, int ell, cplx z) {
    if (ell < 0 || ell >= static_cast<int>(seq.size()))
        throw std::out_of_range("block_x: index beyond generated pairs");
    if (z == cplx(0.0)) throw std::invalid_argument("block_x: z != 0 required");
    if (ell % 2 == 0) {
        const int m = ell / 2;
        return seq[ell].phi_l.eval(z) * int_pow(z, -m);
    }
    const int m = (ell + 1) / 2;
    return seq[ell].phi_r_star.eval(z) * int_pow(z, -m);
}

MatrixCircleMeasure::MatrixCircleMeasure(std::vector<BlockCircleAtom> atoms)
    : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("MatrixCircleMeasure: no atoms");
    k_ = atoms_[0].weight.rows();
    Matrix total(k_, k_);
    for (const BlockCircleAtom& a : atoms_) {
        if (a.weight.rows() != k_ || a.weight.cols() != k_)
            throw std::invalid_argument("MatrixCircleMeasure: mixed block sizes");
        if (max_abs_diff(a.weight, a.weight.adjoint()) > 1e-12)
            throw std::invalid_argument("MatrixCircleMeasure: weight blocks must be Hermitian");
        const HermitianEigen eig = hermitian_eigen(a.weight);
        for (double v : eig.values)
            if (v < -1e-12)
                throw std::invalid_argument("MatrixCircleMeasure: weight blocks must be PSD");
        total = total + a.weight;
    }
    if (max_abs_diff(total, Matrix::identity(k_)) > 1e-8)
        throw std::invalid_argument("MatrixCircleMeasure: weights must sum to the identity");
}

Matrix block_inner_right(const MatrixCircleMeasure& mu, const BlockPoly& f, const BlockPoly& g) {
    const int k = mu.block_size();
    Matrix acc(k, k);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const cplx z = std::polar(1.0, mu.atom(i).theta);
        acc = acc + f.eval(z).adjoint() * mu.atom(i).weight * g.eval(z);
    }
    return acc;
}

Matrix block_inner_left(const MatrixCircleMeasure& mu, const BlockPoly& f, const BlockPoly& g) {
    const int k = mu.block_size();
    Matrix acc(k, k);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const cplx z = std::polar(1.0, mu.atom(i).theta);
        acc = acc + g.eval(z) * mu.atom(i).weight * f.eval(z).adjoint();
    }
    return acc;
}

namespace {

Matrix inverse_sqrt_or_throw(const Matrix& h, const char* who) {
    const HermitianEigen eig = hermitian_eigen(h);
    const int k = h.rows();
    for (double v : eig.values)
        if (v < 1e-10)
            throw std::domain_error(std::string(who) +
                                    ": measure too trivial for the requested degree");
    Matrix out(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            cplx s = 0.0;
            for (int m = 0; m < k; ++m)
                s += eig.vectors(i, m) * std::conj(eig.vectors(j, m)) / std::sqrt(eig.values[m]);
            out(i, j) = s;
        }
    return out;
}

} // namespace

ModuleBases module_gram_schmidt(const MatrixCircleMeasure& mu, int n) {
    if (n < 0) throw std::invalid_argument("module_gram_schmidt: n >= 0 required");
    const int k = mu.block_size();
    ModuleBases out;
    for (int deg = 0; deg <= n; ++deg) {
        std::vector<Matrix> mono(static_cast<std::size_t>(deg) + 1, Matrix(k, k));
        mono.back() = Matrix::identity(k);
        const BlockPoly zn(mono);

        // Right module sense: coefficients multiply the basis on the right,
        // psi = z^n - sum phi_m <<phi_m, z^n>>_R.
        BlockPoly psi_r = zn;
        for (const BlockPoly& prev : out.phi_r) {
            const Matrix c = block_inner_right(mu, prev, zn);
            psi_r = psi_r - prev.right_mul(c);
        }
        const Matrix hr = block_inner_right(mu, psi_r, psi_r);
        out.phi_r.push_back(psi_r.right_mul(inverse_sqrt_or_throw(hr, "module_gram_schmidt")));

        // Left module sense: coefficients multiply on the left.
        BlockPoly psi_l = zn;
        for (const BlockPoly& prev : out.phi_l) {
            const Matrix c = block_inner_left(mu, prev, zn);
            psi_l = psi_l - prev.left_mul(c);
        }
        const Matrix hl = block_inner_left(mu, psi_l, psi_l);
        out.phi_l.push_back(psi_l.left_mul(inverse_sqrt_or_throw(hl, "module_gram_schmidt")));
    }
    return out;
}

} // namespace cmv
