#include "cmv/geronimus.hpp"

#include "cmv/cmv_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmv {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double mirror_angle(double theta) {
    double m = two_pi - theta;
    if (m >= two_pi) m -= two_pi;
    return m;
}

} // namespace

SymmetricCircleMeasure::SymmetricCircleMeasure(DiscreteCircleMeasure mu) : mu_(std::move(mu)) {
    std::vector<bool> matched(mu_.size(), false);
    const auto& atoms = mu_.atoms();
    for (int i = 0; i < mu_.size(); ++i) {
        if (matched[i]) continue;
        const double m = mirror_angle(atoms[i].theta);
        if (std::abs(m - atoms[i].theta) < 1e-12) { matched[i] = true; continue; }
        bool found = false;
        for (int j = i + 1; j < mu_.size() && !found; ++j) {
            if (matched[j]) continue;
            if (std::abs(atoms[j].theta - m) < 1e-12 &&
                std::abs(atoms[j].weight - atoms[i].weight) < 1e-12) {
                matched[i] = matched[j] = true;
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument(
                "SymmetricCircleMeasure: atom lacks a mirror partner of equal weight");
    }
}

std::vector<IntervalAtom> szego_map(const SymmetricCircleMeasure& xi) {
    std::vector<IntervalAtom> out;
    for (const CircleAtom& atom : xi.measure().atoms()) {
        const double x = 2.0 * std::cos(atom.theta);
        bool merged = false;
        for (IntervalAtom& existing : out)
            if (std::abs(existing.x - x) < 1e-10) {
                existing.weight += atom.weight;
                merged = true;
                break;
            }
        if (!merged) out.push_back(IntervalAtom{x, atom.weight});
    }
    std::sort(out.begin(), out.end(),
              [](const IntervalAtom& l, const IntervalAtom& r) { return l.x < r.x; });
    return out;
}

JacobiOperator geronimus_jacobi(const std::vector<double>& alphas, int count) {
    if (count < 1) throw std::invalid_argument("geronimus_jacobi: count >= 1 required");
    for (double a : alphas)
        if (!(a > -1.0 && a < 1.0))
            throw std::invalid_argument("geronimus_jacobi: real coefficients in (-1,1) required");
    auto at = [&](int j) -> double {
        if (j == -1) return -1.0;
        if (j < -1) return 0.0;
        return j < static_cast<int>(alphas.size()) ? alphas[j] : 0.0;
    };
    JacobiOperator jac;
    jac.a.resize(count);
    jac.b.resize(count);
    for (int n = 0; n < count; ++n) {
        const double a2 =
            (1.0 - at(2 * n - 1)) * (1.0 - at(2 * n) * at(2 * n)) * (1.0 + at(2 * n + 1));
        jac.a[n] = std::sqrt(a2);
        jac.b[n] = (1.0 - at(2 * n - 1)) * at(2 * n) - (1.0 + at(2 * n - 1)) * at(2 * n - 2);
    }
    return jac;
}

Matrix geronimus_s_block(double alpha) {
    if (!(alpha > -1.0 && alpha < 1.0))
        throw std::invalid_argument("geronimus_s_block: alpha in (-1,1) required");
    const double inv = 1.0 / std::sqrt(2.0);
    Matrix s(2, 2);
    s(0, 0) = inv * std::sqrt(1.0 - alpha);
    s(0, 1) = -inv * std::sqrt(1.0 + alpha);
    s(1, 0) = inv * std::sqrt(1.0 + alpha);
    s(1, 1) = inv * std::sqrt(1.0 - alpha);
    return s;
}

JacobiReduction reduce_to_jacobi(const VerblunskySequence& alphas, int window) {
    if (window < 4) throw std::invalid_argument("reduce_to_jacobi: window >= 4 required");
    for (const cplx& a : alphas.coeffs())
        if (a.imag() != 0.0)
            throw std::invalid_argument("reduce_to_jacobi: real coefficients required");
    if (alphas.is_improper() && window != alphas.size())
        throw std::invalid_argument("reduce_to_jacobi: improper input fixes window = size");

    std::vector<cplx> padded(window + 2);
    for (int j = 0; j < window + 2 && j < alphas.size(); ++j) padded[j] = alphas.alpha(j);
    LMFactors lm = alphas.is_improper() ? build_lm(alphas) : build_lm_window(padded, window);
    Matrix l = lm.l.to_dense();
    Matrix m = lm.m.to_dense();

    // S = 1 + S(alpha_1) + S(alpha_3) + ...; any block that would straddle the
    // window edge is left as the identity there.
    Matrix s = Matrix::identity(window);
    Matrix sinv = Matrix::identity(window);
    for (int j = 1; j + 1 < window; j += 2) {
        const cplx aj = j < alphas.size() ? alphas.alpha(j) : cplx(0.0);
        if (std::abs(aj) >= 1.0) continue;   // improper interior guard
        Matrix blk = geronimus_s_block(aj.real());
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                s(j + r, j + c) = blk(r, c);
                sinv(j + r, j + c) = std::conj(blk(c, r));   // rotation inverse
            }
    }

    JacobiReduction out;
    out.b = s * l * sinv;
    out.r = s * m * sinv;
    out.folded = s * (l * m + m * l) * sinv;

    // The folded operator commutes with the sign matrix R, so the Jacobi
    // blocks live on R's eigenspaces. Away from the window edge the signs
    // alternate and the split is even/odd; an improper sequence ending in +1
    // flips the last sign and moves that index into the plus block (matching
    // the extra eigenvalues the terminal +1 pins at z = +-1).
    std::vector<int> plus, minus;
    for (int j = 0; j < window; ++j)
        (out.r(j, j).real() > 0.0 ? plus : minus).push_back(j);
    auto read_block = [&](const std::vector<int>& idx, JacobiOperator& jac) {
        const int n = static_cast<int>(idx.size());
        jac.b.resize(n);
        jac.a.resize(std::max(0, n - 1));
        for (int k = 0; k < n; ++k) {
            jac.b[k] = out.folded(idx[k], idx[k]).real();
            if (k + 1 < n) jac.a[k] = out.folded(idx[k], idx[k + 1]).real();
        }
    };
    read_block(plus, out.even);
    read_block(minus, out.odd);
    return out;
}

} // namespace cmv
