#include "cmv/opuc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cmv {

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(cplx z, const char* what) {
    if (!is_finite(z)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

// --- CPoly ---------------------------------------------------------------

CPoly::CPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    for (const cplx& x : c_) require_finite(x, "CPoly");
    trim();
}

void CPoly::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

CPoly CPoly::one() { return CPoly({cplx(1.0)}); }

CPoly CPoly::monomial(int k, cplx coeff) {
    if (k < 0) throw std::invalid_argument("CPoly::monomial: negative degree");
    std::vector<cplx> c(k + 1);
    c[k] = coeff;
    return CPoly(std::move(c));
}

cplx CPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0.0;
    return c_[k];
}

cplx CPoly::eval(cplx z) const {
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

CPoly CPoly::shifted(int k) const {
    if (is_zero()) return CPoly();
    if (k < 0) throw std::invalid_argument("CPoly::shifted: negative shift");
    std::vector<cplx> c(c_.size() + k);
    std::copy(c_.begin(), c_.end(), c.begin() + k);
    return CPoly(std::move(c));
}

CPoly CPoly::operator+(const CPoly& rhs) const {
    std::vector<cplx> c(std::max(c_.size(), rhs.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        cplx v = 0.0;
        if (i < c_.size()) v += c_[i];
        if (i < rhs.c_.size()) v += rhs.c_[i];
        c[i] = v;
    }
    return CPoly(std::move(c));
}

CPoly CPoly::operator-(const CPoly& rhs) const { return *this + rhs * cplx(-1.0); }

CPoly CPoly::operator*(const CPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return CPoly();
    std::vector<cplx> c(c_.size() + rhs.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += c_[i] * rhs.c_[j];
    return CPoly(std::move(c));
}

CPoly CPoly::operator*(cplx s) const {
    std::vector<cplx> c = c_;
    for (cplx& x : c) x *= s;
    return CPoly(std::move(c));
}

// --- LaurentPoly ---------------------------------------------------------

LaurentPoly::LaurentPoly(int min_degree, std::vector<cplx> coeffs)
    : min_(min_degree), c_(std::move(coeffs)) {
    for (const cplx& x : c_) require_finite(x, "LaurentPoly");
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
    while (!c_.empty() && c_.front() == 0.0) {
        c_.erase(c_.begin());
        ++min_;
    }
    if (c_.empty()) min_ = 0;
}

cplx LaurentPoly::coeff(int k) const {
    int i = k - min_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0.0;
    return c_[i];
}

cplx LaurentPoly::eval(cplx z) const {
    if (c_.empty()) return 0.0;
    if (min_ < 0 && z == 0.0) throw std::domain_error("LaurentPoly::eval at z = 0 with negative degrees");
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, cplx(min_));
}

// --- VerblunskySequence --------------------------------------------------

namespace {

void check_head(const std::vector<cplx>& c, int upto, const char* what) {
    for (int j = 0; j < upto; ++j) {
        require_finite(c[j], what);
        if (std::abs(c[j]) >= 1.0)
            throw std::invalid_argument(std::string(what) + ": |alpha_" + std::to_string(j) + "| >= 1");
    }
}

} // namespace

VerblunskySequence VerblunskySequence::proper(std::vector<cplx> coeffs) {
    check_head(coeffs, static_cast<int>(coeffs.size()), "VerblunskySequence::proper");
    return VerblunskySequence(std::move(coeffs), Kind::Proper);
}

VerblunskySequence VerblunskySequence::improper(std::vector<cplx> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("VerblunskySequence::improper: empty");
    check_head(coeffs, static_cast<int>(coeffs.size()) - 1, "VerblunskySequence::improper");
    cplx& last = coeffs.back();
    require_finite(last, "VerblunskySequence::improper");
    double m = std::abs(last);
    if (std::abs(m - 1.0) > tol::exact)
        throw std::invalid_argument("VerblunskySequence::improper: terminal coefficient off the circle");
    last /= m;
    return VerblunskySequence(std::move(coeffs), Kind::Improper);
}

VerblunskySequence VerblunskySequence::classify(std::vector<cplx> coeffs) {
    if (!coeffs.empty() && std::abs(coeffs.back()) > 1.0 - tol::exact) {
        check_head(coeffs, static_cast<int>(coeffs.size()) - 1, "VerblunskySequence");
        cplx& last = coeffs.back();
        require_finite(last, "VerblunskySequence");
        if (std::abs(std::abs(last) - 1.0) > 1e-8)
            throw std::invalid_argument("VerblunskySequence: terminal coefficient outside the disk");
        last /= std::abs(last);
        return VerblunskySequence(std::move(coeffs), Kind::Improper);
    }
    return proper(std::move(coeffs));
}

cplx VerblunskySequence::alpha(int j) const {
    if (j < 0 || j >= size()) throw std::out_of_range("VerblunskySequence::alpha");
    return coeffs_[j];
}

double VerblunskySequence::rho(int j) const {
    // A terminal coefficient normalized onto the circle can land an ulp to
    // either side of norm 1; treat that band as exactly unimodular.
    const double gap = 1.0 - std::norm(alpha(j));
    return gap <= 1e-15 ? 0.0 : std::sqrt(gap);
}

VerblunskySequence VerblunskySequence::negated() const {
    std::vector<cplx> c = coeffs_;
    for (cplx& x : c) x = -x;
    return VerblunskySequence(std::move(c), kind_);
}

// --- DiscreteCircleMeasure -----------------------------------------------

DiscreteCircleMeasure::DiscreteCircleMeasure(std::vector<CircleAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("DiscreteCircleMeasure: needs at least one atom");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double total = 0.0;
    for (CircleAtom& a : atoms_) {
        if (!std::isfinite(a.theta) || !std::isfinite(a.weight))
            throw std::invalid_argument("DiscreteCircleMeasure: non-finite atom");
        if (a.weight <= 0.0) throw std::invalid_argument("DiscreteCircleMeasure: weights must be positive");
        a.theta = std::fmod(a.theta, two_pi);
        if (a.theta < 0.0) a.theta += two_pi;
        total += a.weight;
    }
    if (std::abs(total - 1.0) > tol::exact)
        throw std::invalid_argument("DiscreteCircleMeasure: weights must sum to 1");
    for (size_t i = 0; i < atoms_.size(); ++i)
        for (size_t j = i + 1; j < atoms_.size(); ++j) {
            double d = std::abs(atoms_[i].theta - atoms_[j].theta);
            d = std::min(d, two_pi - d);
            if (d <= 1e-10) throw std::invalid_argument("DiscreteCircleMeasure: atoms too close");
        }
}

cplx DiscreteCircleMeasure::point(int i) const {
    return std::polar(1.0, atoms_[i].theta);
}

// --- Szegő machinery -----------------------------------------------------

CPoly szego_dual(const CPoly& p, int n) {
    if (p.degree() > n) throw std::invalid_argument("szego_dual: degree exceeds context degree");
    std::vector<cplx> c(n + 1);
    for (int j = 0; j <= n; ++j) c[j] = std::conj(p.coeff(n - j));
    return CPoly(std::move(c));
}

std::pair<CPoly, CPoly> szego_step(const CPoly& phi, const CPoly& phistar, cplx alpha) {
    require_finite(alpha, "szego_step");
    if (std::abs(alpha) >= 1.0) throw std::invalid_argument("szego_step: |alpha| >= 1");
    const double rho = std::sqrt(1.0 - std::norm(alpha));
    CPoly next = (phi.shifted(1) - phistar * std::conj(alpha)) * (1.0 / rho);
    CPoly next_star = (phistar - phi.shifted(1) * alpha) * (1.0 / rho);
    return {std::move(next), std::move(next_star)};
}

std::vector<std::pair<CPoly, CPoly>> orthonormal_polys(const VerblunskySequence& alphas, int n) {
    if (n < 0 || n > alphas.proper_count())
        throw std::invalid_argument("orthonormal_polys: n out of range");
    std::vector<std::pair<CPoly, CPoly>> out;
    out.reserve(n + 1);
    out.emplace_back(CPoly::one(), CPoly::one());
    for (int k = 0; k < n; ++k) {
        auto [phi, star] = szego_step(out.back().first, out.back().second, alphas.alpha(k));
        out.emplace_back(std::move(phi), std::move(star));
    }
    return out;
}

std::vector<std::pair<CPoly, CPoly>> second_kind_polys(const VerblunskySequence& alphas, int n) {
    return orthonormal_polys(alphas.negated(), n);
}

std::vector<std::pair<CPoly, CPoly>> monic_polys(const VerblunskySequence& alphas, int n) {
    if (n < 0 || n > alphas.size())
        throw std::invalid_argument("monic_polys: n out of range");
    std::vector<std::pair<CPoly, CPoly>> out;
    out.reserve(n + 1);
    out.emplace_back(CPoly::one(), CPoly::one());
    for (int k = 0; k < n; ++k) {
        const cplx a = alphas.alpha(k);
        CPoly next = out.back().first.shifted(1) - out.back().second * std::conj(a);
        CPoly next_star = out.back().second - out.back().first.shifted(1) * a;
        out.emplace_back(std::move(next), std::move(next_star));
    }
    return out;
}

TransferMatrix transfer_matrix(cplx alpha, cplx z) {
    require_finite(alpha, "transfer_matrix");
    require_finite(z, "transfer_matrix");
    if (std::abs(alpha) >= 1.0) throw std::invalid_argument("transfer_matrix: |alpha| >= 1");
    const double inv_rho = 1.0 / std::sqrt(1.0 - std::norm(alpha));
    return TransferMatrix{z * inv_rho, -std::conj(alpha) * inv_rho,
                          -alpha * z * inv_rho, inv_rho, z};
}

// --- measure -> coefficients ---------------------------------------------

namespace {

// Polynomial carried through Gram-Schmidt as coefficients plus its values on
// the atoms, so inner products stay O(atoms) while Phi(0) stays available.
struct GsVector {
    std::vector<cplx> coeff;
    std::vector<cplx> vals;
};

cplx gs_inner(const DiscreteCircleMeasure& mu, const GsVector& f, const GsVector& g) {
    cplx s = 0.0;
    for (int i = 0; i < mu.size(); ++i)
        s += mu.atoms()[i].weight * std::conj(f.vals[i]) * g.vals[i];
    return s;
}

void gs_axpy(GsVector& v, cplx c, const GsVector& b) {
    if (v.coeff.size() < b.coeff.size()) v.coeff.resize(b.coeff.size());
    for (size_t i = 0; i < b.coeff.size(); ++i) v.coeff[i] -= c * b.coeff[i];
    for (size_t i = 0; i < b.vals.size(); ++i) v.vals[i] -= c * b.vals[i];
}

} // namespace

VerblunskySequence measure_to_verblunsky(const DiscreteCircleMeasure& mu, int m) {
    const int atoms = mu.size();
    if (m < 0 || m > atoms - 1)
        throw std::invalid_argument("measure_to_verblunsky: m must be <= atoms - 1");

    std::vector<cplx> points(atoms);
    for (int i = 0; i < atoms; ++i) points[i] = mu.point(i);

    std::vector<GsVector> phi;       // monic orthogonal chain
    std::vector<double> norms2;      // squared L^2(mu) norms
    GsVector cur{{cplx(1.0)}, std::vector<cplx>(atoms, 1.0)};
    phi.push_back(cur);
    norms2.push_back(gs_inner(mu, cur, cur).real());

    std::vector<cplx> alphas;
    for (int n = 0; n <= m; ++n) {
        // Next monic candidate z * Phi_n, then modified Gram-Schmidt with one
        // reorthogonalization pass against everything built so far.
        GsVector next;
        next.coeff.assign(phi[n].coeff.size() + 1, 0.0);
        for (size_t i = 0; i < phi[n].coeff.size(); ++i) next.coeff[i + 1] = phi[n].coeff[i];
        next.vals.resize(atoms);
        for (int i = 0; i < atoms; ++i) next.vals[i] = points[i] * phi[n].vals[i];

        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k <= n; ++k) {
                cplx c = gs_inner(mu, phi[k], next) / norms2[k];
                gs_axpy(next, c, phi[k]);
            }

        cplx a = -std::conj(next.coeff[0]);
        const bool terminal = (n == atoms - 1);
        if (!terminal) {
            double nn = gs_inner(mu, next, next).real();
            if (nn <= 1e-24 * static_cast<double>(atoms))
                throw std::domain_error("measure_to_verblunsky: nontriviality violated (degenerate Gram matrix)");
            if (std::abs(a) >= 1.0)
                throw std::domain_error("measure_to_verblunsky: ill-conditioned measure pushed a coefficient out of the disk");
            phi.push_back(next);
            norms2.push_back(nn);
        }
        alphas.push_back(a);
    }
    return VerblunskySequence::classify(std::move(alphas));
}

} // namespace cmv
