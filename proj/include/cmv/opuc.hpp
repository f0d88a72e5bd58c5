// Core value types and the Szegő recursion engine: polynomials on the circle,
// Verblunsky coefficient sequences, discrete measures, transfer matrices, and
// the Gram-Schmidt path from a measure back to its coefficients.
#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace cmv {

using cplx = std::complex<double>;

// Tolerance ladder used across the library: exact algebraic identities get
// 1e-12, anything downstream of an iterative or spectral computation 1e-8.
namespace tol {
inline constexpr double exact = 1e-12;
inline constexpr double spectral = 1e-8;
}

bool is_finite(cplx z);
void require_finite(cplx z, const char* what);

// Polynomial with complex coefficients, ascending degree. Trailing exact
// zeros are trimmed so degree() is honest; the zero polynomial has degree -1.
class CPoly {
public:
    CPoly() = default;
    explicit CPoly(std::vector<cplx> coeffs);
    static CPoly one();
    static CPoly monomial(int k, cplx coeff = 1.0);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    cplx coeff(int k) const;
    const std::vector<cplx>& coeffs() const { return c_; }

    cplx eval(cplx z) const;
    CPoly shifted(int k) const;              // multiply by z^k
    CPoly operator+(const CPoly& rhs) const;
    CPoly operator-(const CPoly& rhs) const;
    CPoly operator*(const CPoly& rhs) const;
    CPoly operator*(cplx s) const;

private:
    std::vector<cplx> c_;
    void trim();
};

// Finite Laurent polynomial: coefficient of z^{min_degree + i} at index i.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int min_degree, std::vector<cplx> coeffs);

    int min_degree() const { return min_; }
    int max_degree() const { return min_ + static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    cplx coeff(int k) const;
    const std::vector<cplx>& coeffs() const { return c_; }

    cplx eval(cplx z) const;                 // z must be nonzero if min_ < 0

private:
    int min_ = 0;
    std::vector<cplx> c_;
};

class VerblunskySequence {
public:
    enum class Kind { Proper, Improper };

    // Strictly |alpha_j| < 1 throughout.
    static VerblunskySequence proper(std::vector<cplx> coeffs);
    // |alpha_j| < 1 before the last entry; the last must sit on the circle
    // within 1e-12 and is renormalized to exact modulus 1.
    static VerblunskySequence improper(std::vector<cplx> coeffs);
    // Picks the kind from the data: a final coefficient with |alpha| > 1-1e-12
    // is snapped to the circle, anything else must be strictly inside.
    static VerblunskySequence classify(std::vector<cplx> coeffs);

    Kind kind() const { return kind_; }
    bool is_improper() const { return kind_ == Kind::Improper; }
    int size() const { return static_cast<int>(coeffs_.size()); }
    cplx alpha(int j) const;
    double rho(int j) const;                 // sqrt(1 - |alpha_j|^2), derived
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    int proper_count() const { return is_improper() ? size() - 1 : size(); }
    VerblunskySequence negated() const;      // alpha_j -> -alpha_j, same kind

private:
    VerblunskySequence(std::vector<cplx> c, Kind k) : coeffs_(std::move(c)), kind_(k) {}
    std::vector<cplx> coeffs_;
    Kind kind_;
};

struct CircleAtom {
    double theta;    // in [0, 2pi)
    double weight;   // > 0
};

class DiscreteCircleMeasure {
public:
    explicit DiscreteCircleMeasure(std::vector<CircleAtom> atoms);

    int size() const { return static_cast<int>(atoms_.size()); }
    const std::vector<CircleAtom>& atoms() const { return atoms_; }
    cplx point(int i) const;                 // e^{i theta_i}

private:
    std::vector<CircleAtom> atoms_;
};

struct TransferMatrix {
    cplx a, b, c, d;   // row-major 2x2
    cplx z;
    cplx det() const { return a * d - b * c; }
};

// --- Operations ---------------------------------------------------------

// Degree-n reversal with conjugation: sum c_j z^j -> sum conj(c_{n-j}) z^j.
CPoly szego_dual(const CPoly& p, int n);

// One step of the Szegő recursion: rho phi' = z phi - conj(alpha) phistar,
// rho phistar' = phistar - alpha z phi.
std::pair<CPoly, CPoly> szego_step(const CPoly& phi, const CPoly& phistar, cplx alpha);

// Orthonormal pairs (phi_k, phi_k^*) for k = 0..n; leading coefficients are
// the positive kappa_n = prod rho_j^{-1}.
std::vector<std::pair<CPoly, CPoly>> orthonormal_polys(const VerblunskySequence& alphas, int n);

// Same recursion run on -alpha; these are the second kind polynomials psi_n.
std::vector<std::pair<CPoly, CPoly>> second_kind_polys(const VerblunskySequence& alphas, int n);

// Monic chain Phi_{n+1} = z Phi_n - conj(alpha_n) Phi_n^*. Accepts one
// unimodular terminal coefficient, which yields the paraorthogonal Phi_N.
std::vector<std::pair<CPoly, CPoly>> monic_polys(const VerblunskySequence& alphas, int n);

TransferMatrix transfer_matrix(cplx alpha, cplx z);

// Gram-Schmidt of 1, z, ..., z^{m+1} in L^2(mu); coefficients read off from
// alpha_n = -conj(Phi_{n+1}(0)). With m = atoms-1 the final coefficient lands
// on the circle and the result is Improper.
VerblunskySequence measure_to_verblunsky(const DiscreteCircleMeasure& mu, int m);

} // namespace cmv
