#pragma once

// The symplectic structure on periodic coefficient space and the integrable
// flows living on it. The discriminant's coefficients Poisson-commute, so
// their flows share invariant tori; the two classical representatives are the
// defocusing Ablowitz-Ladik flow and the Schur flow. Everything here is
// finite dimensional: a point is one period of coefficients.

#include "cmv/opuc.hpp"

#include <functional>
#include <vector>

namespace cmv {

// One period of strictly interior coefficients; the period must be even so
// a discriminant exists.
struct PeriodicPoint {
    std::vector<cplx> alphas;

    explicit PeriodicPoint(std::vector<cplx> a);
    int period() const { return static_cast<int>(alphas.size()); }
    double rho_sq(int j) const;
    cplx at(int j) const;   // cyclic indexing, any integer j
};

// Wirtinger gradient of a scalar function at a point: d_alpha[j] is the
// derivative in alpha_j, d_alphabar[j] in conj(alpha_j).
struct WirtingerGradient {
    std::vector<cplx> d_alpha;
    std::vector<cplx> d_alphabar;
};

// {f, g} = i sum_j rho_j^2 (df/dabar_j dg/da_j - df/da_j dg/dabar_j).
cplx poisson_bracket(const WirtingerGradient& f, const WirtingerGradient& g,
                     const PeriodicPoint& point);

// Hamiltonian vector field alpha_dot_j = {alpha_j, H} = -i rho_j^2 dH/dabar_j.
std::vector<cplx> hamiltonian_field(const WirtingerGradient& h_grad,
                                    const PeriodicPoint& point);

// Full z-dependence of the discriminant's Wirtinger gradients, obtained by
// differentiating the transfer-matrix product factor by factor. Evaluating
// at a point gives the gradient set used in bracket computations.
struct DiscriminantGradient {
    int p;
    std::vector<LaurentPoly> d_alpha;
    std::vector<LaurentPoly> d_alphabar;

    WirtingerGradient at(cplx z) const;   // z != 0
};

DiscriminantGradient discriminant_gradients(const PeriodicPoint& point);

// alpha_dot_j = i rho_j^2 (alpha_{j+1} + alpha_{j-1}), indices cyclic.
std::vector<cplx> al_vector_field(const PeriodicPoint& point);

// alpha_dot_j = rho_j^2 (alpha_{j+1} - alpha_{j-1}), indices cyclic.
std::vector<cplx> schur_vector_field(const PeriodicPoint& point);

using VectorField = std::function<std::vector<cplx>(const PeriodicPoint&)>;

// Fixed-step classical Runge-Kutta trajectory with the discriminant
// coefficients logged at every step. If the trajectory leaves the safety
// region (any |alpha_j| > 1 - 1e-6) integration stops early and `completed`
// is false; the partial trajectory is still returned.
struct FlowTrajectory {
    std::vector<double> times;
    std::vector<PeriodicPoint> states;
    std::vector<std::vector<cplx>> discriminant_coeffs;
    bool completed = false;
};

FlowTrajectory integrate(const VectorField& field, const PeriodicPoint& start,
                         double t_end, double h);

} // namespace cmv
