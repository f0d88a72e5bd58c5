#include "cmv/flows.hpp"

#include "cmv/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace cmv {

PeriodicPoint::PeriodicPoint(std::vector<cplx> a) : alphas(std::move(a)) {
    const int p = period();
    if (p < 2 || p % 2 != 0)
        throw std::invalid_argument("PeriodicPoint: even period >= 2 required");
    for (const cplx& v : alphas) {
        require_finite(v, "PeriodicPoint");
        if (std::abs(v) >= 1.0)
            throw std::invalid_argument("PeriodicPoint: coefficients must be strictly interior");
    }
}

double PeriodicPoint::rho_sq(int j) const { return 1.0 - std::norm(at(j)); }

cplx PeriodicPoint::at(int j) const {
    const int p = period();
    return alphas[((j % p) + p) % p];
}

cplx poisson_bracket(const WirtingerGradient& f, const WirtingerGradient& g,
                     const PeriodicPoint& point) {
    const int p = point.period();
    if (static_cast<int>(f.d_alpha.size()) != p || static_cast<int>(g.d_alpha.size()) != p ||
        static_cast<int>(f.d_alphabar.size()) != p || static_cast<int>(g.d_alphabar.size()) != p)
        throw std::invalid_argument("poisson_bracket: gradient length mismatch");
    cplx acc = 0.0;
    for (int j = 0; j < p; ++j)
        acc += point.rho_sq(j) *
               (f.d_alphabar[j] * g.d_alpha[j] - f.d_alpha[j] * g.d_alphabar[j]);
    return cplx(0.0, 1.0) * acc;
}

std::vector<cplx> hamiltonian_field(const WirtingerGradient& h_grad,
                                    const PeriodicPoint& point) {
    const int p = point.period();
    if (static_cast<int>(h_grad.d_alphabar.size()) != p)
        throw std::invalid_argument("hamiltonian_field: gradient length mismatch");
    std::vector<cplx> v(p);
    for (int j = 0; j < p; ++j)
        v[j] = cplx(0.0, -1.0) * point.rho_sq(j) * h_grad.d_alphabar[j];
    return v;
}

namespace {

struct Poly2 {
    CPoly m[2][2];
};

Poly2 mul(const Poly2& a, const Poly2& b) {
    Poly2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return c;
}

Poly2 identity2() {
    Poly2 e;
    e.m[0][0] = CPoly::one();
    e.m[1][1] = CPoly::one();
    return e;
}

// Transfer factor with the 1/rho prefactor folded into the entries.
Poly2 transfer_factor(cplx alpha) {
    const double inv_rho = 1.0 / std::sqrt(1.0 - std::norm(alpha));
    Poly2 a;
    a.m[0][0] = CPoly::monomial(1, inv_rho);
    a.m[0][1] = CPoly({-std::conj(alpha) * inv_rho});
    a.m[1][0] = CPoly::monomial(1, -alpha * inv_rho);
    a.m[1][1] = CPoly({cplx(inv_rho)});
    return a;
}

LaurentPoly trace_to_laurent(const Poly2& t, int p) {
    CPoly tr = t.m[0][0] + t.m[1][1];
    std::vector<cplx> coeffs(p + 1);
    for (int k = 0; k <= p; ++k) coeffs[k] = tr.coeff(k);
    return LaurentPoly(-p / 2, std::move(coeffs));
}

} // namespace

WirtingerGradient DiscriminantGradient::at(cplx z) const {
    if (z == 0.0)
        throw std::invalid_argument("DiscriminantGradient::at: z != 0 required");
    WirtingerGradient g;
    g.d_alpha.reserve(p);
    g.d_alphabar.reserve(p);
    for (int j = 0; j < p; ++j) {
        g.d_alpha.push_back(d_alpha[j].eval(z));
        g.d_alphabar.push_back(d_alphabar[j].eval(z));
    }
    return g;
}

DiscriminantGradient discriminant_gradients(const PeriodicPoint& point) {
    const int p = point.period();

    std::vector<Poly2> factor(p);
    for (int j = 0; j < p; ++j) factor[j] = transfer_factor(point.alphas[j]);

    // prefix[j] = A_{j-1} ... A_0, suffix[j] = A_{p-1} ... A_{j+1}.
    std::vector<Poly2> prefix(p), suffix(p);
    prefix[0] = identity2();
    for (int j = 1; j < p; ++j) prefix[j] = mul(factor[j - 1], prefix[j - 1]);
    suffix[p - 1] = identity2();
    for (int j = p - 2; j >= 0; --j) suffix[j] = mul(suffix[j + 1], factor[j + 1]);

    DiscriminantGradient out;
    out.p = p;
    out.d_alpha.resize(p);
    out.d_alphabar.resize(p);
    for (int j = 0; j < p; ++j) {
        const cplx a = point.alphas[j];
        const double rho_sq = point.rho_sq(j);
        const double inv_rho = 1.0 / std::sqrt(rho_sq);

        // dA = (conj(a) / 2 rho^2) A + (1/rho) E with E carrying the entry
        // that depends on alpha directly; for the conjugate direction the
        // scalar term uses a and E moves to the other corner.
        Poly2 da, dabar;
        const cplx s_a = std::conj(a) / (2.0 * rho_sq);
        const cplx s_abar = a / (2.0 * rho_sq);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                da.m[r][c] = factor[j].m[r][c] * s_a;
                dabar.m[r][c] = factor[j].m[r][c] * s_abar;
            }
        da.m[1][0] = da.m[1][0] + CPoly::monomial(1, -inv_rho);
        dabar.m[0][1] = dabar.m[0][1] + CPoly({cplx(-inv_rho)});

        out.d_alpha[j] = trace_to_laurent(mul(mul(suffix[j], da), prefix[j]), p);
        out.d_alphabar[j] = trace_to_laurent(mul(mul(suffix[j], dabar), prefix[j]), p);
    }
    return out;
}

std::vector<cplx> al_vector_field(const PeriodicPoint& point) {
    const int p = point.period();
    std::vector<cplx> v(p);
    for (int j = 0; j < p; ++j)
        v[j] = cplx(0.0, 1.0) * point.rho_sq(j) * (point.at(j + 1) + point.at(j - 1));
    return v;
}

std::vector<cplx> schur_vector_field(const PeriodicPoint& point) {
    const int p = point.period();
    std::vector<cplx> v(p);
    for (int j = 0; j < p; ++j)
        v[j] = point.rho_sq(j) * (point.at(j + 1) - point.at(j - 1));
    return v;
}

namespace {

bool inside_safety_region(const std::vector<cplx>& a) {
    for (const cplx& v : a)
        if (!(std::abs(v) <= 1.0 - 1e-6)) return false;
    return true;
}

std::vector<cplx> axpy(const std::vector<cplx>& y, double s, const std::vector<cplx>& k) {
    std::vector<cplx> out(y.size());
    for (size_t i = 0; i < y.size(); ++i) out[i] = y[i] + s * k[i];
    return out;
}

} // namespace

FlowTrajectory integrate(const VectorField& field, const PeriodicPoint& start,
                         double t_end, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("integrate: h > 0 required");
    if (!(t_end >= 0.0)) throw std::invalid_argument("integrate: t_end >= 0 required");

    FlowTrajectory traj;
    auto log_state = [&](double t, PeriodicPoint state) {
        traj.times.push_back(t);
        traj.discriminant_coeffs.push_back(discriminant(state.alphas).delta.coeffs());
        traj.states.push_back(std::move(state));
    };

    if (!inside_safety_region(start.alphas)) return traj;
    log_state(0.0, start);

    const long long steps = std::llround(t_end / h);
    for (long long i = 1; i <= steps; ++i) {
        const std::vector<cplx>& y = traj.states.back().alphas;
        std::vector<cplx> k1 = field(PeriodicPoint(y));

        std::vector<cplx> y2 = axpy(y, 0.5 * h, k1);
        if (!inside_safety_region(y2)) return traj;
        std::vector<cplx> k2 = field(PeriodicPoint(y2));

        std::vector<cplx> y3 = axpy(y, 0.5 * h, k2);
        if (!inside_safety_region(y3)) return traj;
        std::vector<cplx> k3 = field(PeriodicPoint(y3));

        std::vector<cplx> y4 = axpy(y, h, k3);
        if (!inside_safety_region(y4)) return traj;
        std::vector<cplx> k4 = field(PeriodicPoint(y4));

        std::vector<cplx> next(y.size());
        for (size_t j = 0; j < y.size(); ++j)
            next[j] = y[j] + (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        if (!inside_safety_region(next)) return traj;
        log_state(static_cast<double>(i) * h, PeriodicPoint(std::move(next)));
    }
    traj.completed = true;
    return traj;
}

} // namespace cmv
