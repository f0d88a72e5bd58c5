#include "cmv/resolvent.hpp"

#include <cmath>
#include <stdexcept>

namespace cmv {

namespace {

void require_open_disk(cplx z, const char* who) {
    require_finite(z, who);
    if (std::abs(z) >= 1.0)
        throw std::invalid_argument(std::string(who) + ": |z| < 1 required");
}

// Scalar Szegő recursion at a fixed point. Runs over the stored coefficients
// and returns (phi_n, phistar_n) for n = 0..steps, padding with alpha = 0
// past the support (phistar freezes there, phi picks up factors of z).
struct PointRecursion {
    std::vector<cplx> phi, phistar;
};

PointRecursion run_recursion(const std::vector<cplx>& alphas, cplx z, int steps) {
    PointRecursion out;
    out.phi.resize(steps + 1);
    out.phistar.resize(steps + 1);
    cplx phi = 1.0, phistar = 1.0;
    out.phi[0] = phi;
    out.phistar[0] = phistar;
    for (int n = 0; n < steps; ++n) {
        cplx a = n < static_cast<int>(alphas.size()) ? alphas[n] : cplx(0.0);
        double rho = std::sqrt(std::max(0.0, 1.0 - std::norm(a)));
        cplx next_phi = (z * phi - std::conj(a) * phistar) / rho;
        cplx next_star = (phistar - a * z * phi) / rho;
        phi = next_phi;
        phistar = next_star;
        out.phi[n + 1] = phi;
        out.phistar[n + 1] = phistar;
    }
    return out;
}

} // namespace

CaratheodoryValue caratheodory_discrete(const DiscreteCircleMeasure& mu, cplx z) {
    require_open_disk(z, "caratheodory_discrete");
    // (e + z)/(e - z) written as 1 + 2z/(e - z) so that F(0) = sum of the
    // weights exactly, with no complex-division residue.
    cplx f = 0.0;
    for (const CircleAtom& atom : mu.atoms()) {
        cplx e = std::polar(1.0, atom.theta);
        f += atom.weight * (1.0 + 2.0 * z / (e - z));
    }
    return CaratheodoryValue{z, f};
}

CaratheodoryValue caratheodory_limit(const VerblunskySequence& alphas, cplx z) {
    require_open_disk(z, "caratheodory_limit");
    if (alphas.is_improper())
        throw std::invalid_argument("caratheodory_limit: eventually-zero sequence required");
    const int n = alphas.size();
    PointRecursion phi = run_recursion(alphas.coeffs(), z, n);
    PointRecursion psi = run_recursion(alphas.negated().coeffs(), z, n);
    if (phi.phistar[n] == 0.0)
        throw std::runtime_error("caratheodory_limit: phistar vanished inside the disk");
    return CaratheodoryValue{z, psi.phistar[n] / phi.phistar[n]};
}

cplx schur_from_caratheodory(cplx f_value, cplx z) {
    require_open_disk(z, "schur_from_caratheodory");
    if (z == 0.0) throw std::invalid_argument("schur_from_caratheodory: z != 0 required");
    if (std::abs(f_value + 1.0) < 1e-14)
        throw std::domain_error("schur_from_caratheodory: F = -1 pole");
    return (f_value - 1.0) / (z * (f_value + 1.0));
}

WeylSolutions weyl_solutions(const VerblunskySequence& alphas, cplx z, int m) {
    require_open_disk(z, "weyl_solutions");
    if (z == 0.0) throw std::invalid_argument("weyl_solutions: z != 0 required");
    if (m < 1) throw std::invalid_argument("weyl_solutions: m >= 1 required");
    if (alphas.is_improper())
        throw std::invalid_argument("weyl_solutions: eventually-zero sequence required");

    const cplx f = caratheodory_limit(alphas, z).f;
    PointRecursion phi = run_recursion(alphas.coeffs(), z, m - 1);
    PointRecursion psi = run_recursion(alphas.negated().coeffs(), z, m - 1);

    WeylSolutions w;
    w.z = z;
    w.f = f;
    w.chi.resize(m);
    w.x.resize(m);
    w.y.resize(m);
    w.upsilon.resize(m);
    w.p.resize(m);
    w.pi.resize(m);
    for (int n = 0; n < m; ++n) {
        if (n % 2 == 0) {
            const int k = n / 2;
            const cplx zk = std::pow(z, -k);
            w.chi[n] = zk * phi.phistar[n];
            w.x[n] = zk * phi.phi[n];
            w.y[n] = zk * psi.phi[n];
            w.upsilon[n] = -zk * psi.phistar[n];
        } else {
            const int l = (n + 1) / 2;
            const cplx zl = std::pow(z, -l);
            w.chi[n] = zl * z * phi.phi[n];
            w.x[n] = zl * phi.phistar[n];
            w.y[n] = -zl * psi.phistar[n];
            w.upsilon[n] = zl * z * psi.phi[n];
        }
        w.p[n] = w.y[n] + f * w.x[n];
        w.pi[n] = w.upsilon[n] + f * w.chi[n];
    }

    // Past the coefficient support the starred recursions freeze, so
    // F phistar - psistar vanishes identically there. Computed as a
    // difference it would instead carry a rounding residue that the
    // z^{-n/2} Laurent weights blow up catastrophically; write the exact
    // zeros (odd p, even pi) and chain the surviving parity by its exact
    // one-step factor of z.
    int support = 0;
    for (int j = 0; j < alphas.size(); ++j)
        if (alphas.alpha(j) != 0.0) support = j + 1;
    for (int n = support; n < m; ++n) {
        if (n % 2 == 1) {
            w.p[n] = 0.0;
            if (n >= support + 2) w.pi[n] = z * w.pi[n - 2];
        } else {
            w.pi[n] = 0.0;
            if (n >= support + 2) w.p[n] = z * w.p[n - 2];
        }
    }
    return w;
}

cplx cmv_resolvent_entry(const VerblunskySequence& alphas, cplx z, int k, int l) {
    if (k < 0 || l < 0)
        throw std::invalid_argument("cmv_resolvent_entry: indices >= 0 required");
    WeylSolutions w = weyl_solutions(alphas, z, std::max(k, l) + 1);
    const cplx pref = 1.0 / (2.0 * z);
    const bool lower = k > l || (k == l && k % 2 == 1);
    return lower ? pref * w.chi[l] * w.p[k] : pref * w.pi[l] * w.x[k];
}

} // namespace cmv
