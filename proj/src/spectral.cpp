#include "cmv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmv {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

cplx poly_deriv_eval(const CPoly& p, cplx z) {
    const auto& c = p.coeffs();
    cplx acc = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
        acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
}

cplx newton_step(const CPoly& p, cplx z) {
    cplx d = poly_deriv_eval(p, z);
    if (d == 0.0) return z;
    return z - p.eval(z) / d;
}

} // namespace

std::vector<cplx> roots_monic(const CPoly& p) {
    const int deg = p.degree();
    if (deg < 1) throw std::invalid_argument("roots_monic: degree must be >= 1");
    if (std::abs(p.coeff(deg) - 1.0) > 1e-9)
        throw std::invalid_argument("roots_monic: polynomial must be monic");

    // Exact zero constant coefficients peel off exact roots at the origin.
    std::vector<cplx> work = p.coeffs();
    work.back() = 1.0;
    std::vector<cplx> roots;
    while (work.size() > 1 && work.front() == 0.0) {
        roots.push_back(0.0);
        work.erase(work.begin());
    }
    const int d = static_cast<int>(work.size()) - 1;
    if (d == 0) return roots;
    CPoly q(work);

    double r0 = std::pow(std::abs(work[0]), 1.0 / d);
    r0 = std::clamp(r0, 0.1, 0.9);
    std::vector<cplx> zs(d);
    for (int i = 0; i < d; ++i)
        zs[i] = std::polar(r0, two_pi * i / d + 0.7);

    double scale = 1.0;
    for (const cplx& c : work) scale = std::max(scale, std::abs(c));

    auto converged = [&]() {
        for (const cplx& z : zs) {
            double bound = 1e-13 * scale * std::pow(1.0 + std::abs(z), d);
            if (std::abs(q.eval(z)) > bound) return false;
        }
        return true;
    };

    bool ok = false;
    for (int iter = 0; iter < 200; ++iter) {
        if (converged()) { ok = true; break; }
        for (int i = 0; i < d; ++i) {
            cplx pv = q.eval(zs[i]);
            if (pv == 0.0) continue;
            cplx dv = poly_deriv_eval(q, zs[i]);
            if (dv == 0.0) { zs[i] += 1e-8; continue; }
            cplx newton = pv / dv;
            cplx s = 0.0;
            for (int j = 0; j < d; ++j)
                if (j != i) {
                    cplx diff = zs[i] - zs[j];
                    if (std::abs(diff) < 1e-300) diff = 1e-300;
                    s += 1.0 / diff;
                }
            cplx denom = 1.0 - newton * s;
            zs[i] -= (std::abs(denom) < 1e-300) ? newton : newton / denom;
        }
    }
    ok = ok || converged();

    for (cplx& z : zs) z = newton_step(q, z);

    if (!ok) {
        // Accept the relaxed contract bound after the Newton polish.
        for (const cplx& z : zs) {
            double bound = 1e-10 * scale * std::pow(1.0 + std::abs(z), d);
            if (std::abs(q.eval(z)) > bound)
                throw std::runtime_error("roots_monic: iteration cap reached without convergence");
        }
    }
    roots.insert(roots.end(), zs.begin(), zs.end());
    return roots;
}

std::vector<cplx> opuc_zeros(const VerblunskySequence& alphas, int n) {
    if (n < 1 || n > alphas.proper_count())
        throw std::invalid_argument("opuc_zeros: needs n proper coefficients");
    CPoly phi = monic_polys(alphas, n).back().first;
    return roots_monic(phi);
}

namespace {

double circular_angle(cplx z) {
    double t = std::arg(z);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t -= two_pi;
    return t;
}

// Inverse iteration against a dense matrix for each given eigenvalue; the
// returned weights are |first component|^2 renormalized to sum 1.
std::vector<double> inverse_iteration_weights(const Matrix& a, const std::vector<cplx>& eigs) {
    const int n = a.rows();
    std::vector<double> w(eigs.size());
    for (size_t r = 0; r < eigs.size(); ++r) {
        Matrix shifted = a;
        const cplx shift = eigs[r] * (1.0 + 3e-13) + cplx(0.0, 1e-15);
        for (int i = 0; i < n; ++i) shifted(i, i) -= shift;
        LuFactors f = lu_factor(std::move(shifted));
        std::vector<cplx> x(n);
        for (int i = 0; i < n; ++i)
            x[i] = cplx(std::cos(0.7 * (i + 1) + 1.3 * static_cast<double>(r)),
                        std::sin(1.1 * (i + 1) - 0.4 * static_cast<double>(r)));
        for (int it = 0; it < 3; ++it) {
            x = lu_solve(f, std::move(x));
            double nrm = 0.0;
            for (const cplx& v : x) nrm += std::norm(v);
            nrm = std::sqrt(nrm);
            if (nrm == 0.0) throw std::runtime_error("inverse iteration collapsed");
            for (cplx& v : x) v /= nrm;
        }
        w[r] = std::norm(x[0]);
    }
    double total = 0.0;
    for (double v : w) total += v;
    if (total <= 0.0) throw std::runtime_error("inverse iteration produced zero spectral weight");
    for (double& v : w) v /= total;
    return w;
}

SpectrumResult sorted_spectrum(std::vector<cplx> eigs, const Matrix& dense, bool with_weights) {
    std::sort(eigs.begin(), eigs.end(),
              [](cplx a, cplx b) { return circular_angle(a) < circular_angle(b); });
    const int n = static_cast<int>(eigs.size());
    for (int i = 0; i < n; ++i) {
        double gap = circular_angle(eigs[(i + 1) % n]) - circular_angle(eigs[i]);
        if (i + 1 == n) gap += two_pi;
        if (n > 1 && std::abs(gap) <= 1e-10)
            throw std::domain_error("finite spectrum: eigenvalue collision (cyclicity violated)");
    }
    SpectrumResult out;
    out.eigenvalues = std::move(eigs);
    if (with_weights) out.weights = inverse_iteration_weights(dense, out.eigenvalues);
    return out;
}

} // namespace

SpectrumResult finite_cmv_spectrum(const VerblunskySequence& alphas, bool with_weights) {
    if (!alphas.is_improper())
        throw std::invalid_argument("finite_cmv_spectrum: improper sequence required");
    const int n = alphas.size();
    CPoly para = monic_polys(alphas, n).back().first;
    std::vector<cplx> eigs = roots_monic(para);
    Matrix dense;
    if (with_weights) dense = build_cmv(alphas).to_dense();
    return sorted_spectrum(std::move(eigs), dense, with_weights);
}

DiscreteCircleMeasure spectrum_to_measure(const SpectrumResult& s) {
    if (s.weights.size() != s.eigenvalues.size())
        throw std::invalid_argument("spectrum_to_measure: weights missing");
    std::vector<CircleAtom> atoms(s.eigenvalues.size());
    double total = 0.0;
    for (double w : s.weights) total += w;
    for (size_t i = 0; i < atoms.size(); ++i)
        atoms[i] = CircleAtom{circular_angle(s.eigenvalues[i]), s.weights[i] / total};
    return DiscreteCircleMeasure(std::move(atoms));
}

namespace {

CPoly det_poly(std::vector<std::vector<CPoly>>& m, std::vector<int>& cols, int row) {
    const int n = static_cast<int>(m.size());
    if (row == n) return CPoly::one();
    CPoly acc;
    int sign = 1;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        int c = cols[ci];
        if (!m[row][c].is_zero()) {
            std::vector<int> rest;
            rest.reserve(cols.size() - 1);
            for (size_t cj = 0; cj < cols.size(); ++cj)
                if (cj != ci) rest.push_back(cols[cj]);
            CPoly minor = det_poly(m, rest, row + 1);
            CPoly term = m[row][c] * minor;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

CPoly char_poly_expand(const Matrix& a) {
    const int n = a.rows();
    if (n != a.cols() || n < 1 || n > 8)
        throw std::invalid_argument("char_poly_expand: square matrices with n <= 8 only");
    std::vector<std::vector<CPoly>> m(n, std::vector<CPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<cplx> c{-a(i, j)};
            if (i == j) c.push_back(1.0);
            m[i][j] = CPoly(std::move(c));
        }
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_poly(m, cols, 0);
}

SpectrumResult spectrum_of_unitary(const Matrix& u, bool with_weights) {
    CPoly chi = char_poly_expand(u);
    std::vector<cplx> eigs = roots_monic(chi);
    return sorted_spectrum(std::move(eigs), u, with_weights);
}

Discriminant discriminant(const std::vector<cplx>& alphas) {
    const int p = static_cast<int>(alphas.size());
    if (p < 2 || p % 2 != 0) throw std::invalid_argument("discriminant: period must be even");
    double rho_prod = 1.0;
    for (const cplx& a : alphas) {
        require_finite(a, "discriminant");
        if (std::abs(a) >= 1.0) throw std::invalid_argument("discriminant: coefficients must be proper");
        rho_prod *= std::sqrt(1.0 - std::norm(a));
    }

    // Transfer matrices with polynomial entries; A(alpha_{p-1}) ends leftmost.
    CPoly t00 = CPoly::one(), t01, t10, t11 = CPoly::one();
    for (int j = 0; j < p; ++j) {
        const cplx a = alphas[j];
        // Left-multiply by rho^{-1} [[z, -conj(a)], [-a z, 1]]; fold the
        // scalar prefactors in once at the end.
        CPoly n00 = t00.shifted(1) - t10 * std::conj(a);
        CPoly n01 = t01.shifted(1) - t11 * std::conj(a);
        CPoly n10 = t10 - t00.shifted(1) * a;
        CPoly n11 = t11 - t01.shifted(1) * a;
        t00 = std::move(n00); t01 = std::move(n01);
        t10 = std::move(n10); t11 = std::move(n11);
    }
    CPoly trace = (t00 + t11) * (1.0 / rho_prod);

    std::vector<cplx> coeffs(p + 1);
    for (int k = 0; k <= p; ++k) coeffs[k] = trace.coeff(k);
    LaurentPoly delta(-p / 2, std::move(coeffs));
    for (int j = 1; j <= p / 2; ++j)
        if (std::abs(delta.coeff(-j) - std::conj(delta.coeff(j))) > tol::exact * std::max(1.0, std::abs(delta.coeff(j))))
            throw std::runtime_error("discriminant: coefficient symmetry violated");
    return Discriminant{p, std::move(delta)};
}

std::vector<Arc> bands(const std::vector<cplx>& alphas) {
    Discriminant d = discriminant(alphas);
    auto f = [&](double theta) { return d.delta.eval(std::polar(1.0, theta)).real(); };
    auto inside = [&](double theta) {
        double v = f(theta);
        return v >= -2.0 && v <= 2.0;
    };

    const int scan = 4096;
    std::vector<bool> in(scan);
    for (int i = 0; i < scan; ++i) in[i] = inside(two_pi * i / scan);

    bool all = true, none = true;
    for (bool b : in) { all = all && b; none = none && !b; }
    if (all) return {Arc{0.0, two_pi}};
    if (none) return {};

    // Bisect the indicator itself: the edge is where membership flips.
    auto refine = [&](double lo, double hi, bool lo_in) {
        for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
            double mid = 0.5 * (lo + hi);
            if (inside(mid) == lo_in) lo = mid; else hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    std::vector<double> edges;       // flip positions, paired with direction
    std::vector<bool> entering;      // true if outside -> inside at this edge
    for (int i = 0; i < scan; ++i) {
        int j = (i + 1) % scan;
        if (in[i] == in[j]) continue;
        double lo = two_pi * i / scan;
        double hi = two_pi * (i + 1) / scan;
        double edge = refine(lo, hi, in[i]);
        edges.push_back(edge);
        entering.push_back(!in[i]);
    }

    std::vector<Arc> arcs;
    size_t start = 0;
    while (start < edges.size() && !entering[start]) ++start;
    for (size_t k = 0; k < edges.size() / 2; ++k) {
        size_t i = (start + 2 * k) % edges.size();
        size_t j = (start + 2 * k + 1) % edges.size();
        double lo = edges[i], hi = edges[j];
        if (hi < lo) hi += two_pi;
        arcs.push_back(Arc{lo, hi});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
    return arcs;
}

double floquet_check(const std::vector<cplx>& alphas, cplx beta, cplx z) {
    if (std::abs(std::abs(beta) - 1.0) > tol::exact)
        throw std::invalid_argument("floquet_check: |beta| = 1 required");
    const int p = static_cast<int>(alphas.size());
    FloquetCMV e = floquet_cmv(alphas, std::arg(beta));
    Matrix zme(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) zme(i, j) = (i == j ? z : 0.0) - e.e(i, j);
    cplx lhs = det(zme);

    Discriminant d = discriminant(alphas);
    double rho_prod = 1.0;
    for (const cplx& a : alphas) rho_prod *= std::sqrt(1.0 - std::norm(a));
    cplx rhs = rho_prod * std::pow(z, p / 2) * (d.delta.eval(z) - beta - 1.0 / beta);
    return std::abs(lhs - rhs);
}

} // namespace cmv
