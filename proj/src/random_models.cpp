#include "cmv/random_models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmv {

std::uint64_t SeededRng::next_u64() {
    std::uint64_t z = (counter_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SeededRng::uniform() {
    // (k + 1/2) * 2^-53 never hits 0 or 1, so inverse-CDF transforms are safe.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double SeededRng::angle() {
    double t = 2.0 * std::numbers::pi * uniform();
    return t < 2.0 * std::numbers::pi ? t : 0.0;
}

cplx SeededRng::unit_circle() { return std::polar(1.0, angle()); }

SeededRng SeededRng::derive(std::uint64_t stream) const {
    SeededRng scrambler(seed_ ^ (0xA0761D6478BD642Full * (stream + 1)));
    return SeededRng(scrambler.next_u64());
}

double disk_marginal_density(cplx alpha, double nu) {
    require_finite(alpha, "disk_marginal_density");
    if (std::abs(alpha) >= 1.0)
        throw std::invalid_argument("disk_marginal_density: |alpha| < 1 required");
    if (nu < 0.0)
        throw std::invalid_argument("disk_marginal_density: nu >= 0 required");
    return (nu + 1.0) / std::numbers::pi * std::pow(1.0 - std::norm(alpha), nu);
}

namespace {

// |alpha|^2 ~ Beta(1, nu + 1) by inverse CDF, phase uniform.
cplx sample_disk_coefficient(double nu, SeededRng& rng) {
    const double r2 = 1.0 - std::pow(rng.uniform(), 1.0 / (nu + 1.0));
    return std::polar(std::sqrt(r2), rng.angle());
}

std::vector<cplx> sample_cue_head(int n, SeededRng& rng) {
    std::vector<cplx> alphas(n);
    for (int j = 0; j + 1 < n; ++j)
        alphas[j] = sample_disk_coefficient(static_cast<double>(n - j - 2), rng);
    return alphas;
}

} // namespace

VerblunskySequence sample_cue_alphas(int n, SeededRng& rng) {
    if (n < 1) throw std::invalid_argument("sample_cue_alphas: n >= 1 required");
    std::vector<cplx> alphas = sample_cue_head(n, rng);
    alphas[n - 1] = rng.unit_circle();
    return VerblunskySequence::improper(std::move(alphas));
}

VerblunskySequence sample_su_alphas(int n, SeededRng& rng) {
    if (n < 1) throw std::invalid_argument("sample_su_alphas: n >= 1 required");
    std::vector<cplx> alphas = sample_cue_head(n, rng);
    alphas[n - 1] = (n % 2 == 1) ? 1.0 : -1.0;
    return VerblunskySequence::improper(std::move(alphas));
}

double sample_symmetric_beta(double a, SeededRng& rng) {
    if (a < 0.5)
        throw std::invalid_argument("sample_symmetric_beta: a >= 1/2 required");
    if (a == 0.5) {
        const double u = rng.uniform();
        const double s = std::sin(0.5 * std::numbers::pi * u);
        return s * s;
    }
    if (a == 1.0) return rng.uniform();
    while (true) {
        const double x = rng.uniform();
        const double accept = std::pow(4.0 * x * (1.0 - x), a - 1.0);
        if (rng.uniform() <= accept) return x;
    }
}

VerblunskySequence sample_so_alphas(int n, SeededRng& rng) {
    if (n < 2) throw std::invalid_argument("sample_so_alphas: n >= 2 required");
    std::vector<cplx> alphas(n);
    for (int k = 0; k + 1 < n; ++k) {
        const double a = 0.5 * (n - k - 1);
        alphas[k] = 2.0 * sample_symmetric_beta(a, rng) - 1.0;
    }
    alphas[n - 1] = (n % 2 == 1) ? 1.0 : -1.0;
    return VerblunskySequence::improper(std::move(alphas));
}

SpectrumResult sample_spectrum(const EnsembleSpec& spec, SeededRng& rng) {
    VerblunskySequence alphas = [&] {
        switch (spec.ensemble) {
            case Ensemble::Cue: return sample_cue_alphas(spec.n, rng);
            case Ensemble::SUn: return sample_su_alphas(spec.n, rng);
            case Ensemble::SOn: return sample_so_alphas(spec.n, rng);
        }
        throw std::invalid_argument("sample_spectrum: unknown ensemble");
    }();
    return finite_cmv_spectrum(alphas, /*with_weights=*/false);
}

} // namespace cmv
