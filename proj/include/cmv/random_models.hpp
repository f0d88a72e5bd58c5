#pragma once

// Coefficient-space sampling that turns Haar-random unitary ensembles into
// five-diagonal models: independent Verblunsky coefficients with rotation
// invariant beta-type radial laws reproduce CUE, SU(n), and SO(n) spectral
// statistics exactly.

#include "cmv/opuc.hpp"
#include "cmv/spectral.hpp"

#include <cstdint>

namespace cmv {

// Deterministic counter-based generator (splitmix64). Identical seeds give
// identical streams on every platform; derive() yields an independent stream
// for sharded sampling.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), counter_(seed) {}

    std::uint64_t next_u64();
    double uniform();                      // strictly inside (0, 1)
    double uniform(double lo, double hi);
    double angle();                        // [0, 2pi)
    cplx unit_circle();

    SeededRng derive(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

enum class Ensemble { Cue, SUn, SOn };

struct EnsembleSpec {
    Ensemble ensemble;
    int n;
};

// Density of the disk marginal (nu + 1)/pi * (1 - |alpha|^2)^nu.
double disk_marginal_density(cplx alpha, double nu);

// Haar on U(n): alpha_j has radial law |alpha_j|^2 ~ Beta(1, n-j-1) and
// uniform phase for j <= n-2; alpha_{n-1} is uniform on the circle.
VerblunskySequence sample_cue_alphas(int n, SeededRng& rng);

// Haar on SU(n): CUE head, terminal pinned to (-1)^{n-1}.
VerblunskySequence sample_su_alphas(int n, SeededRng& rng);

// Haar on SO(n): real alpha_k = 2B - 1 with B ~ Beta(a, a), a = (n-k-1)/2,
// terminal (-1)^{n-1}.
VerblunskySequence sample_so_alphas(int n, SeededRng& rng);

// Symmetric Beta(a, a) on (0, 1). a = 1/2 uses the arcsine inverse CDF
// (the density is unbounded, so rejection cannot work there); a = 1 is
// uniform; a > 1 rejects against a uniform proposal using the mode bound.
double sample_symmetric_beta(double a, SeededRng& rng);

// One draw of the ensemble's eigenvalue set, sorted by argument.
SpectrumResult sample_spectrum(const EnsembleSpec& spec, SeededRng& rng);

} // namespace cmv
