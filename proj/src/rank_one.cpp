#include "cmv/rank_one.hpp"

#include <cmath>
#include <stdexcept>

namespace cmv {

namespace {

void require_phase(cplx lambda, const char* who) {
    require_finite(lambda, who);
    if (std::abs(std::abs(lambda) - 1.0) > tol::exact)
        throw std::invalid_argument(std::string(who) + ": |lambda| = 1 required");
}

} // namespace

PhaseDiagonal::PhaseDiagonal(std::vector<cplx> d) : entries(std::move(d)) {
    for (const cplx& v : entries)
        if (std::abs(std::abs(v) - 1.0) > tol::exact)
            throw std::invalid_argument("PhaseDiagonal: entries must be unimodular");
}

Matrix PhaseDiagonal::conjugate(const Matrix& a) const {
    const int n = size();
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("PhaseDiagonal::conjugate: size mismatch");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = entries[i] * a(i, j) / entries[j];
    return out;
}

BandedUnitary column_phase(const BandedUnitary& c, int m, cplx lambda) {
    require_phase(lambda, "column_phase");
    if (m < 0 || m >= c.dim())
        throw std::invalid_argument("column_phase: column outside window");
    BandedUnitary out = c;
    out.scale_column(m, lambda);
    return out;
}

VerblunskySequence twist_tail(const VerblunskySequence& alphas, int n, cplx lambda) {
    require_phase(lambda, "twist_tail");
    if (n < 0) throw std::invalid_argument("twist_tail: n >= 0 required");
    std::vector<cplx> out = alphas.coeffs();
    for (int j = n; j < static_cast<int>(out.size()); ++j) out[j] *= lambda;
    return VerblunskySequence::classify(std::move(out));
}

PhaseDiagonal conjugating_diagonal(int n, cplx lambda, int window) {
    require_phase(lambda, "conjugating_diagonal");
    if (n < 0 || window < 0)
        throw std::invalid_argument("conjugating_diagonal: n, window >= 0 required");
    // Prefix length is the even number n rounds up to; prefix value depends
    // on the parity of n.
    const int prefix = (n % 2 == 0) ? n : n + 1;
    const cplx prefix_value = (n % 2 == 0) ? lambda : cplx(1.0);
    std::vector<cplx> d(window);
    for (int j = 0; j < window; ++j) {
        if (j < prefix)
            d[j] = prefix_value;
        else
            d[j] = ((j - prefix) % 2 == 0) ? cplx(1.0) : lambda;
    }
    return PhaseDiagonal(std::move(d));
}

PhaseDiagonal alternating_diagonal(cplx lambda, int lo, int hi) {
    require_phase(lambda, "alternating_diagonal");
    if (hi < lo) throw std::invalid_argument("alternating_diagonal: empty window");
    std::vector<cplx> d;
    d.reserve(hi - lo + 1);
    for (int j = lo; j <= hi; ++j)
        d.push_back((((j % 2) + 2) % 2 == 0) ? cplx(1.0) : lambda);
    return PhaseDiagonal(std::move(d));
}

} // namespace cmv
