// Command line front end. Subcommands map one-to-one onto library entry
// points and exchange JSON (structured objects) or CSV (numeric tables).
// Exit codes: 0 success, 1 domain or I/O failure with a one-line diagnostic
// on stderr, 2 usage errors. Outputs are written atomically and identical
// argv + seed always produce identical bytes.

#include "CLI11.hpp"

#include "cmv/block_cmv.hpp"
#include "cmv/cmv_matrix.hpp"
#include "cmv/flows.hpp"
#include "cmv/geronimus.hpp"
#include "cmv/io.hpp"
#include "cmv/opuc.hpp"
#include "cmv/perturbation.hpp"
#include "cmv/random_models.hpp"
#include "cmv/rank_one.hpp"
#include "cmv/resolvent.hpp"
#include "cmv/spectral.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace cmv;

VerblunskySequence load_alphas(const std::string& path) {
    return io::verblunsky_from_json(io::parse_json_text(io::read_text_file(path), path));
}

double angle_of(cplx z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
}

cplx parse_complex_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected \"re,im\", got \"" + text + "\"");
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("bad real part in \"" + text + "\"");
    const std::string imtext = text.substr(comma + 1);
    const double im = std::stod(imtext, &used);
    if (used != imtext.size()) throw std::invalid_argument("bad imaginary part in \"" + text + "\"");
    return cplx(re, im);
}

std::vector<double> real_coefficients(const VerblunskySequence& alphas) {
    std::vector<double> out;
    out.reserve(alphas.size());
    for (cplx a : alphas.coeffs()) {
        if (std::abs(a.imag()) > 1e-14)
            throw std::domain_error("real coefficients required");
        out.push_back(a.real());
    }
    return out;
}

struct BuildOpts {
    std::string alphas, out;
} build_opts;

struct ZerosOpts {
    std::string alphas, out, format = "csv";
    int n = 0;
} zeros_opts;

struct BandsOpts {
    std::string alphas, out;
} bands_opts;

struct SampleOpts {
    std::string ensemble, out;
    int n = 2;
    int count = 1;
    std::uint64_t seed = 0;
} sample_opts;

struct FlowOpts {
    std::string alphas, out, flow = "al";
    double t = 1.0;
    double h = 1e-3;
} flow_opts;

struct GeronimusOpts {
    std::string alphas, out;
    int count = 0;
} geronimus_opts;

struct ResolventOpts {
    std::string alphas, out, z;
    int n = 6;
} resolvent_opts;

struct BoundOpts {
    std::string alphas, betas, out;
    double p = 2.0;
} bound_opts;

struct TwistOpts {
    std::string alphas, out;
    int n = 0;
    double angle = 0.0;
} twist_opts;

void run_build() {
    const VerblunskySequence alphas = load_alphas(build_opts.alphas);
    const BandedUnitary c = build_cmv(alphas);
    io::write_text_atomic(build_opts.out, io::banded_to_json(c).dump(2) + "\n");
}

void run_zeros() {
    const VerblunskySequence alphas = load_alphas(zeros_opts.alphas);
    const int n = zeros_opts.n > 0 ? zeros_opts.n : alphas.proper_count();
    const std::vector<cplx> zs = opuc_zeros(alphas, n);
    if (zeros_opts.format == "json") {
        io::json arr = io::json::array();
        for (cplx z : zs) arr.push_back(io::json::array({z.real(), z.imag()}));
        io::write_text_atomic(zeros_opts.out, arr.dump(2) + "\n");
        return;
    }
    std::string csv;
    for (cplx z : zs) csv += io::fmt(z) + "\n";
    io::write_text_atomic(zeros_opts.out, csv);
}

void run_bands() {
    const VerblunskySequence alphas = load_alphas(bands_opts.alphas);
    if (alphas.is_improper())
        throw std::domain_error("bands: one period of a proper sequence required");
    std::string csv;
    for (const Arc& arc : bands(alphas.coeffs()))
        csv += io::fmt(arc.lo) + "," + io::fmt(arc.hi) + "\n";
    io::write_text_atomic(bands_opts.out, csv);
}

void run_sample() {
    Ensemble ens = Ensemble::Cue;
    if (sample_opts.ensemble == "su") ens = Ensemble::SUn;
    if (sample_opts.ensemble == "so") ens = Ensemble::SOn;
    const EnsembleSpec spec{ens, sample_opts.n};
    const SeededRng base(sample_opts.seed);
    std::string csv;
    for (int draw = 0; draw < sample_opts.count; ++draw) {
        SeededRng rng = base.derive(static_cast<std::uint64_t>(draw));
        const SpectrumResult sp = sample_spectrum(spec, rng);
        for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) {
            if (i) csv += ",";
            csv += io::fmt(angle_of(sp.eigenvalues[i]));
        }
        csv += "\n";
    }
    io::write_text_atomic(sample_opts.out, csv);
}

void run_flow() {
    const VerblunskySequence alphas = load_alphas(flow_opts.alphas);
    if (alphas.is_improper())
        throw std::domain_error("flow: one period of a proper sequence required");
    const PeriodicPoint start(alphas.coeffs());
    const VectorField field =
        flow_opts.flow == "schur" ? VectorField(schur_vector_field) : VectorField(al_vector_field);
    const FlowTrajectory traj = integrate(field, start, flow_opts.t, flow_opts.h);
    if (!traj.completed)
        throw std::domain_error("flow left the safety region near t = " +
                                io::fmt(traj.times.empty() ? 0.0 : traj.times.back()));
    std::string csv;
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
        csv += io::fmt(traj.times[s]);
        for (std::size_t j = 0; j < traj.states[s].period(); ++j)
            csv += "," + io::fmt(traj.states[s].at(j));
        for (cplx c : traj.discriminant_coeffs[s]) csv += "," + io::fmt(c);
        csv += "\n";
    }
    io::write_text_atomic(flow_opts.out, csv);
}

void run_geronimus() {
    const VerblunskySequence alphas = load_alphas(geronimus_opts.alphas);
    if (alphas.is_improper())
        throw std::domain_error("geronimus: proper sequence required");
    const std::vector<double> reals = real_coefficients(alphas);
    const int count =
        geronimus_opts.count > 0 ? geronimus_opts.count : static_cast<int>(reals.size()) / 2 + 1;
    const JacobiOperator op = geronimus_jacobi(reals, count);
    io::write_text_atomic(geronimus_opts.out, io::jacobi_to_json(op).dump(2) + "\n");
}

void run_resolvent() {
    const VerblunskySequence alphas = load_alphas(resolvent_opts.alphas);
    const cplx z = parse_complex_pair(resolvent_opts.z);
    std::string csv;
    for (int k = 0; k <= resolvent_opts.n; ++k)
        for (int l = 0; l <= resolvent_opts.n; ++l) {
            const cplx g = cmv_resolvent_entry(alphas, z, k, l);
            csv += std::to_string(k) + "," + std::to_string(l) + "," + io::fmt(g) + "\n";
        }
    io::write_text_atomic(resolvent_opts.out, csv);
}

void run_bound() {
    const VerblunskySequence alphas = load_alphas(bound_opts.alphas);
    const VerblunskySequence betas = load_alphas(bound_opts.betas);
    const SchattenReport rep = cmv_diff_bound(alphas, betas, bound_opts.p);
    io::json j{{"lhs_norm", rep.lhs_norm},
               {"rhs_bound", rep.rhs_bound},
               {"slack", rep.slack},
               {"rhs_root_variant", rep.rhs_root_variant}};
    if (std::isinf(rep.p))
        j["p"] = "inf";
    else
        j["p"] = rep.p;
    if (rep.rhs_alpha_only)
        j["rhs_alpha_only"] = *rep.rhs_alpha_only;
    else
        j["rhs_alpha_only"] = nullptr;
    io::write_text_atomic(bound_opts.out, j.dump(2) + "\n");
}

void run_twist() {
    const VerblunskySequence alphas = load_alphas(twist_opts.alphas);
    const cplx lambda = std::polar(1.0, twist_opts.angle);
    const VerblunskySequence twisted = twist_tail(alphas, twist_opts.n, lambda);
    io::write_text_atomic(twist_opts.out, io::verblunsky_to_json(twisted).dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CMV matrix toolkit: five-diagonal unitaries from reflection coefficients"};
    app.require_subcommand(1);

    CLI::App* build = app.add_subcommand("build", "Assemble the five-diagonal matrix as JSON");
    build->add_option("--alphas", build_opts.alphas, "coefficient sequence (JSON)")->required();
    build->add_option("--out", build_opts.out, "output path")->required();
    build->callback(run_build);

    CLI::App* zeros = app.add_subcommand("zeros", "Zeros of the degree-n orthogonal polynomial");
    zeros->add_option("--alphas", zeros_opts.alphas, "coefficient sequence (JSON)")->required();
    zeros->add_option("--n", zeros_opts.n, "degree (default: sequence length)");
    zeros->add_option("--out", zeros_opts.out, "output path")->required();
    zeros->add_option("--format", zeros_opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    zeros->callback(run_zeros);

    CLI::App* bands_cmd = app.add_subcommand("bands", "Spectral bands of a periodic sequence");
    bands_cmd->add_option("--alphas", bands_opts.alphas, "one period, proper (JSON)")->required();
    bands_cmd->add_option("--out", bands_opts.out, "output path (CSV rows lo,hi)")->required();
    bands_cmd->callback(run_bands);

    CLI::App* sample = app.add_subcommand("sample", "Eigenvalue angles from random matrix models");
    sample->add_option("--ensemble", sample_opts.ensemble, "cue, su, or so")
        ->required()
        ->check(CLI::IsMember({"cue", "su", "so"}));
    sample->add_option("--n", sample_opts.n, "matrix dimension")->required();
    sample->add_option("--count", sample_opts.count, "number of draws")->required();
    sample->add_option("--seed", sample_opts.seed, "random seed (default 0)");
    sample->add_option("--out", sample_opts.out, "output path (one CSV row per draw)")->required();
    sample->callback(run_sample);

    CLI::App* flow = app.add_subcommand("flow", "Integrate a coefficient flow");
    flow->add_option("--alphas", flow_opts.alphas, "one period, proper (JSON)")->required();
    flow->add_option("--flow", flow_opts.flow, "al or schur (default al)")
        ->check(CLI::IsMember({"al", "schur"}));
    flow->add_option("--t", flow_opts.t, "integration time")->required();
    flow->add_option("--step", flow_opts.h, "step size (default 1e-3)");
    flow->add_option("--out", flow_opts.out,
                     "output path (CSV: t, coefficients, discriminant coefficients)")
        ->required();
    flow->callback(run_flow);

    CLI::App* ger = app.add_subcommand("geronimus", "Jacobi parameters of the mapped measure");
    ger->add_option("--alphas", geronimus_opts.alphas, "real proper sequence (JSON)")->required();
    ger->add_option("--count", geronimus_opts.count, "Jacobi entries to emit");
    ger->add_option("--out", geronimus_opts.out, "output path (JSON a, b arrays)")->required();
    ger->callback(run_geronimus);

    CLI::App* res = app.add_subcommand("resolvent", "Resolvent entries at a point inside the disk");
    res->add_option("--alphas", resolvent_opts.alphas, "proper sequence (JSON)")->required();
    res->add_option("--z", resolvent_opts.z, "evaluation point \"re,im\", 0 < |z| < 1")->required();
    res->add_option("--n", resolvent_opts.n, "index box bound (default 6)");
    res->add_option("--out", resolvent_opts.out, "output path (CSV rows k,l,re,im)")->required();
    res->callback(run_resolvent);

    CLI::App* bound = app.add_subcommand("bound", "Schatten-norm difference bound report");
    bound->add_option("--alphas", bound_opts.alphas, "first sequence (JSON)")->required();
    bound->add_option("--betas", bound_opts.betas, "second sequence (JSON)")->required();
    bound->add_option("--p", bound_opts.p, "Schatten exponent in [1, inf] (default 2)");
    bound->add_option("--out", bound_opts.out, "output path (JSON report)")->required();
    bound->callback(run_bound);

    CLI::App* twist = app.add_subcommand("twist", "Rotate the coefficient tail from index n");
    twist->add_option("--alphas", twist_opts.alphas, "coefficient sequence (JSON)")->required();
    twist->add_option("--n", twist_opts.n, "first rotated index (default 0)");
    twist->add_option("--angle", twist_opts.angle, "rotation angle in radians")->required();
    twist->add_option("--out", twist_opts.out, "output path (JSON sequence)")->required();
    twist->callback(run_twist);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
