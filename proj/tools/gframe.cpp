// gframe: verification lab for admissible vectors of finite group
// representations, plus an affine-group wavelet demonstration.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical verification
// failed, 2 = input could not be parsed.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gframe/io.hpp"
#include "gframe/standard_form.hpp"
#include "gframe/synthesis.hpp"

using gframe::AffineGrid;
using gframe::AnalysisOperator;
using gframe::Complex;
using gframe::Vec;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitParseError = 2;

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("GFRAME_SEED")) return std::stoull(env);
    return cli_seed;
}

// Range syntax lo:hi:count where lo/hi accept the 2^k shorthand.
double parse_endpoint(const std::string& s) {
    if (s.rfind("2^", 0) == 0) return std::pow(2.0, std::stod(s.substr(2)));
    return std::stod(s);
}

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

Range parse_range(const std::string& s) {
    const auto p = s.find(':');
    const auto q = s.rfind(':');
    if (p == std::string::npos || q == p)
        throw gframe::StructuralError("range must look like lo:hi:count, got " + s);
    Range r;
    r.lo = parse_endpoint(s.substr(0, p));
    r.hi = parse_endpoint(s.substr(p + 1, q - p - 1));
    r.count = std::stoi(s.substr(q + 1));
    return r;
}

void emit(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items())
        std::cout << key << ": " << value.dump() << "\n";
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

struct CommonOpts {
    double tol = 1e-8;
    std::string format = "text";
    std::uint64_t seed = 1;
};

int cmd_validate_group(const std::string& group_file, const CommonOpts& opt) {
    const gframe::GroupTable g = gframe::load_group(group_file);
    const gframe::ValidationReport vr = gframe::validate_group(g);
    json report;
    report["order"] = g.order;
    report["identity"] = g.identity;
    report["conjugacy_classes"] = g.conjugacy_class_count();
    report["issues"] = json::array();
    for (const auto& issue : vr.issues) report["issues"].push_back(issue.message);
    report["valid"] = vr.ok();
    emit(report, opt.format);
    return vr.ok() ? kExitPass : kExitMathFailure;
}

int cmd_check_admissible(const std::string& rep_file, const std::string& window_file,
                         const CommonOpts& opt) {
    const gframe::RepBundle bundle = gframe::load_rep(rep_file);
    const Vec window = gframe::load_vector(window_file);
    if (window.size() != bundle.rep.dim)
        throw gframe::StructuralError("window length does not match the representation");
    const AnalysisOperator op = gframe::analysis_operator(bundle.rep, window);
    const gframe::AdmissibilityReport ar = gframe::check_admissible(op, opt.tol);

    json report;
    report["gram_residual"] = ar.gram_residual;
    report["isometry_residual"] = ar.isometry_residual;
    report["resolution_residual"] = ar.resolution_residual;
    report["invariance_residual"] = ar.invariance_residual;
    report["c_eta"] = ar.c_eta;
    report["range_rank"] = ar.range_rank;
    report["max_residual"] = ar.max_residual;
    report["tol"] = opt.tol;
    report["admissible"] = ar.admissible;
    emit(report, opt.format);
    return ar.admissible ? kExitPass : kExitMathFailure;
}

int cmd_construct(const std::string& group_file, const std::string& seed_file,
                  const std::string& out_file, const CommonOpts& opt) {
    const gframe::GroupTable g = gframe::load_group(group_file);
    const Vec seed = gframe::load_vector(seed_file);
    if (seed.size() != g.order)
        throw gframe::StructuralError("seed length does not match the group order");

    json report;
    int exit_code = kExitPass;
    try {
        const gframe::ConstructionResult res =
            gframe::construct_admissible(gframe::make_function(g, seed), opt.tol);
        report["h0_dim"] = res.report.h0_dim;
        report["membership_residual"] = res.report.membership_residual;
        report["involution_residual"] = res.report.involution_residual;
        report["idempotency_residual"] = res.report.idempotency_residual;
        report["projection_residual"] = res.report.projection_residual;
        report["restricted_gram_residual"] = res.report.admissibility.gram_residual;
        report["restricted_resolution_residual"] = res.report.admissibility.resolution_residual;
        report["restricted_c_eta"] = res.report.admissibility.c_eta;
        report["pass"] = res.report.pass;
        if (!out_file.empty()) {
            gframe::save_vector(out_file, res.g_adm.values);
            report["output"] = out_file;
        } else {
            json values = json::array();
            for (Eigen::Index i = 0; i < res.g_adm.values.size(); ++i)
                values.push_back(complex_json(res.g_adm.values(i)));
            report["g_adm"] = values;
        }
        if (!res.report.pass) exit_code = kExitMathFailure;
    } catch (const gframe::PreconditionError& e) {
        report["refused"] = true;
        report["reason"] = e.what();
        exit_code = kExitMathFailure;
    }
    emit(report, opt.format);
    return exit_code;
}

int cmd_standard_form(const std::string& rep_file, const std::string& window_file,
                      const CommonOpts& opt) {
    const gframe::RepBundle bundle = gframe::load_rep(rep_file);
    const Vec window = gframe::load_vector(window_file);
    if (window.size() != bundle.rep.dim)
        throw gframe::StructuralError("window length does not match the representation");
    const AnalysisOperator op = gframe::analysis_operator(bundle.rep, window);

    const gframe::CentralVectorResult cv = gframe::central_vector(op, opt.tol);
    const gframe::CyclicSeparatingReport cyc =
        gframe::certify_cyclic_separating(cv.subspace, opt.tol);
    const gframe::ReducedIdentityReport red =
        gframe::reduced_identity_check(cv.subspace, opt.tol);
    const gframe::StandardFormReport ax = gframe::standard_form_axioms(
        cv.subspace, opt.tol, 50, effective_seed(opt.seed));

    json report;
    report["subspace_dim"] = static_cast<int>(cv.subspace.basis.cols());
    report["twist_residual"] = cv.report.twist_residual;
    report["j_fixed_residual"] = cv.report.j_fixed_residual;
    report["left_right_span_gap"] = cv.report.left_right_gap;
    report["centrality_residual"] = cv.report.centrality_residual;
    report["vector_in_cone"] = cv.report.cone.in_p;
    report["cyclic_margin"] = cyc.cyclic_margin;
    report["separating_margin"] = cyc.separating_margin;
    report["cyclic"] = cyc.cyclic;
    report["separating"] = cyc.separating;
    report["restriction_identity_residual"] = red.restriction_residual;
    report["flat_in_subspace"] = red.flat_in_subspace;
    report["global_projection_residual"] = red.global_residual;
    report["j_commutes_residual"] = ax.j_commutes_residual;
    report["j_squared_residual"] = ax.j_squared_residual;
    report["jlj_vs_right_span_gap"] = ax.jlj_span_gap;
    report["central_adjoint_residual"] = ax.central_adjoint_residual;
    report["cone_j_fixed_residual"] = ax.cone_j_fixed_residual;
    report["cone_stability_min_eig"] = ax.cone_stability_min_eig;
    report["cone_samples"] = ax.cone_samples;
    const bool pass = cv.report.pass && cyc.cyclic && cyc.separating && red.pass && ax.pass;
    report["pass"] = pass;
    emit(report, opt.format);
    return pass ? kExitPass : kExitMathFailure;
}

int cmd_orthogonality(const std::string& rep1_file, const std::string& window1_file,
                      const std::string& rep2_file, const std::string& window2_file,
                      const CommonOpts& opt) {
    const gframe::RepBundle b1 = gframe::load_rep(rep1_file);
    const gframe::RepBundle b2 = gframe::load_rep(rep2_file);
    const Vec w1 = gframe::load_vector(window1_file);
    const Vec w2 = gframe::load_vector(window2_file);
    if (w1.size() != b1.rep.dim || w2.size() != b2.rep.dim)
        throw gframe::StructuralError("window length does not match its representation");
    if (!b1.group->same_as(*b2.group))
        throw gframe::StructuralError("the two representations live over different groups");

    const AnalysisOperator op1 = gframe::analysis_operator(b1.rep, w1);
    const AnalysisOperator op2 = gframe::analysis_operator(b2.rep, w2);
    const gframe::CentralVectorResult cv1 = gframe::central_vector(op1, opt.tol);
    const gframe::CentralVectorResult cv2 = gframe::central_vector(op2, opt.tol);
    const gframe::OrthogonalityReport rel = gframe::orthogonality_relations(
        cv1.subspace, cv2.subspace, opt.tol, 50, effective_seed(opt.seed));

    json report;
    report["vector_pairing"] = rel.vector_pairing;
    report["max_cone_pairing"] = rel.max_cone_pairing;
    report["max_principal_cosine"] = rel.max_cosine;
    report["vectors_orthogonal"] = rel.vectors_orthogonal;
    report["cones_orthogonal"] = rel.cones_orthogonal;
    report["subspaces_orthogonal"] = rel.subspaces_orthogonal;
    report["orthogonal"] = rel.subspaces_orthogonal;
    report["consistent"] = rel.consistent;
    emit(report, opt.format);
    return rel.consistent ? kExitPass : kExitMathFailure;
}

int cmd_wavelet_demo(const std::string& signal_file, const std::string& wavelet_file,
                     const std::string& scales, const std::string& shifts,
                     const std::string& out_file, double tol, const std::string& format) {
    const gframe::SampledSignal psi = gframe::load_signal(signal_file);
    gframe::SampledSignal eta = gframe::load_signal(wavelet_file);

    const gframe::CalderonResult cal = gframe::calderon_constant(eta);
    eta.samples *= cal.rescale;

    const Range sr = parse_range(scales);
    const Range br = parse_range(shifts);
    const AffineGrid grid =
        AffineGrid::logarithmic(sr.lo, sr.hi, sr.count, br.lo, br.hi, br.count);

    const gframe::ResolutionReport res =
        gframe::resolution_of_identity(psi, psi, eta, grid);

    json report;
    report["calderon_raw"] = cal.constant;
    report["calderon_rescale"] = cal.rescale;
    report["calderon_normalized"] = res.calderon;
    report["quadrature"] = complex_json(res.quadrature);
    report["exact"] = complex_json(res.exact);
    report["relative_error"] = res.relative_error;
    report["grid_c_eta"] = res.c_eta;
    report["coverage_ok"] = res.coverage_ok;
    report["tol"] = tol;
    const bool pass = res.relative_error <= tol;
    report["pass"] = pass;
    if (!out_file.empty()) {
        gframe::write_coefficients(out_file, grid, gframe::affine_analysis(psi, eta, grid));
        report["output"] = out_file;
    }
    emit(report, format);
    return pass ? kExitPass : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for admissible vectors of group representations"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string group_file, rep_file, window_file, seed_file, out_file;
    std::string rep2_file, window2_file;
    std::string signal_file, wavelet_file;
    std::string scales = "2^-6:2^6:48", shifts = "-8:8:512";
    double demo_tol = 1e-2;

    auto add_common = [&](CLI::App* cmd, double default_tol) {
        opt.tol = default_tol;
        cmd->add_option("--tol", opt.tol, "residual tolerance");
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", opt.seed, "seed for sampled checks");
    };

    CLI::App* validate = app.add_subcommand("validate-group", "check the group axioms");
    validate->add_option("--group", group_file)->required();
    add_common(validate, 1e-8);

    CLI::App* check = app.add_subcommand("check-admissible",
                                         "four equivalent admissibility verdicts");
    check->add_option("--rep", rep_file)->required();
    check->add_option("--window", window_file)->required();
    add_common(check, 1e-8);

    CLI::App* construct = app.add_subcommand(
        "construct", "admissible vector from a cyclic seed by polar calculus");
    construct->add_option("--group", group_file)->required();
    construct->add_option("--seed-vector", seed_file)->required();
    construct->add_option("--out", out_file, "write the constructed vector here");
    add_common(construct, 1e-8);

    CLI::App* standard = app.add_subcommand("standard-form",
                                            "central subspace and modular axioms");
    standard->add_option("--rep", rep_file)->required();
    standard->add_option("--window", window_file)->required();
    add_common(standard, 1e-9);

    CLI::App* ortho = app.add_subcommand("orthogonality",
                                         "three equivalent orthogonality relations");
    ortho->add_option("--rep1", rep_file)->required();
    ortho->add_option("--window1", window_file)->required();
    ortho->add_option("--rep2", rep2_file)->required();
    ortho->add_option("--window2", window2_file)->required();
    add_common(ortho, 1e-8);

    CLI::App* wavelet = app.add_subcommand("wavelet-demo",
                                           "affine-group resolution of identity");
    wavelet->add_option("--signal", signal_file)->required();
    wavelet->add_option("--wavelet", wavelet_file)->required();
    wavelet->add_option("--scales", scales, "lo:hi:count, 2^k accepted");
    wavelet->add_option("--shifts", shifts, "lo:hi:count");
    wavelet->add_option("--out", out_file, "write coefficients as CSV");
    wavelet->add_option("--tol", demo_tol, "relative-error tolerance");
    wavelet->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitParseError;
    }

    try {
        if (validate->parsed()) return cmd_validate_group(group_file, opt);
        if (check->parsed()) return cmd_check_admissible(rep_file, window_file, opt);
        if (construct->parsed()) return cmd_construct(group_file, seed_file, out_file, opt);
        if (standard->parsed()) return cmd_standard_form(rep_file, window_file, opt);
        if (ortho->parsed())
            return cmd_orthogonality(rep_file, window_file, rep2_file, window2_file, opt);
        if (wavelet->parsed())
            return cmd_wavelet_demo(signal_file, wavelet_file, scales, shifts, out_file,
                                    demo_tol, opt.format);
    } catch (const gframe::StructuralError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const gframe::PreconditionError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitParseError;
}
