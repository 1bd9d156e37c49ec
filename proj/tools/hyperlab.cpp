// Command-line surface: constants, verification of the inequality families on
// explicit profiles, Moser-sequence diagnostics, and optimizer sweeps toward
// the asymptotic constants. Subcommands are thin compositions of library
// calls; all numerics live in the headers.
//
// Exit codes: 0 success, 2 parameter validation failure, 3 numerical
// non-convergence, 64 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlab/hyperlab.hpp"

namespace {

using namespace hyperlab;

struct OutputSpec {
    std::string format = "json";  // text | csv | json | plotdata
    std::string path;             // empty -> stdout
};

void add_output_options(CLI::App* cmd, OutputSpec& out, const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json", "plotdata"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path,
                    "Write to this file instead of stdout (HYPERLAB_OUT_DIR prefixes "
                    "relative paths)");
}

void emit(const OutputSpec& out, const std::string& payload) {
    if (out.path.empty()) {
        std::cout << payload;
        return;
    }
    std::string path = out.path;
    if (const char* dir = std::getenv("HYPERLAB_OUT_DIR"); dir && *dir && path.front() != '/') {
        path = std::string(dir) + "/" + path;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    os << payload;
    if (!os) {
        throw std::runtime_error("write failed: " + path);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

/// Inline profile specs: tent:R, plateau:r:R, random:seed:m:R, moser:j[:mesh];
/// anything else is read as a path to the profile text format.
RadialProfile parse_profile(const std::string& spec, int n, double moser_beta1,
                            int default_mesh = 2048) {
    if (spec.empty()) {
        throw std::domain_error("empty profile spec");
    }
    const auto parts = split(spec, ':');
    try {
        if (parts[0] == "tent" && parts.size() == 2) {
            return tent_profile(std::stod(parts[1]));
        }
        if (parts[0] == "plateau" && parts.size() == 3) {
            return plateau_profile(std::stod(parts[1]), std::stod(parts[2]));
        }
        if (parts[0] == "random" && parts.size() == 4) {
            return random_profile(std::stoull(parts[1]), std::stoi(parts[2]),
                                  std::stod(parts[3]));
        }
        if (parts[0] == "moser" && (parts.size() == 2 || parts.size() == 3)) {
            const int mesh = parts.size() == 3 ? std::stoi(parts[2]) : default_mesh;
            return moser_profile(std::stod(parts[1]), moser_beta1, n, mesh).first;
        }
    } catch (const std::invalid_argument&) {
        throw std::domain_error("profile spec has a malformed number: " + spec);
    } catch (const std::out_of_range&) {
        throw std::domain_error("profile spec has an out-of-range number: " + spec);
    }
    if (parts[0] == "tent" || parts[0] == "plateau" || parts[0] == "random" ||
        parts[0] == "moser") {
        throw std::domain_error("malformed profile spec: " + spec);
    }
    std::ifstream is(spec);
    if (!is) {
        throw std::domain_error("profile spec is neither inline nor a readable file: " + spec);
    }
    auto [profile, file_n] = read_profile(is);
    if (file_n != n) {
        throw std::domain_error("profile file is for n=" + std::to_string(file_n) +
                                ", command uses n=" + std::to_string(n));
    }
    return profile;
}

std::string report_payload(const InequalityReport& rep, const std::string& format) {
    if (format == "csv") {
        return report_to_csv(rep);
    }
    if (format == "plotdata") {
        return report_to_plotdata(rep);
    }
    if (format == "text") {
        std::string out;
        out += "lhs = " + fmt17(rep.lhs) + "\n";
        out += "rhs = " + fmt17(rep.rhs) + "\n";
        out += "ratio = " + fmt17(rep.ratio) + "\n";
        out += "quad_error = " + fmt17(rep.quad_error) + "\n";
        return out;
    }
    return report_to_json(rep);
}

struct ConstantsArgs {
    int n = 2;
    double beta = 0.0;
    OutputSpec out;
};

int run_constants(const ConstantsArgs& args) {
    const ModelParams params = ModelParams::make(args.n);
    const double a = alpha_beta(params, args.beta);
    const double B = sharp_constant_B(params, args.beta);
    std::string payload;
    if (args.out.format == "csv") {
        payload = "n,n_prime,omega,beta,alpha_beta,B\n" + std::to_string(args.n) + "," +
                  fmt17(params.n_prime) + "," + fmt17(params.omega) + "," + fmt17(args.beta) +
                  "," + fmt17(a) + "," + fmt17(B) + "\n";
    } else if (args.out.format == "json") {
        payload = "{\"n\":" + std::to_string(args.n) + ",\"n_prime\":" + fmt17(params.n_prime) +
                  ",\"omega\":" + fmt17(params.omega) + ",\"beta\":" + fmt17(args.beta) +
                  ",\"alpha_beta\":" + fmt17(a) + ",\"B\":" + fmt17(B) + "}\n";
    } else if (args.out.format == "plotdata") {
        payload = fmt17(args.beta) + " " + fmt17(B) + "\n";
    } else {
        payload = "n = " + std::to_string(args.n) + "\n";
        payload += "n_prime = " + fmt17(params.n_prime) + "\n";
        payload += "omega = " + fmt17(params.omega) + "\n";
        payload += "alpha_beta = " + fmt17(a) + "\n";
        payload += "B = " + fmt17(B) + "\n";
    }
    emit(args.out, payload);
    return 0;
}

struct VerifyArgs {
    int n = 2;
    double q = 2.0;
    double beta = 0.0;
    double beta2 = 0.0;
    bool beta2_set = false;
    double delta = 0.0;
    double alpha = -1.0;
    double alpha_frac = -1.0;
    double p2 = 2.0, p3 = 2.0, b = 0.0, c = 0.0;
    double c2 = -1.0;
    double tol = 1e-11;
    bool sobolev = false;
    bool denominated = false;
    std::string profile_spec;
    std::uint64_t seed = 1;
    OutputSpec out;
};

double resolve_alpha(const VerifyArgs& args, const ModelParams& params, double beta1) {
    if (args.alpha >= 0.0 && args.alpha_frac >= 0.0) {
        throw std::domain_error("give either --alpha or --alpha-frac, not both");
    }
    if (args.alpha >= 0.0) {
        return args.alpha;
    }
    if (args.alpha_frac >= 0.0) {
        return args.alpha_frac * alpha_beta(params, beta1);
    }
    throw std::domain_error("one of --alpha or --alpha-frac is required");
}

double auto_c2(double q, double beta, const ModelParams& params, std::uint64_t seed) {
    OptimizerConfig cfg;
    cfg.knot_count = 10;
    cfg.multistarts = 2;
    cfg.max_iters = 200;
    cfg.quad_tol = 1e-8;
    cfg.seed = seed;
    return estimate_sup_ratio(Objective::hardy(q, beta), cfg, params).constant;
}

int run_verify(const std::string& family, VerifyArgs& args) {
    const ModelParams params = ModelParams::make(args.n);
    if (!args.beta2_set) {
        args.beta2 = args.beta;
    }
    InequalityReport rep;
    if (family == "hardy") {
        const RadialProfile f = parse_profile(args.profile_spec, args.n, args.beta);
        rep = hardy_ratio(f, args.q, args.beta, params,
                          args.sobolev ? HardyDenominator::FullSobolev
                                       : HardyDenominator::GradientOnly,
                          args.tol);
    } else if (family == "tm") {
        const RadialProfile f = parse_profile(args.profile_spec, args.n, args.beta);
        const double alpha = resolve_alpha(args, params, args.beta);
        rep = args.denominated
                  ? tm_denominated_ratio(f, alpha, args.beta, params, args.tol)
                  : tm_weighted_ratio(f, alpha, args.beta, args.beta2, args.delta, params,
                                      args.tol);
    } else if (family == "ckn") {
        const CknParams p{args.p2, args.p3, args.b, args.c, args.delta, args.n};
        validate_ckn(p);
        const RadialProfile f =
            parse_profile(args.profile_spec, args.n, std::max(0.0, ckn_hardy_beta(p)));
        double c2 = args.c2;
        const bool auto_estimated = c2 <= 0.0;
        if (auto_estimated) {
            c2 = auto_c2(ckn_interpolation_exponent(p), ckn_hardy_beta(p), params, args.seed);
        }
        rep = ckn_explicit(f, p, c2, params, args.tol);
        rep.params["c2_auto"] = auto_estimated ? 1.0 : 0.0;
    } else if (family == "gn") {
        const RadialProfile f = parse_profile(args.profile_spec, args.n, args.beta);
        rep = gn_ratio(f, args.q, args.beta, args.beta2, args.delta, params, args.tol);
    } else if (family == "gn3") {
        const RadialProfile f = parse_profile(args.profile_spec, args.n, args.beta);
        rep = gn3_ratio(f, args.q, args.beta, params, args.tol);
    } else {  // uncertainty
        const RadialProfile f = parse_profile(args.profile_spec, args.n, args.beta);
        double c2 = args.c2;
        const bool auto_estimated = c2 <= 0.0;
        if (auto_estimated) {
            c2 = auto_c2(args.q, args.beta, params, args.seed);
        }
        rep = uncertainty_check(f, args.q, args.beta, c2, params, args.tol);
        rep.params["c2_auto"] = auto_estimated ? 1.0 : 0.0;
    }
    emit(args.out, report_payload(rep, args.out.format));
    return 0;
}

struct MoserArgs {
    int n = 2;
    double beta1 = 0.0;
    double beta2 = 0.0;
    bool beta2_set = false;
    double delta = 0.0;
    double alpha_frac = 1.0;
    std::vector<double> j_grid{5.0, 10.0, 20.0};
    int mesh = 4096;
    double tol = 1e-9;
    OutputSpec out;
};

int run_moser(MoserArgs& args) {
    const ModelParams params = ModelParams::make(args.n);
    if (!args.beta2_set) {
        args.beta2 = args.beta1;
    }
    const double alpha = args.alpha_frac * alpha_beta(params, args.beta1);
    const MoserDiagnostic diag = moser_blowup_diagnostic(args.j_grid, alpha, args.beta1,
                                                         args.beta2, args.delta, params,
                                                         args.mesh, args.tol);
    std::string payload;
    if (args.out.format == "csv") {
        payload = moser_to_csv(diag);
    } else if (args.out.format == "json") {
        payload = moser_to_json(diag);
    } else if (args.out.format == "plotdata") {
        payload = moser_to_plotdata(diag);
    } else {
        payload = "j dirichlet_norm decay_integral tm_ratio\n";
        for (const auto& row : diag.rows) {
            payload += fmt17(row.j) + " " + fmt17(row.dirichlet) + " " +
                       fmt17(row.decay_integral) + " " + fmt17(row.tm_ratio) + "\n";
        }
        payload += std::string("trend = ") + to_string(diag.trend) + "\n";
    }
    emit(args.out, payload);
    return 0;
}

struct OptimizeArgs {
    std::string objective = "hardy";
    int n = 2;
    double q = 4.0;
    double beta = 0.0;
    double beta2 = 0.0;
    bool beta2_set = false;
    double delta = 0.0;
    bool sobolev = false;
    std::vector<double> q_grid;
    OptimizerConfig cfg;
    std::string witness_path;
    OutputSpec out;
    OutputSpec sweep_out;
};

Objective build_objective(const OptimizeArgs& args, double q) {
    if (args.objective == "hardy") {
        return Objective::hardy(q, args.beta,
                                args.sobolev ? HardyDenominator::FullSobolev
                                             : HardyDenominator::GradientOnly);
    }
    if (args.objective == "gn") {
        return Objective::gn(q, args.beta, args.beta2_set ? args.beta2 : args.beta, args.delta);
    }
    return Objective::gn3(q, args.beta);
}

int run_optimize(const OptimizeArgs& args) {
    const ModelParams params = ModelParams::make(args.n);
    const SupEstimate est = estimate_sup_ratio(build_objective(args, args.q), args.cfg, params);
    if (!args.witness_path.empty()) {
        std::ofstream os(args.witness_path, std::ios::binary);
        if (!os) {
            throw std::runtime_error("cannot open witness file: " + args.witness_path);
        }
        write_profile(os, est.witness, args.n);
    }
    std::string payload;
    if (args.out.format == "csv") {
        payload = "objective,q,estimate,profile_id,iterations\n" + args.objective + "," +
                  fmt17(args.q) + "," + fmt17(est.constant) + "," + est.witness_id + "," +
                  std::to_string(est.iterations) + "\n";
    } else if (args.out.format == "plotdata") {
        payload = fmt17(args.q) + " " + fmt17(est.constant) + "\n";
    } else if (args.out.format == "text") {
        payload = "estimate = " + fmt17(est.constant) + "\nwitness = " + est.witness_id +
                  "\niterations = " + std::to_string(est.iterations) + "\n";
    } else {
        payload = "{\"objective\":\"" + args.objective + "\",\"q\":" + fmt17(args.q) +
                  ",\"estimate\":" + fmt17(est.constant) + ",\"profile_id\":\"" +
                  est.witness_id + "\",\"iterations\":" + std::to_string(est.iterations) +
                  "}\n";
    }
    emit(args.out, payload);
    return 0;
}

int run_sweep(const OptimizeArgs& args) {
    const ModelParams params = ModelParams::make(args.n);
    if (args.q_grid.empty()) {
        throw std::domain_error("sweep: --q-grid is required");
    }
    const SweepResult sweep =
        constant_sweep(args.q_grid, build_objective(args, args.q_grid.front()), args.cfg, params);
    std::string payload;
    if (args.sweep_out.format == "json") {
        payload = sweep_to_json(sweep);
    } else if (args.sweep_out.format == "plotdata") {
        payload = sweep_to_plotdata(sweep);
    } else {
        payload = sweep_to_csv(sweep);  // csv is the natural default here
    }
    emit(args.sweep_out, payload);
    return 0;
}

void add_optimizer_options(CLI::App* cmd, OptimizerConfig& cfg) {
    cmd->add_option("--knots", cfg.knot_count, "Knot count of the optimizer grid")
        ->capture_default_str();
    cmd->add_option("--radius", cfg.support_radius, "Support radius of candidate profiles")
        ->capture_default_str();
    cmd->add_option("--multistarts", cfg.multistarts, "Number of seeded random starts")
        ->capture_default_str();
    cmd->add_option("--iters", cfg.max_iters, "Simplex iteration cap per start")
        ->capture_default_str();
    cmd->add_option("--simplex-tol", cfg.simplex_tol, "Simplex spread tolerance")
        ->capture_default_str();
    cmd->add_option("--quad-tol", cfg.quad_tol, "Quadrature tolerance inside the optimizer")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Deterministic seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for Hardy, Trudinger-Moser and CKN-type inequalities "
                 "on hyperbolic space"};
    app.require_subcommand(1);

    ConstantsArgs cargs;
    auto* constants = app.add_subcommand("constants",
                                         "Critical exponent alpha_beta and asymptotic constant B");
    constants->add_option("--n", cargs.n, "Dimension of H^n")->required();
    constants->add_option("--beta", cargs.beta, "Weight power")->capture_default_str();
    add_output_options(constants, cargs.out, "text");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "Evaluate both sides of an inequality");
    verify->require_subcommand(1);
    std::vector<CLI::App*> verify_cmds;
    auto* vhardy = verify->add_subcommand("hardy", "Hardy quotient");
    auto* vtm = verify->add_subcommand("tm", "Weighted Trudinger-Moser bound");
    auto* vckn = verify->add_subcommand("ckn", "Explicit CKN inequality");
    auto* vgn = verify->add_subcommand("gn", "Interpolation CKN quotient");
    auto* vgn3 = verify->add_subcommand("gn3", "Denominated CKN quotient");
    auto* vunc = verify->add_subcommand("uncertainty", "Uncertainty-type principle");
    for (CLI::App* cmd : {vhardy, vtm, vckn, vgn, vgn3, vunc}) {
        cmd->add_option("--n", vargs.n, "Dimension")->required();
        cmd->add_option("--profile", vargs.profile_spec,
                        "tent:R | plateau:r:R | random:seed:m:R | moser:j[:mesh] | file path")
            ->required();
        cmd->add_option("--tol", vargs.tol, "Quadrature tolerance")->capture_default_str();
        add_output_options(cmd, vargs.out, "json");
        verify_cmds.push_back(cmd);
    }
    for (CLI::App* cmd : {vhardy, vgn, vgn3, vunc}) {
        cmd->add_option("--q", vargs.q, "Lebesgue exponent, q >= n")->required();
    }
    for (CLI::App* cmd : {vhardy, vtm, vgn, vgn3, vunc}) {
        cmd->add_option("--beta", vargs.beta, "Weight power (beta1 for tm/gn)")
            ->capture_default_str();
    }
    for (CLI::App* cmd : {vtm, vgn}) {
        cmd->add_option("--beta2", vargs.beta2, "Second weight power (defaults to --beta)")
            ->each([&vargs](const std::string&) { vargs.beta2_set = true; });
        cmd->add_option("--delta", vargs.delta, "Interpolation exponent")->capture_default_str();
    }
    vhardy->add_flag("--sobolev", vargs.sobolev, "Use the full W^{1,n} norm in the denominator");
    vtm->add_option("--alpha", vargs.alpha, "Trudinger-Moser exponent");
    vtm->add_option("--alpha-frac", vargs.alpha_frac, "Exponent as a fraction of alpha_beta");
    vtm->add_flag("--denominated", vargs.denominated, "Use the (1+|f|)^{-n'} damped integrand");
    vckn->add_option("--p2", vargs.p2, "Outer exponent p2 > 1")->required();
    vckn->add_option("--p3", vargs.p3, "Target exponent p3 > 0")->required();
    vckn->add_option("--b", vargs.b, "Outer weight power")->required();
    vckn->add_option("--c", vargs.c, "Target weight power")->required();
    vckn->add_option("--delta", vargs.delta, "Interpolation exponent")->required();
    for (CLI::App* cmd : {vckn, vunc}) {
        cmd->add_option("--c2", vargs.c2,
                        "Hardy constant to build the bound from (auto-estimated when omitted)");
        cmd->add_option("--seed", vargs.seed, "Seed for the nested estimate")
            ->capture_default_str();
    }

    MoserArgs margs;
    auto* moser = app.add_subcommand("moser", "Blow-up diagnostics of the Moser sequence");
    moser->add_option("--n", margs.n, "Dimension")->required();
    moser->add_option("--beta1", margs.beta1, "Weight power of the TM integrand")
        ->capture_default_str();
    moser->add_option("--beta2", margs.beta2, "Weight power of the decay integral")
        ->each([&margs](const std::string&) { margs.beta2_set = true; });
    moser->add_option("--delta", margs.delta, "Interpolation exponent")->capture_default_str();
    moser->add_option("--alpha-frac", margs.alpha_frac, "Exponent as a fraction of alpha_beta1")
        ->capture_default_str();
    moser->add_option("--j", margs.j_grid, "Ascending j grid")
        ->delimiter(',')
        ->capture_default_str();
    moser->add_option("--mesh", margs.mesh, "Profile mesh resolution")->capture_default_str();
    moser->add_option("--tol", margs.tol, "Quadrature tolerance")->capture_default_str();
    add_output_options(moser, margs.out, "text");

    OptimizeArgs oargs;
    auto* optimize = app.add_subcommand("optimize",
                                        "Maximize a quotient over radial profiles at fixed q");
    auto* sweep = app.add_subcommand("sweep", "Optimizer sweep over an ascending q grid");
    for (CLI::App* cmd : {optimize, sweep}) {
        cmd->add_option("--objective", oargs.objective, "hardy | gn | gn3")
            ->check(CLI::IsMember({"hardy", "gn", "gn3"}))
            ->capture_default_str();
        cmd->add_option("--n", oargs.n, "Dimension")->required();
        cmd->add_option("--beta", oargs.beta, "Weight power (beta1 for gn)")
            ->capture_default_str();
        cmd->add_option("--beta2", oargs.beta2, "Second weight power (gn only)")
            ->each([&oargs](const std::string&) { oargs.beta2_set = true; });
        cmd->add_option("--delta", oargs.delta, "Interpolation exponent (gn only)")
            ->capture_default_str();
        cmd->add_flag("--sobolev", oargs.sobolev, "Hardy objective with the full W^{1,n} norm");
        add_optimizer_options(cmd, oargs.cfg);
    }
    optimize->add_option("--q", oargs.q, "Lebesgue exponent")->required();
    optimize->add_option("--witness", oargs.witness_path, "Write the best profile here");
    add_output_options(optimize, oargs.out, "json");
    sweep->add_option("--q-grid", oargs.q_grid, "Ascending q grid")->delimiter(',')->required();
    add_output_options(sweep, oargs.sweep_out, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(constants)) {
            return run_constants(cargs);
        }
        if (app.got_subcommand(verify)) {
            const char* families[] = {"hardy", "tm", "ckn", "gn", "gn3", "uncertainty"};
            for (std::size_t i = 0; i < verify_cmds.size(); ++i) {
                if (verify->got_subcommand(verify_cmds[i])) {
                    return run_verify(families[i], vargs);
                }
            }
        }
        if (app.got_subcommand(moser)) {
            return run_moser(margs);
        }
        if (app.got_subcommand(optimize)) {
            return run_optimize(oargs);
        }
        if (app.got_subcommand(sweep)) {
            return run_sweep(oargs);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "numerical non-convergence: " << e.what()
                  << " (best estimate " << fmt17(e.best_estimate.value) << ", error "
                  << fmt17(e.best_estimate.abs_error_estimate) << ")\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 64;
}
