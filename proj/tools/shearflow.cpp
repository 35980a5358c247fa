#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "shear/checks.hpp"
#include "shear/io.hpp"

using namespace shear;
namespace fs = std::filesystem;

namespace {

struct CliState {
    config::RunConfig cfg;
    std::string config_path;
};

// flags override config file values, which override defaults
void attach_common(CLI::App* app, CliState& st) {
    app->add_option("--config", st.config_path, "JSON config file");
    app->add_option("--a", st.cfg.a, "homogeneity exponent a in (0,1)");
    app->add_option("--out-dir", st.cfg.out_dir, "output directory");
    app->add_option("--eps-final", st.cfg.eps_final, "final regularization parameter");
    app->add_option("--threads", st.cfg.threads, "parallelism degree (outputs independent)");
    app->add_flag("--use-phi-identity,!--no-phi-identity", st.cfg.use_phi_identity,
                  "use the closed Phi integral identity in the conservation check");
    app->add_flag("--sharp-cutoff", st.cfg.sharp_cutoff,
                  "sharp support indicator instead of the tanh ramp");
    for (const std::string& name : checks::known_check_names()) {
        app->add_option_function<double>(
            "--tol-" + name,
            [&st, name](double v) { st.cfg.tolerances[name] = v; },
            "tolerance override for the " + name + " check");
    }
}

config::RunConfig resolve_config(const CliState& st, const CLI::App* cmd) {
    config::RunConfig cfg;  // defaults
    if (!st.config_path.empty()) cfg = config::from_json_file(st.config_path, cfg);
    // re-apply explicitly set flags on top of the file values
    config::RunConfig flags = st.cfg;
    if (cmd->count("--a")) cfg.a = flags.a;
    if (cmd->count("--out-dir")) cfg.out_dir = flags.out_dir;
    if (cmd->count("--eps-final")) cfg.eps_final = flags.eps_final;
    if (cmd->count("--threads")) cfg.threads = flags.threads;
    if (cmd->count("--use-phi-identity") || cmd->count("--no-phi-identity"))
        cfg.use_phi_identity = flags.use_phi_identity;
    if (cmd->count("--sharp-cutoff")) cfg.sharp_cutoff = flags.sharp_cutoff;
    for (const auto& [k, v] : flags.tolerances) cfg.tolerances[k] = v;
    cfg.validate();
    fs::create_directories(cfg.out_dir);
    return cfg;
}

int cmd_solve(const config::RunConfig& cfg) {
    kernels::HomogeneitySetup setup(cfg.a);
    kernels::KernelTable table = kernels::build_kernel_table(setup, -30.0, 30.0, 4097);
    cutoff::TOperator op(setup, table,
                         cutoff::default_xi_grid(cfg.xi_lo, cfg.xi_hi, cfg.grid_n), 4, 10.0,
                         1.0, cfg.threads);
    cutoff::SolveOptions sopts;
    sopts.damping = cfg.damping;
    sopts.tol = cfg.solve_tol;
    sopts.max_iter = cfg.max_iter;
    auto cont = cutoff::continue_to_zero(setup, op,
                                         cutoff::default_eps_schedule(cfg.eps_final), sopts);
    if (cont.profile.epsilon() <= 1e-6)
        cont.profile.beta_hat = cutoff::estimate_beta(setup, cont.profile).beta_slope;
    else
        cont.profile.beta_hat = cont.profile.left_tail_slope();
    const fs::path dir(cfg.out_dir);
    io::write_kernel_table_csv(table, (dir / "kernel.csv").string());
    io::write_kernel_table_sidecar(table, (dir / "kernel.json").string());
    io::write_profile_csv(cont.profile, (dir / "sigma.csv").string());
    io::write_profile_sidecar(cont.profile, (dir / "sigma.json").string());
    std::cout << "solved a=" << cfg.a << ": residual_sup=" << cont.profile.residual_sup
              << " beta_hat=" << cont.profile.beta_hat << "\n"
              << "wrote " << (dir / "sigma.csv").string() << "\n";
    return 0;
}

int cmd_profiles(const config::RunConfig& cfg, const std::string& sigma_csv,
                 const std::string& sigma_json) {
    kernels::HomogeneitySetup setup(cfg.a);
    cutoff::CutoffProfile profile = io::read_profile(sigma_csv, sigma_json);
    if (std::fabs(profile.a() - cfg.a) > 1e-12)
        throw std::domain_error("profiles: config a does not match the sigma file");
    if (profile.beta_hat == 0.0)
        profile.beta_hat = profile.epsilon() <= 1e-6
                               ? cutoff::estimate_beta(setup, profile).beta_slope
                               : profile.left_tail_slope();
    const fs::path dir(cfg.out_dir);
    profiles::ProfileCurve omega = profiles::build_omega_curve(setup, profile);
    profiles::ProfileCurve w = profiles::build_w_curve(setup, omega, profile);
    profiles::ProfileCurve hbar = profiles::build_hbar_curve(setup, w, profile);
    profiles::ProfileCurve u = profiles::build_u_curve(setup, hbar);
    // Wtilde sampled over the image of the W grid
    profiles::ProfileCurve wtilde;
    {
        const double a = cfg.a;
        std::vector<double> xs, vs;
        const int n = 240;
        const double lo = std::pow(w.x_hi(), -a) * 1.05, hi = std::pow(w.x_lo(), -a) * 0.95;
        for (int i = 0; i < n; ++i) {
            const double s =
                std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
            xs.push_back(s);
            vs.push_back(profiles::w_tilde_at(setup, w, s));
        }
        profiles::TailModel left{0.0, vs.front(), 0.0, xs.front()};
        profiles::TailModel right{-(1.0 / a + 1.0), vs.back(), 0.0, xs.back()};
        wtilde = profiles::ProfileCurve(profiles::CurveKind::Wtilde, xs, vs, left, right);
    }
    for (const auto* c : {&omega, &w, &wtilde, &hbar, &u}) {
        const std::string base = profiles::curve_kind_name(c->kind());
        io::write_curve_csv(*c, (dir / (base + ".csv")).string());
        io::write_curve_sidecar(*c, (dir / (base + ".json")).string());
    }
    std::cout << "wrote Omega/W/Wtilde/Hbar/U curves to " << dir.string() << "\n";
    return 0;
}

int cmd_scales(const config::RunConfig& cfg) {
    kernels::HomogeneitySetup setup(cfg.a);
    scales::ScaleModel m(setup);
    std::cout << "tau,lambda,eps,mass_integral\n";
    for (double tau = 10.0; tau <= 1e6 + 0.5; tau *= 10.0) {
        std::cout << io::format_number(tau) << "," << io::format_number(m.lambda(tau)) << ","
                  << io::format_number(m.eps(tau)) << ","
                  << io::format_number(scales::mass_integral(m, tau)) << "\n";
    }
    return 0;
}

int cmd_evolve(const config::RunConfig& cfg, double tau, int n, bool with_f) {
    checks::Pipeline p = checks::run_pipeline(cfg);
    const fs::path dir(cfg.out_dir);
    const double le = p.solution.model.log_eps(tau);
    const double lo = le - std::log(10.0);
    const double hi = std::min(le + tau + std::log(10.0), 280.0);
    std::ofstream out(dir / "evolve_G.csv");
    out << "xi1,xi2,value\n";
    for (int i = 0; i < n; ++i) {
        const double lx = lo + (hi - lo) * i / (n - 1);
        const double xi2 = std::exp(lx);
        out << io::format_number(xi2) << "," << io::format_number(xi2) << ","
            << io::format_number(evolution::evaluate_G_collapsed(p.solution, xi2, tau)) << "\n";
    }
    if (with_f) {
        std::ofstream fout(dir / "evolve_F.csv");
        fout << "xi1,xi2,xi3,value\n";
        const double xi2 = std::exp(le + std::min(0.35 * tau, 120.0));
        for (int i = 0; i < n; ++i) {
            const double t = std::exp(-6.0 + 12.0 * i / (n - 1));
            const double xi3 = xi2 * t;
            fout << io::format_number(xi2) << "," << io::format_number(xi2) << ","
                 << io::format_number(xi3) << ","
                 << io::format_number(
                        evolution::evaluate_F_collapsed(p.solution, xi2, xi3, tau))
                 << "\n";
        }
    }
    std::cout << "wrote evolve samples (tau=" << tau << ") to " << dir.string() << "\n";
    return 0;
}

int cmd_conserve(const config::RunConfig& cfg, double t) {
    kernels::HomogeneitySetup setup(cfg.a);
    conservation::TestDensity td = conservation::gaussian_density();
    const double gain = conservation::reduced_gain_mass(setup, td, t, cfg.use_phi_identity);
    const double loss = conservation::reduced_loss_mass(setup, td);
    nlohmann::json j;
    j["a"] = cfg.a;
    j["t"] = t;
    j["use_phi_identity"] = cfg.use_phi_identity;
    j["gain"] = gain;
    j["loss"] = loss;
    j["relative_difference"] = (gain - loss) / loss;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const config::RunConfig& cfg) {
    checks::VerificationReport rep = checks::run_verification(cfg);
    rep.print(std::cout);
    const fs::path dir(cfg.out_dir);
    std::ofstream out(dir / "report.json");
    out << rep.to_json() << "\n";
    std::cout << "wrote " << (dir / "report.json").string() << "\n";
    if (!rep.overall()) {
        for (const auto& c : rep.checks)
            if (!c.pass) {
                std::cerr << "check failed: " << c.name << "\n";
                break;
            }
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matched-asymptotic solver for the sheared kinetic cutoff problem"};
    app.require_subcommand(1);

    CliState st;
    auto* solve = app.add_subcommand("solve", "solve the cutoff fixed point and write sigma");
    auto* profs = app.add_subcommand("profiles", "build Omega/W/Wtilde/Hbar/U from a sigma file");
    auto* scal = app.add_subcommand("scales", "print (tau, lambda, eps, mass_integral) CSV");
    auto* evol = app.add_subcommand("evolve", "sample the asymptotic G (and F) on log grids");
    auto* cons = app.add_subcommand("conserve", "reduced gain/loss mass check, JSON output");
    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    std::string sigma_csv = "sigma.csv", sigma_json = "sigma.json";
    double evolve_tau = 1e3, conserve_t = 10.0;
    int evolve_n = 200;
    bool with_f = false;
    profs->add_option("--sigma", sigma_csv, "sigma CSV from `solve`");
    profs->add_option("--sigma-sidecar", sigma_json, "sigma JSON sidecar");
    evol->add_option("--tau", evolve_tau, "evaluation time tau");
    evol->add_option("--n", evolve_n, "samples per grid");
    evol->add_flag("--f", with_f, "also sample the F Lorentzian section");
    cons->add_option("--t", conserve_t, "gain-side time parameter (>= 1)");
    for (CLI::App* c : {solve, profs, scal, evol, cons, verify}) attach_common(c, st);

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* cmd = app.get_subcommands().front();
        config::RunConfig cfg = resolve_config(st, cmd);
        if (cmd == solve) return cmd_solve(cfg);
        if (cmd == profs) return cmd_profiles(cfg, sigma_csv, sigma_json);
        if (cmd == scal) return cmd_scales(cfg);
        if (cmd == evol) return cmd_evolve(cfg, evolve_tau, evolve_n, with_f);
        if (cmd == cons) return cmd_conserve(cfg, conserve_t);
        if (cmd == verify) return cmd_verify(cfg);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
