// ptre: steady states, fluxes and efficiency of the three-level heat engine.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <ptre/bath.hpp>
#include <ptre/config.hpp>
#include <ptre/error.hpp>
#include <ptre/sweep.hpp>
#include <ptre/tls.hpp>
#include <ptre/validation.hpp>
#include <ptre/version.hpp>

namespace {

struct Options
{
    std::string config;
    std::string out;
    std::optional<double> alpha;
    std::optional<double> beta_v;
    int threads = 0;
    std::optional<double> rel_tol;
};

void add_common(CLI::App* app, Options& o)
{
    app->add_option("--config", o.config, "key = value configuration file");
    app->add_option("--alpha", o.alpha, "phonon coupling alpha");
    app->add_option("--beta-v", o.beta_v, "phonon inverse temperature");
    app->add_option("--quad-rel-tol", o.rel_tol, "quadrature relative tolerance");
}

ptre::SweepConfig build_config(const Options& o)
{
    ptre::SweepConfig cfg = o.config.empty() ? ptre::default_config()
                                             : ptre::load_config(o.config);
    if (o.alpha)
        cfg.phonon.alpha = *o.alpha;
    if (o.beta_v)
        cfg.phonon.beta_v = *o.beta_v;
    if (o.rel_tol)
        cfg.quadrature.rel_tol = *o.rel_tol;
    if (!o.out.empty())
        cfg.output = o.out;
    cfg.validate();
    return cfg;
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_point(const Options& o)
{
    const ptre::SweepConfig cfg = build_config(o);
    const ptre::ResultRow row = ptre::run_point(cfg, cfg.phonon.alpha, cfg.phonon.beta_v);
    for (auto c : ptre::result_columns)
        std::cout << c << "=" << (c == "flags" ? row.flag_string() : row.field(c)) << "\n";
    return row.failed() ? 1 : 0;
}

int cmd_sweep(const Options& o)
{
    const ptre::SweepConfig cfg = build_config(o);
    if (cfg.output.empty())
        throw ptre::ConfigError("sweep: an output path is required (--out or 'output =')");
    const auto rows = ptre::run_sweep_to_file(cfg, ptre::resolve_threads(o.threads));
    std::size_t flagged = 0, failed = 0;
    for (const auto& r : rows) {
        flagged += r.ok() ? 0 : 1;
        failed += r.failed() ? 1 : 0;
    }
    std::cerr << "wrote " << rows.size() << " rows to " << cfg.output << " (" << flagged
              << " flagged, " << failed << " failed)\n";
    return failed ? 1 : 0;
}

int cmd_limits(const Options& o)
{
    const ptre::SweepConfig cfg = build_config(o);
    const ptre::PhononBath& bath = cfg.phonon;
    std::cout << "eta0=" << num(cfg.system.epsilon2 / cfg.system.epsilon1) << "\n"
              << "tau_z_weak="
              << num(ptre::analytic_limit_tau_z(cfg.system, bath, ptre::TlsLimit::weak)) << "\n"
              << "tau_z_polaron="
              << num(ptre::analytic_limit_tau_z(cfg.system, bath, ptre::TlsLimit::polaron))
              << "\n"
              << "tau_z_strong="
              << num(ptre::analytic_limit_tau_z(cfg.system, bath, ptre::TlsLimit::strong))
              << "\n"
              << "kappa=" << num(ptre::kappa(bath)) << "\n"
              << "n_p=" << num(cfg.pump().n) << "\n"
              << "n_t=" << num(cfg.trap().n) << "\n";
    return 0;
}

int cmd_validate(const Options& o)
{
    const ptre::SweepConfig cfg = build_config(o);
    bool ok = true;
    for (const auto& c : ptre::validation::run_validation(cfg)) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
        ok = ok && c.passed;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Polaron-transformed Redfield steady states of a three-level heat engine"};
    app.set_version_flag("--version", std::string(ptre::version_string));
    app.require_subcommand(1);

    Options o;
    auto* point = app.add_subcommand("point", "evaluate one parameter point");
    add_common(point, o);

    auto* sweep = app.add_subcommand("sweep", "run the configured grid and write CSV");
    add_common(sweep, o);
    sweep->add_option("--out", o.out, "output CSV path");
    sweep->add_option("--threads", o.threads, "worker threads (default: PTRE_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);

    auto* limits = app.add_subcommand("limits", "print analytic reference values");
    add_common(limits, o);

    auto* validate = app.add_subcommand("validate", "run the numerical oracle checks");
    add_common(validate, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (point->parsed())
            return cmd_point(o);
        if (sweep->parsed())
            return cmd_sweep(o);
        if (limits->parsed())
            return cmd_limits(o);
        if (validate->parsed())
            return cmd_validate(o);
    } catch (const ptre::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
