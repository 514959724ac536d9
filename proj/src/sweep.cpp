#include <ptre/sweep.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <limits>
#include <ostream>
#include <thread>

#include <ptre/bath.hpp>
#include <ptre/error.hpp>
#include <ptre/observables.hpp>
#include <ptre/rates.hpp>
#include <ptre/three_level.hpp>
#include <ptre/tls.hpp>
#include <ptre/version.hpp>

namespace ptre {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double conservation_tol = 1e-8;
constexpr double regime_tol = 1e-12;

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string point_label(double alpha, double beta_v)
{
    return "alpha=" + format_number(alpha) + " beta_v=" + format_number(beta_v);
}

ResultRow blank_row(double alpha, double beta_v)
{
    ResultRow r;
    r.alpha = alpha;
    r.beta_v = beta_v;
    for (double* p : {&r.kappa, &r.theta, &r.delta, &r.tau_z, &r.tau_x, &r.tau_y, &r.rho00,
                      &r.rho11, &r.rho22, &r.re_rho12, &r.im_rho12, &r.j_pump, &r.j_phonon,
                      &r.j_trap, &r.eta, &r.eta0, &r.gamma_z, &r.residence_proxy,
                      &r.condition_number})
        *p = nan;
    return r;
}

std::string utc_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

bool ResultRow::failed() const
{
    for (const auto& f : flags)
        if (f.rfind("error", 0) == 0)
            return true;
    return false;
}

std::string ResultRow::flag_string() const
{
    std::string s;
    for (std::size_t i = 0; i < flags.size(); ++i)
        s += (i ? ";" : "") + flags[i];
    return s;
}

std::string ResultRow::field(std::string_view column) const
{
    const std::pair<std::string_view, double> numeric[] = {
        {"alpha", alpha},
        {"beta_v", beta_v},
        {"kappa", kappa},
        {"theta", theta},
        {"delta", delta},
        {"tau_z", tau_z},
        {"tau_x", tau_x},
        {"tau_y", tau_y},
        {"rho00", rho00},
        {"rho11", rho11},
        {"rho22", rho22},
        {"re_rho12", re_rho12},
        {"im_rho12", im_rho12},
        {"j_pump", j_pump},
        {"j_phonon", j_phonon},
        {"j_trap", j_trap},
        {"eta", eta},
        {"eta0", eta0},
        {"gamma_z", gamma_z},
        {"residence_proxy", residence_proxy},
        {"condition_number", condition_number},
    };
    for (const auto& [name, value] : numeric)
        if (name == column)
            return format_number(value);
    if (column == "flags")
        return csv_quote(flag_string());
    throw ConfigError("unknown column '" + std::string(column) + "'");
}

ResultRow run_point(const SweepConfig& cfg, double alpha, double beta_v)
{
    ResultRow row = blank_row(alpha, beta_v);
    row.eta0 = cfg.system.epsilon2 / cfg.system.epsilon1;
    const char* stage = "bath";
    try {
        const PhononBath bath{alpha, cfg.phonon.omega_c, beta_v};
        bath.validate();
        const double k = kappa(bath);
        row.kappa = k;

        stage = "frame";
        const PolaronFrame frame = build_polaron_frame(cfg.system, k);
        row.theta = frame.theta;
        row.delta = frame.delta;

        stage = "rates";
        const RateSet rates = compute_rates(frame, bath, cfg.system, cfg.quadrature);
        row.gamma_z = rates.gamma_z;
        if (!rates.diagonal_positive() && alpha > 0.0)
            row.flags.push_back("rates_nonpositive");

        stage = "tls";
        const TlsGenerator tgen = assemble_tls_generator(rates, frame);
        if (alpha > 0.0) {
            const BlochVector tau = tls_steady_state(tgen).tau;
            row.tau_z = tau.tau_z;
            row.tau_x = tau.tau_x;
            row.tau_y = tau.tau_y;
            if (!tau.physical())
                row.flags.push_back("tls_unphysical");
        }

        stage = "three_level";
        const PhotonBath pump = cfg.pump();
        const PhotonBath trap = cfg.trap();
        const ThreeLevelGenerator gen = assemble_three_level_generator(rates, frame, pump, trap);
        const ThreeLevelState st = three_level_steady_state(gen);
        row.rho00 = st.rho00;
        row.rho11 = st.rho11;
        row.rho22 = st.rho22;
        row.re_rho12 = st.re12;
        row.im_rho12 = st.im12;
        row.condition_number = st.condition_number;
        if (!st.positive())
            row.flags.push_back("positivity");

        stage = "observables";
        const FluxReport fr = flux_report(st, gen, cfg.system, pump, trap);
        row.j_pump = fr.j_pump;
        row.j_phonon = fr.j_phonon;
        row.j_trap = fr.j_trap;
        row.eta = fr.eta;
        if (!(fr.conservation_residual() <= conservation_tol))
            row.flags.push_back("conservation");

        if (!(fr.j_pump > 0.0)) {
            row.flags.push_back("pump_nonpositive");
        } else {
            const Diagnostics d =
                classify_regime(st, fr.eta, fr.eta0, -fr.j_trap > 0.0, regime_tol);
            const double gap = fr.eta - fr.eta0;
            if ((d.regime == Regime::eta_above && !(gap > 0.0))
                || (d.regime == Regime::eta_below && !(gap < 0.0)))
                row.flags.push_back("regime_law");
        }

        try {
            row.residence_proxy = residence_time_proxy(st, pump);
        } catch (const DomainError&) {
            row.flags.push_back("residence_undefined");
        }
    } catch (const std::exception& e) {
        row.flags.push_back(std::string("error:") + stage + ": " + e.what() + " at "
                            + point_label(alpha, beta_v));
    }
    return row;
}

unsigned resolve_threads(int requested)
{
    if (requested > 0)
        return static_cast<unsigned>(requested);
    if (const char* env = std::getenv("PTRE_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0)
            return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<ResultRow> run_sweep(const SweepConfig& cfg, unsigned threads)
{
    cfg.validate();
    const std::vector<double> betas =
        cfg.beta_v_grid.empty() ? std::vector<double>{cfg.phonon.beta_v} : cfg.beta_v_grid;
    const std::size_t na = cfg.alpha_grid.size();
    const std::size_t total = betas.size() * na;

    std::vector<ResultRow> rows(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++)
            rows[i] = run_point(cfg, cfg.alpha_grid[i % na], betas[i / na]);
    };

    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    if (n == 1) {
        worker();
        return rows;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    return rows;
}

void write_csv(std::ostream& out, const SweepConfig& cfg, const std::vector<ResultRow>& rows,
               const CsvOptions& opts)
{
    std::vector<std::string> columns = opts.columns;
    if (columns.empty())
        for (auto c : result_columns)
            columns.emplace_back(c);

    out << "# ptre " << version_string << "\n";
    if (opts.timestamp)
        out << "# generated " << utc_timestamp() << "\n";
    for (const auto& line : cfg.describe())
        out << "# " << line << "\n";

    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << row.field(columns[i]);
        out << "\n";
    }
}

std::vector<ResultRow> run_sweep_to_file(const SweepConfig& cfg, unsigned threads)
{
    cfg.validate();
    if (cfg.output.empty())
        throw ConfigError("sweep: no output path given");
    std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("sweep: cannot open '" + cfg.output + "' for writing");

    const std::vector<ResultRow> rows = run_sweep(cfg, threads);
    write_csv(out, cfg, rows, CsvOptions{cfg.columns, true});
    out.flush();
    if (!out)
        throw Error("sweep: write to '" + cfg.output + "' failed");
    return rows;
}

} // namespace ptre
