#ifndef PTRE_SWEEP_HPP
#define PTRE_SWEEP_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <ptre/config.hpp>

namespace ptre {

inline constexpr std::array<std::string_view, 22> result_columns = {
    "alpha",   "beta_v",   "kappa",    "theta",    "delta",    "tau_z",
    "tau_x",   "tau_y",    "rho00",    "rho11",    "rho22",    "re_rho12",
    "im_rho12", "j_pump",  "j_phonon", "j_trap",   "eta",      "eta0",
    "gamma_z", "residence_proxy", "condition_number", "flags",
};

/// One evaluated parameter point. Fields that a failed stage could not
/// produce are NaN and flags says why.
struct ResultRow
{
    double alpha = 0.0;
    double beta_v = 0.0;
    double kappa = 0.0;
    double theta = 0.0;
    double delta = 0.0;
    double tau_z = 0.0;
    double tau_x = 0.0;
    double tau_y = 0.0;
    double rho00 = 0.0;
    double rho11 = 0.0;
    double rho22 = 0.0;
    double re_rho12 = 0.0;
    double im_rho12 = 0.0;
    double j_pump = 0.0;
    double j_phonon = 0.0;
    double j_trap = 0.0;
    double eta = 0.0;
    double eta0 = 0.0;
    double gamma_z = 0.0;
    double residence_proxy = 0.0;
    double condition_number = 0.0;
    std::vector<std::string> flags;

    bool ok() const { return flags.empty(); }
    /// True if some stage failed outright (as opposed to a diagnostic warning).
    bool failed() const;
    std::string flag_string() const;
    /// Column value as CSV text.
    std::string field(std::string_view column) const;
};

/// bath, rates, TLS, three-level and observables for one (alpha, beta_v).
ResultRow run_point(const SweepConfig& cfg, double alpha, double beta_v);

/// Threads to use: explicit > 0, else PTRE_THREADS, else hardware concurrency.
unsigned resolve_threads(int requested);

/// All grid points ordered by (beta_v, alpha).
std::vector<ResultRow> run_sweep(const SweepConfig& cfg, unsigned threads = 1);

struct CsvOptions
{
    std::vector<std::string> columns;
    bool timestamp = true;
};

void write_csv(std::ostream& out, const SweepConfig& cfg, const std::vector<ResultRow>& rows,
               const CsvOptions& opts);

/// Opens cfg.output (failing before any work if it is not writable), runs
/// the sweep and writes the CSV.
std::vector<ResultRow> run_sweep_to_file(const SweepConfig& cfg, unsigned threads);

} // namespace ptre

#endif
