#ifndef PTRE_CONFIG_HPP
#define PTRE_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <ptre/bath.hpp>
#include <ptre/quadrature.hpp>
#include <ptre/system.hpp>
#include <ptre/three_level.hpp>

namespace ptre {

/// Everything needed to run a point or a sweep.
struct SweepConfig
{
    SystemParams system;
    /// alpha is the single-point coupling; beta_v is used when no beta_v grid is set.
    PhononBath phonon{1.0, 5.0, 1.0};

    double beta_p = 0.02;
    double beta_t = 1.0;
    double gamma_p = 0.01;
    double gamma_t = 0.01;
    std::optional<double> n_p_override;
    std::optional<double> n_t_override;

    std::vector<double> alpha_grid;
    /// Empty: one-dimensional sweep at phonon.beta_v.
    std::vector<double> beta_v_grid;

    QuadratureConfig quadrature;

    /// Output columns in order; empty selects every column.
    std::vector<std::string> columns;
    std::string output;

    PhotonBath pump() const;
    PhotonBath trap() const;

    /// Throws ConfigError on an invalid field or grid.
    void validate() const;

    /// Canonical "key = value" lines that reproduce this configuration.
    std::vector<std::string> describe() const;
};

std::vector<double> log_grid(double lo, double hi, std::size_t points);
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

/// alpha: 60 points log-spaced on [1e-3, 50].
std::vector<double> default_alpha_grid();
/// beta_v: 20 points linear on [0.1, 2].
std::vector<double> default_beta_v_grid();

SweepConfig default_config();

/**
 * Parses "key = value" lines; '#' starts a comment. Grids are given either
 * as a comma-separated list (alpha_grid, beta_v_grid) or as
 * *_min / *_max / *_points triples. Unknown keys are errors.
 */
SweepConfig parse_config(std::istream& in, const std::string& source = "<config>");
SweepConfig load_config(const std::string& path);

/// Applies one key. Grid keys given this way replace the grid immediately.
void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value);

} // namespace ptre

#endif
