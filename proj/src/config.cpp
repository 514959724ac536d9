#include <ptre/config.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include <ptre/error.hpp>
#include <ptre/sweep.hpp>

namespace ptre {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& text)
{
    const std::string t = trim(text);
    if (t.empty())
        throw ConfigError("config: empty value for '" + key + "'");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError("config: '" + key + "' expects a finite number, got '" + t + "'");
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& text)
{
    const double v = parse_number(key, text);
    if (v < 1.0 || v != std::floor(v) || v > 1e7)
        throw ConfigError("config: '" + key + "' expects a positive integer, got '"
                          + trim(text) + "'");
    return static_cast<std::size_t>(v);
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty())
            out.push_back(trim(item));
    return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& text)
{
    std::vector<double> out;
    for (const auto& item : split_list(text))
        out.push_back(parse_number(key, item));
    return out;
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_list(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += format_number(v[i]);
    }
    return s;
}

void check_grid(const char* name, const std::vector<double>& g, bool allow_empty)
{
    if (g.empty()) {
        if (allow_empty)
            return;
        throw ConfigError(std::string("config: ") + name + " is empty");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!std::isfinite(g[i]))
            throw ConfigError(std::string("config: ") + name + " has a non-finite value");
        if (i > 0 && !(g[i] > g[i - 1]))
            throw ConfigError(std::string("config: ") + name + " is not strictly increasing");
    }
}

struct GridSpec
{
    std::optional<double> lo, hi;
    std::optional<std::size_t> points;

    bool any() const { return lo || hi || points; }
};

} // namespace

PhotonBath SweepConfig::pump() const
{
    if (n_p_override)
        return PhotonBath::with_occupation(gamma_p, system.epsilon1, *n_p_override);
    return PhotonBath::thermal(gamma_p, beta_p, system.epsilon1);
}

PhotonBath SweepConfig::trap() const
{
    if (n_t_override)
        return PhotonBath::with_occupation(gamma_t, system.epsilon2, *n_t_override);
    return PhotonBath::thermal(gamma_t, beta_t, system.epsilon2);
}

void SweepConfig::validate() const
{
    try {
        system.validate();
        phonon.validate();
        pump();
        trap();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (system.epsilon1 == 0.0)
        throw ConfigError("config: epsilon1 must be nonzero");
    quadrature.validate();
    check_grid("alpha_grid", alpha_grid, false);
    check_grid("beta_v_grid", beta_v_grid, true);
    for (double a : alpha_grid)
        if (a < 0.0)
            throw ConfigError("config: alpha_grid values must be >= 0");
    for (double b : beta_v_grid)
        if (!(b > 0.0))
            throw ConfigError("config: beta_v_grid values must be > 0");
    for (const auto& c : columns)
        if (std::find(result_columns.begin(), result_columns.end(), c)
            == result_columns.end())
            throw ConfigError("config: unknown output column '" + c + "'");
}

std::vector<std::string> SweepConfig::describe() const
{
    std::vector<std::string> out;
    auto put = [&](const std::string& k, const std::string& v) { out.push_back(k + " = " + v); };
    put("epsilon1", format_number(system.epsilon1));
    put("epsilon2", format_number(system.epsilon2));
    put("J", format_number(system.J));
    put("alpha", format_number(phonon.alpha));
    put("omega_c", format_number(phonon.omega_c));
    put("beta_v", format_number(phonon.beta_v));
    put("beta_p", format_number(beta_p));
    put("beta_t", format_number(beta_t));
    put("gamma_p", format_number(gamma_p));
    put("gamma_t", format_number(gamma_t));
    if (n_p_override)
        put("n_p_override", format_number(*n_p_override));
    if (n_t_override)
        put("n_t_override", format_number(*n_t_override));
    put("alpha_grid", format_list(alpha_grid));
    if (!beta_v_grid.empty())
        put("beta_v_grid", format_list(beta_v_grid));
    put("quad_rel_tol", format_number(quadrature.rel_tol));
    put("quad_abs_tol", format_number(quadrature.abs_tol));
    put("tail_threshold", format_number(quadrature.tail_threshold));
    put("max_time_factor", format_number(quadrature.max_time_factor));
    if (!columns.empty()) {
        std::string c;
        for (std::size_t i = 0; i < columns.size(); ++i)
            c += (i ? ", " : "") + columns[i];
        put("columns", c);
    }
    if (!output.empty())
        put("output", output);
    return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points)
{
    if (!(lo > 0.0) || !(hi >= lo) || points == 0)
        throw ConfigError("log_grid: need 0 < lo <= hi and points >= 1");
    if (points == 1)
        return {lo};
    std::vector<double> g(points);
    const double a = std::log10(lo), b = std::log10(hi);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i)
                                      / static_cast<double>(points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points)
{
    if (!(hi >= lo) || points == 0)
        throw ConfigError("linear_grid: need lo <= hi and points >= 1");
    if (points == 1)
        return {lo};
    std::vector<double> g(points);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    g.back() = hi;
    return g;
}

std::vector<double> default_alpha_grid()
{
    return log_grid(1e-3, 50.0, 60);
}

std::vector<double> default_beta_v_grid()
{
    return linear_grid(0.1, 2.0, 20);
}

SweepConfig default_config()
{
    SweepConfig cfg;
    cfg.alpha_grid = default_alpha_grid();
    return cfg;
}

void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "beta_p")
        cfg.beta_p = parse_number(key, value);
    else if (key == "beta_t")
        cfg.beta_t = parse_number(key, value);
    else if (key == "gamma_p")
        cfg.gamma_p = parse_number(key, value);
    else if (key == "gamma_t")
        cfg.gamma_t = parse_number(key, value);
    else if (key == "epsilon1")
        cfg.system.epsilon1 = parse_number(key, value);
    else if (key == "epsilon2")
        cfg.system.epsilon2 = parse_number(key, value);
    else if (key == "J")
        cfg.system.J = parse_number(key, value);
    else if (key == "alpha")
        cfg.phonon.alpha = parse_number(key, value);
    else if (key == "omega_c")
        cfg.phonon.omega_c = parse_number(key, value);
    else if (key == "beta_v")
        cfg.phonon.beta_v = parse_number(key, value);
    else if (key == "n_p_override")
        cfg.n_p_override = parse_number(key, value);
    else if (key == "n_t_override")
        cfg.n_t_override = parse_number(key, value);
    else if (key == "alpha_grid")
        cfg.alpha_grid = parse_list(key, value);
    else if (key == "beta_v_grid")
        cfg.beta_v_grid = parse_list(key, value);
    else if (key == "quad_rel_tol")
        cfg.quadrature.rel_tol = parse_number(key, value);
    else if (key == "quad_abs_tol")
        cfg.quadrature.abs_tol = parse_number(key, value);
    else if (key == "tail_threshold")
        cfg.quadrature.tail_threshold = parse_number(key, value);
    else if (key == "max_time_factor")
        cfg.quadrature.max_time_factor = parse_number(key, value);
    else if (key == "output")
        cfg.output = trim(value);
    else if (key == "columns")
        cfg.columns = split_list(value);
    else
        throw ConfigError("config: unknown key '" + key + "'");
}

SweepConfig parse_config(std::istream& in, const std::string& source)
{
    SweepConfig cfg = default_config();
    GridSpec alpha, beta;
    bool alpha_listed = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source + ":" + std::to_string(lineno)
                              + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = line.substr(eq + 1);
        try {
            if (key == "alpha_min")
                alpha.lo = parse_number(key, value);
            else if (key == "alpha_max")
                alpha.hi = parse_number(key, value);
            else if (key == "alpha_points")
                alpha.points = parse_count(key, value);
            else if (key == "beta_v_min")
                beta.lo = parse_number(key, value);
            else if (key == "beta_v_max")
                beta.hi = parse_number(key, value);
            else if (key == "beta_v_points")
                beta.points = parse_count(key, value);
            else {
                apply_setting(cfg, key, value);
                alpha_listed = alpha_listed || key == "alpha_grid";
            }
        } catch (const ConfigError& e) {
            throw ConfigError(source + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }

    if (alpha.any()) {
        if (alpha_listed)
            throw ConfigError(source + ": alpha_grid conflicts with alpha_min/max/points");
        cfg.alpha_grid = log_grid(alpha.lo.value_or(1e-3), alpha.hi.value_or(50.0),
                                  alpha.points.value_or(60));
    }
    if (beta.any()) {
        if (!cfg.beta_v_grid.empty())
            throw ConfigError(source + ": beta_v_grid conflicts with beta_v_min/max/points");
        cfg.beta_v_grid = linear_grid(beta.lo.value_or(0.1), beta.hi.value_or(2.0),
                                      beta.points.value_or(20));
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(in, path);
}

} // namespace ptre
