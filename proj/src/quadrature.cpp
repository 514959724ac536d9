#include <ptre/quadrature.hpp>

namespace ptre {

void QuadratureConfig::validate() const
{
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(rel_tol))
        throw ConfigError("quadrature: rel_tol must be positive");
    if (!positive(abs_tol))
        throw ConfigError("quadrature: abs_tol must be positive");
    if (!positive(tail_threshold))
        throw ConfigError("quadrature: tail_threshold must be positive");
    if (!(max_time_factor >= 10.0) || !std::isfinite(max_time_factor))
        throw ConfigError("quadrature: max_time_factor must be >= 10");
}

ScalarQuadrature integrate_semi_infinite(const std::function<double(double)>& integrand,
                                         double osc_freq, const QuadratureConfig& cfg,
                                         double time_scale)
{
    auto sample = [&](double t) {
        QuadratureSample<1> s;
        s.value[0] = integrand(t);
        s.envelope = std::abs(s.value[0]);
        return s;
    };
    const auto r = integrate_semi_infinite<1>(
        sample, SemiInfiniteOptions{osc_freq, time_scale}, cfg);
    return {r.value[0], r.error[0], r.horizon};
}

} // namespace ptre
