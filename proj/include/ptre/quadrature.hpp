#ifndef PTRE_QUADRATURE_HPP
#define PTRE_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <ptre/error.hpp>

namespace ptre {

struct QuadratureConfig
{
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    /// Envelope level below which the integrand is treated as decayed.
    double tail_threshold = 1e-12;
    /// Horizon cap in units of the caller's time scale.
    double max_time_factor = 1e5;

    /// Throws ConfigError when a field is out of range.
    void validate() const;
};

/// Integrand values at one node plus the decay envelope used for truncation.
template <std::size_t N>
struct QuadratureSample
{
    std::array<double, N> value{};
    double envelope = 0.0;
};

template <std::size_t N>
struct QuadratureResult
{
    std::array<double, N> value{};
    std::array<double, N> error{};
    double horizon = 0.0;
    std::size_t evaluations = 0;
};

struct SemiInfiniteOptions
{
    /// Angular frequency of oscillating factors; 0 when there are none.
    double osc_freq = 0.0;
    /// Natural decay time of the integrand; sets the base panel width and
    /// the horizon cap.
    double time_scale = 1.0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> gk15_kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for nodes 1, 3, 5, 7 above.
inline constexpr std::array<double, 4> gk15_gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

template <std::size_t N>
struct PanelEstimate
{
    std::array<double, N> kronrod{};
    std::array<double, N> error{};
    std::array<double, N> abs_integral{};
    double max_envelope = 0.0;
    double last_node_above = -1.0;
};

template <std::size_t N, typename F>
PanelEstimate<N> gk15_panel(F& sample, double a, double b, double threshold)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    PanelEstimate<N> est;
    std::array<double, N> gauss{};

    auto accumulate = [&](double t, std::size_t k) {
        const QuadratureSample<N> s = sample(t);
        for (std::size_t i = 0; i < N; ++i) {
            est.kronrod[i] += gk15_kronrod_weights[k] * s.value[i];
            est.abs_integral[i] += gk15_kronrod_weights[k] * std::abs(s.value[i]);
            if (k % 2 == 1)
                gauss[i] += gk15_gauss_weights[k / 2] * s.value[i];
        }
        est.max_envelope = std::max(est.max_envelope, s.envelope);
        if (s.envelope >= threshold)
            est.last_node_above = std::max(est.last_node_above, t);
    };

    for (std::size_t k = 0; k < 7; ++k) {
        const double dx = half * gk15_nodes[k];
        accumulate(center - dx, k);
        accumulate(center + dx, k);
    }
    accumulate(center, 7);

    for (std::size_t i = 0; i < N; ++i) {
        est.kronrod[i] *= half;
        est.abs_integral[i] *= half;
        est.error[i] = std::abs(est.kronrod[i] - half * gauss[i]);
    }
    return est;
}

template <std::size_t N>
std::size_t worst_component(const std::array<double, N>& error)
{
    return static_cast<std::size_t>(
        std::max_element(error.begin(), error.end()) - error.begin());
}

/// Adaptive bisection of [a, b]. Returns false if the depth limit was hit.
template <std::size_t N, typename F>
bool adaptive_panel(F& sample, double a, double b, double abs_floor_per_length,
                    const QuadratureConfig& cfg, QuadratureResult<N>& acc,
                    double& last_above, double threshold)
{
    constexpr int max_depth = 48;
    struct Pending
    {
        double a, b;
        int depth;
    };
    std::vector<Pending> stack{{a, b, 0}};
    bool converged = true;

    while (!stack.empty()) {
        const Pending p = stack.back();
        stack.pop_back();
        const auto est = gk15_panel<N>(sample, p.a, p.b, threshold);
        acc.evaluations += 15;

        bool ok = true;
        for (std::size_t i = 0; i < N; ++i) {
            const double allowed = std::max(
                {cfg.rel_tol * est.abs_integral[i],
                 abs_floor_per_length * (p.b - p.a),
                 50.0 * std::numeric_limits<double>::epsilon() * est.abs_integral[i]});
            if (!(est.error[i] <= allowed)) {
                ok = false;
                break;
            }
        }
        if (!ok && p.depth >= max_depth)
            converged = false;
        if (ok || p.depth >= max_depth) {
            for (std::size_t i = 0; i < N; ++i) {
                acc.value[i] += est.kronrod[i];
                acc.error[i] += est.error[i];
            }
            last_above = std::max(last_above, est.last_node_above);
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        stack.push_back({mid, p.b, p.depth + 1});
        stack.push_back({p.a, mid, p.depth + 1});
    }
    return converged;
}

} // namespace detail

/**
 * Adaptive Gauss-Kronrod quadrature of a vector of integrands over [0, inf).
 *
 * The half-line is marched in base panels whose width is the time scale,
 * shrunk to an eighth of the oscillation period when osc_freq > 0; each base
 * panel is bisected until every component meets its tolerance. Marching stops
 * at the first panel end T for which the sampled envelope stayed below
 * tail_threshold on all of [T/2, T]. Reaching max_time_factor * time_scale
 * first raises QuadratureError with the partial estimate.
 */
template <std::size_t N, typename F>
QuadratureResult<N> integrate_semi_infinite(F&& sample,
                                            const SemiInfiniteOptions& opts,
                                            const QuadratureConfig& cfg)
{
    cfg.validate();
    if (!(opts.time_scale > 0.0) || !std::isfinite(opts.time_scale))
        throw DomainError("integrate_semi_infinite: time_scale must be positive");
    if (!(opts.osc_freq >= 0.0) || !std::isfinite(opts.osc_freq))
        throw DomainError("integrate_semi_infinite: osc_freq must be >= 0");

    double width = opts.time_scale;
    if (opts.osc_freq > 0.0)
        width = std::min(width, 2.0 * std::numbers::pi / opts.osc_freq / 8.0);
    const double cap = cfg.max_time_factor * opts.time_scale;
    const double abs_floor = cfg.abs_tol / cap;

    QuadratureResult<N> acc;
    double last_above = 0.0;
    bool converged = true;
    double t = 0.0;
    for (std::size_t k = 0;; ++k) {
        const double a = t;
        const double b = static_cast<double>(k + 1) * width;
        converged = detail::adaptive_panel<N>(sample, a, b, abs_floor, cfg, acc,
                                              last_above, cfg.tail_threshold)
                    && converged;
        t = b;
        if (t >= 2.0 * last_above)
            break;
        if (t >= cap) {
            const std::size_t worst = detail::worst_component(acc.error);
            throw QuadratureError(
                "integrate_semi_infinite: integrand envelope still above "
                "tail_threshold at the horizon cap t = " + std::to_string(cap),
                acc.value[worst], acc.error[worst], t, worst);
        }
    }
    acc.horizon = t;

    if (!converged) {
        double scale = 0.0;
        for (double v : acc.value)
            scale = std::max(scale, std::abs(v));
        const std::size_t worst = detail::worst_component(acc.error);
        if (acc.error[worst] > std::max(cfg.rel_tol * scale, cfg.abs_tol))
            throw QuadratureError(
                "integrate_semi_infinite: panel bisection depth exhausted",
                acc.value[worst], acc.error[worst], t, worst);
    }
    return acc;
}

/// Adaptive Gauss-Kronrod quadrature over a finite interval [a, b].
template <std::size_t N, typename F>
QuadratureResult<N> integrate_interval(F&& sample, double a, double b,
                                       const QuadratureConfig& cfg)
{
    cfg.validate();
    QuadratureResult<N> acc;
    if (a == b)
        return acc;
    double last_above = 0.0;
    const double length = std::abs(b - a);
    const bool converged = detail::adaptive_panel<N>(
        sample, a, b, cfg.abs_tol / length, cfg, acc, last_above,
        std::numeric_limits<double>::infinity());
    acc.horizon = b;
    if (!converged) {
        const std::size_t worst = detail::worst_component(acc.error);
        throw QuadratureError("integrate_interval: bisection depth exhausted",
                              acc.value[worst], acc.error[worst], b, worst);
    }
    return acc;
}

struct ScalarQuadrature
{
    double value = 0.0;
    double error = 0.0;
    double horizon = 0.0;
};

/// Scalar convenience form; the envelope is |integrand|.
ScalarQuadrature integrate_semi_infinite(const std::function<double(double)>& integrand,
                                         double osc_freq, const QuadratureConfig& cfg,
                                         double time_scale = 1.0);

} // namespace ptre

#endif
