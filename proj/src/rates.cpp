#include <ptre/rates.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include <ptre/error.hpp>

namespace ptre {

namespace {

// integrals along the real time axis, in this order
constexpr std::size_t n_real = 6;
constexpr std::array<const char*, n_real> real_owner = {
    "gamma_xy", "gamma_yx/gamma_yz", "c_y", "gamma_z/gamma_x", "gamma_z/gamma_x", "c_z",
};

// integrals along t = s - i beta_v / 2
constexpr std::size_t n_shifted = 2;
constexpr std::array<const char*, n_shifted> shifted_owner = {"gamma_zx", "gamma_z"};

template <std::size_t N>
QuadratureResult<N> integrate_named(const auto& sample, const SemiInfiniteOptions& opts,
                                    const QuadratureConfig& cfg,
                                    const std::array<const char*, N>& owner,
                                    const PhononBath& bath)
{
    try {
        return integrate_semi_infinite<N>(sample, opts, cfg);
    } catch (const QuadratureError& e) {
        const std::size_t k = e.component() < N ? e.component() : 0;
        throw QuadratureError(std::string("compute_rates: integral for ") + owner[k]
                                  + " did not converge at alpha=" + std::to_string(bath.alpha)
                                  + ", beta_v=" + std::to_string(bath.beta_v) + ": " + e.what(),
                              e.estimate(), e.error_bound(), e.horizon(), k);
    }
}

} // namespace

PolaronFrame build_polaron_frame(const SystemParams& sys, double kappa)
{
    sys.validate();
    if (!(kappa > 0.0 && kappa <= 1.0))
        throw DomainError("build_polaron_frame: kappa must lie in (0, 1], got "
                          + std::to_string(kappa));
    PolaronFrame f;
    f.kappa = kappa;
    f.epsilon = sys.epsilon();
    const double kj = kappa * sys.J;
    if (f.epsilon == 0.0 && kj == 0.0)
        throw SingularError("build_polaron_frame: epsilon = 0 and kappa J = 0, "
                            "the polaron eigenbasis is degenerate");
    f.delta = std::hypot(f.epsilon, kj);
    f.theta = std::atan2(kj, f.epsilon);
    f.cos_theta = f.epsilon / f.delta;
    f.sin_theta = kj / f.delta;
    f.eps_plus = 0.5 * f.delta;
    f.eps_minus = -0.5 * f.delta;
    return f;
}

std::array<double, 11> RateSet::values() const
{
    return {gamma_z,  gamma_x,  gamma_y,  gamma_zx, gamma_xz, gamma_xy,
            gamma_yx, gamma_yz, c_z,      c_x,      c_y};
}

bool RateSet::diagonal_positive() const
{
    return gamma_z > 0.0 && gamma_x > 0.0 && gamma_y > 0.0;
}

RateSet compute_rates(const PolaronFrame& frame, const PhononBath& bath,
                      const SystemParams& sys, const QuadratureConfig& cfg)
{
    bath.validate();
    sys.validate();
    cfg.validate();
    if (!(frame.delta > 0.0) || !std::isfinite(frame.delta))
        throw SingularError("compute_rates: frame has Delta <= 0");

    RateSet r;
    if (bath.alpha == 0.0 || sys.J == 0.0)
        return r;

    const double delta = frame.delta;
    const double c2 = frame.cos_theta * frame.cos_theta;
    const double s2 = frame.sin_theta * frame.sin_theta;

    // Full-line transforms of e^Q - 1 - Q are taken on the line Im t = -beta_v/2,
    // where Q is real and e^Q is far smaller than at t = 0.
    auto real_axis = [&](double t) {
        const std::complex<double> q = bath_exponent(t, bath);
        const std::complex<double> ch = cosh_minus_one(q);
        const std::complex<double> em = exp_remainder(-q);
        const double f = 2.0 * ch.real();
        const double g = 2.0 * sinh_minus_identity(q).real();
        const double cw = std::cos(delta * t);
        const double sw = std::sin(delta * t);

        QuadratureSample<n_real> s;
        s.value = {
            g * sw,
            f * sw,
            (1.0 - cw) * ch.imag(),
            em.real(),
            cw * em.real(),
            sw * em.imag(),
        };
        s.envelope = std::abs(f) + std::abs(g) + std::abs(ch.imag()) + std::abs(em);
        return s;
    };

    auto shifted = [&](double t) {
        const double ep = exp_remainder(bath_exponent_shifted(t, bath));
        QuadratureSample<n_shifted> s;
        s.value = {ep, std::cos(delta * t) * ep};
        s.envelope = std::abs(ep);
        return s;
    };

    const SemiInfiniteOptions opts{delta, bath.time_scale()};
    const auto ra = integrate_named<n_real>(real_axis, opts, cfg, real_owner, bath);
    const auto sa = integrate_named<n_shifted>(shifted, opts, cfg, shifted_owner, bath);
    const ExponentTransforms tr = exponent_transforms(delta, bath, cfg);

    // A+(w), A-(w): full-line transforms of e^Q - 1 - Q and e^-Q - 1 + Q
    const double boost = std::exp(0.5 * delta * bath.beta_v);
    const double ap0 = 2.0 * sa.value[0];
    const double ap_pos = 2.0 * boost * sa.value[1];
    const double ap_neg = 2.0 * sa.value[1] / boost;
    const double am0 = 2.0 * ra.value[3];
    const double am_pos = 2.0 * (ra.value[4] - ra.value[5]);
    const double am_neg = 2.0 * (ra.value[4] + ra.value[5]);

    // transforms of cosh Q - 1 and sinh Q - Q
    const double ch0 = 0.5 * (ap0 + am0);
    const double ch_pos = 0.5 * (ap_pos + am_pos);
    const double ch_neg = 0.5 * (ap_neg + am_neg);
    const double sh_pos = 0.5 * (ap_pos - am_pos);
    const double sh_neg = 0.5 * (ap_neg - am_neg);

    const double f_cos = 0.5 * (ch_pos + ch_neg);
    const double g_cos = 0.5 * (sh_pos + sh_neg);
    const double imch_sin = -0.25 * (ch_pos - ch_neg);
    const double imsh_sin = -0.25 * (sh_pos - sh_neg);

    const double p = 0.5 * frame.kappa * frame.kappa * sys.J * sys.J;
    const double s2t = frame.sin_2theta();

    // the parts linear in Q enter only through cos_re, sin_re, sin_im
    r.gamma_z = p * (c2 * f_cos + g_cos + 2.0 * tr.cos_re);
    r.gamma_x = p * (s2 * ch0 + g_cos + 2.0 * tr.cos_re);
    r.gamma_y = p * (c2 * f_cos + s2 * ch0);
    r.gamma_zx = 0.5 * p * s2t * ch0;
    r.gamma_xz = 0.5 * p * s2t * f_cos;
    r.gamma_xy = p * (ra.value[0] + 2.0 * tr.sin_re);
    r.gamma_yx = -p * c2 * ra.value[1];
    r.gamma_yz = 0.5 * p * s2t * ra.value[1];
    r.c_z = 2.0 * p * (c2 * imch_sin + imsh_sin + tr.sin_im);
    r.c_x = p * s2t * imch_sin;
    r.c_y = p * s2t * ra.value[2];
    r.horizon = std::max(ra.horizon, sa.horizon);

    for (double x : r.values())
        if (!std::isfinite(x))
            throw ConsistencyError("compute_rates: non-finite rate constant at alpha="
                                   + std::to_string(bath.alpha));
    return r;
}

TlsGenerator assemble_tls_generator(const RateSet& rates, const PolaronFrame& frame)
{
    TlsGenerator g;
    const double d = frame.delta;
    g.m << rates.gamma_z, rates.gamma_zx, 0.0,
        rates.gamma_xz, rates.gamma_x, d + rates.gamma_xy,
        rates.gamma_yz, -d + rates.gamma_yx, rates.gamma_y;
    g.c << rates.c_z, rates.c_x, rates.c_y;
    g.delta = d;
    return g;
}

} // namespace ptre
