#include <ptre/bath.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <ptre/trigamma.hpp>

namespace ptre {

namespace {

// y coth(y), exact limit 1 at y = 0
double y_coth_y(double y)
{
    if (std::abs(y) < 1e-4)
        return 1.0 + y * y / 3.0;
    return y / std::tanh(y);
}

PhononBath unit_coupling(const PhononBath& bath)
{
    PhononBath unit = bath;
    unit.alpha = 1.0;
    return unit;
}

} // namespace

void PhononBath::validate() const
{
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("PhononBath: alpha must be finite and >= 0");
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
        throw DomainError("PhononBath: omega_c must be finite and > 0");
    if (!(beta_v > 0.0) || !std::isfinite(beta_v))
        throw DomainError("PhononBath: beta_v must be finite and > 0");
}

double PhononBath::time_scale() const
{
    return std::max(beta_v, 1.0 / omega_c);
}

double spectral_density(double omega, const PhononBath& bath)
{
    if (!(omega >= 0.0))
        throw DomainError("spectral_density: omega must be >= 0");
    const double w = omega / bath.omega_c;
    return bath.alpha * std::numbers::pi * omega * w * w * std::exp(-w);
}

double mode_weight(double omega, const PhononBath& bath)
{
    const double wc = bath.omega_c;
    return bath.alpha * omega * std::exp(-omega / wc) / (wc * wc);
}

double thermal_mode_weight(double omega, const PhononBath& bath)
{
    // w coth(beta w / 2) = (2 / beta) y coth(y), y = beta w / 2
    const double wc = bath.omega_c;
    const double y = 0.5 * bath.beta_v * omega;
    return bath.alpha * std::exp(-omega / wc) / (wc * wc) * (2.0 / bath.beta_v)
           * y_coth_y(y);
}

double kappa(const PhononBath& bath)
{
    bath.validate();
    const double bw = bath.beta_v * bath.omega_c;
    const double bracket = 1.0 - 2.0 * trigamma(1.0 / bw) / (bw * bw);
    return std::exp(0.5 * bath.alpha * bracket);
}

std::complex<double> bath_exponent(double t, const PhononBath& bath)
{
    const double wc = bath.omega_c;
    const double bw = bath.beta_v * wc;
    const double wt = wc * t;
    const double denom = 1.0 + wt * wt;
    const std::complex<double> vacuum{(-1.0 + wt * wt) / (denom * denom),
                                      -2.0 * wt / (denom * denom)};
    const double thermal =
        2.0 * trigamma(std::complex<double>{1.0 / bw, t / bath.beta_v}).real()
        / (bw * bw);
    return bath.alpha * (vacuum + thermal);
}

std::complex<double> bath_exponent_analytic(std::complex<double> t, const PhononBath& bath)
{
    const double bw = bath.beta_v * bath.omega_c;
    const double x = 1.0 / bw;
    const double upper = 1.0 / bath.omega_c;
    const double lower = -(bath.beta_v + 1.0 / bath.omega_c);
    if (!(t.imag() < upper && t.imag() > lower))
        throw DomainError("bath_exponent_analytic: Im t outside the analytic strip");
    const std::complex<double> it = std::complex<double>{0.0, 1.0} * t / bath.beta_v;
    return bath.alpha * (trigamma(x + it) + trigamma(1.0 + x - it)) / (bw * bw);
}

double bath_exponent_shifted(double s, const PhononBath& bath)
{
    const double bw = bath.beta_v * bath.omega_c;
    const std::complex<double> z{1.0 / bw + 0.5, s / bath.beta_v};
    return 2.0 * bath.alpha * trigamma(z).real() / (bw * bw);
}

std::complex<double> cosh_minus_one(std::complex<double> z)
{
    const std::complex<double> s = std::sinh(0.5 * z);
    return 2.0 * s * s;
}

std::complex<double> sinh_minus_identity(std::complex<double> z)
{
    if (std::abs(z) >= 0.5)
        return std::sinh(z) - z;
    const std::complex<double> z2 = z * z;
    std::complex<double> term = z * z2 / 6.0;
    std::complex<double> sum = term;
    for (int k = 5; k < 40; k += 2) {
        term *= z2 / static_cast<double>((k - 1) * k);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

template <typename T>
T exp_remainder_impl(T z)
{
    if (std::abs(z) >= 0.5)
        return std::exp(z) - T(1.0) - z;
    T term = z * z / 2.0;
    T sum = term;
    for (int k = 3; k < 40; ++k) {
        term *= z / static_cast<double>(k);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

std::complex<double> exp_remainder(std::complex<double> z)
{
    return exp_remainder_impl(z);
}

double exp_remainder(double x)
{
    return exp_remainder_impl(x);
}

BathKernels kernels_f_g(double t, const PhononBath& bath)
{
    if (!(t >= 0.0))
        throw DomainError("kernels_f_g: t must be >= 0");
    const std::complex<double> q = bath_exponent(t, bath);
    return {2.0 * cosh_minus_one(q).real(), 2.0 * std::sinh(q).real()};
}

ExponentTransforms exponent_transforms(double omega, const PhononBath& bath,
                                       const QuadratureConfig& cfg)
{
    bath.validate();
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw DomainError("exponent_transforms: frequency must be > 0");
    if (bath.alpha == 0.0)
        return {};

    // every transform is linear in alpha; integrate at unit coupling so the
    // absolute tolerances do not depend on the coupling strength
    const PhononBath unit = unit_coupling(bath);
    const double pi = std::numbers::pi;
    const double h_at = thermal_mode_weight(omega, unit);

    auto regular = [&](double v) {
        QuadratureSample<1> s;
        const double diff = thermal_mode_weight(v, unit) - h_at;
        s.value[0] = diff * omega / ((omega - v) * (omega + v));
        s.envelope = std::abs(s.value[0]);
        return s;
    };
    auto tail = [&](double u) {
        const double v = 2.0 * omega + u;
        QuadratureSample<1> s;
        s.value[0] = thermal_mode_weight(v, unit) * omega / ((omega - v) * (omega + v));
        s.envelope = std::abs(s.value[0]);
        return s;
    };

    const double near = integrate_interval<1>(regular, 0.0, omega, cfg).value[0]
                        + integrate_interval<1>(regular, omega, 2.0 * omega, cfg).value[0];
    const double far =
        integrate_semi_infinite<1>(tail, SemiInfiniteOptions{0.0, bath.omega_c}, cfg)
            .value[0];
    // PV int_0^{2w} w / (w^2 - v^2) dv = ln(3) / 2
    const double sin_re = near + far + h_at * 0.5 * std::log(3.0);

    ExponentTransforms out;
    out.cos_re = bath.alpha * 0.5 * pi * h_at;
    out.sin_re = bath.alpha * sin_re;
    out.sin_im = -bath.alpha * 0.5 * pi * mode_weight(omega, unit);
    return out;
}

} // namespace ptre
