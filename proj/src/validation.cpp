#include <ptre/validation.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/numeric/odeint.hpp>

#include <ptre/error.hpp>
#include <ptre/observables.hpp>
#include <ptre/sweep.hpp>

namespace ptre::validation {

namespace {

using cplx = std::complex<double>;

// J(w) / (pi w^2)
double weight(double w, const PhononBath& b)
{
    return b.alpha * w * std::exp(-w / b.omega_c) / (b.omega_c * b.omega_c);
}

// weight * coth(beta w / 2) = weight * (2 n(w) + 1)
double thermal_weight(double w, const PhononBath& b)
{
    if (w < 1e-8)
        return 2.0 * b.alpha / (b.beta_v * b.omega_c * b.omega_c);
    return weight(w, b) / std::tanh(0.5 * b.beta_v * w);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double rel_diff(double a, double b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct Tail
{
    double cos_part = 0.0; ///< int_T^inf cos(d t) G
    double sin_part = 0.0; ///< int_T^inf sin(d t) G
};

// integration by parts on [T, inf) for a smooth slowly varying G
template <typename G>
Tail oscillatory_tail(G&& g, double t, double d)
{
    const double h = 1.0;
    const double g0 = g(t), gp = g(t + h), gm = g(t - h);
    const double d1 = (gp - gm) / (2.0 * h);
    const double d2 = (gp - 2.0 * g0 + gm) / (h * h);
    const double s = std::sin(d * t), c = std::cos(d * t);
    Tail out;
    out.cos_part = -g0 * s / d - d1 * c / (d * d) + d2 * s / (d * d * d);
    out.sin_part = g0 * c / d - d1 * s / (d * d) - d2 * c / (d * d * d);
    return out;
}

} // namespace

double kappa_by_integration(const PhononBath& bath)
{
    bath.validate();
    if (bath.alpha == 0.0)
        return 1.0;
    boost::math::quadrature::exp_sinh<double> integrator;
    const double q0 = integrator.integrate([&](double w) { return thermal_weight(w, bath); },
                                           0.0, std::numeric_limits<double>::infinity(),
                                           1e-14);
    return std::exp(-0.5 * q0);
}

cplx bath_exponent_by_integration(double t, const PhononBath& bath)
{
    bath.validate();
    const double inf = std::numeric_limits<double>::infinity();
    auto re_f = [&](double w) { return thermal_weight(w, bath); };
    auto im_f = [&](double w) { return weight(w, bath); };
    const double at = std::abs(t);
    const double sign = t < 0.0 ? -1.0 : 1.0;

    if (at < 1.0) {
        using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
        const double re = gk::integrate([&](double w) { return re_f(w) * std::cos(w * t); },
                                        0.0, inf, 20, 1e-14);
        const double im = gk::integrate([&](double w) { return -im_f(w) * std::sin(w * t); },
                                        0.0, inf, 20, 1e-14);
        return {re, im};
    }
    boost::math::quadrature::ooura_fourier_cos<double> fc(1e-14, 10);
    boost::math::quadrature::ooura_fourier_sin<double> fs(1e-14, 10);
    const double re = fc.integrate(re_f, at).first;
    const double im = -sign * fs.integrate(im_f, at).first;
    return {re, im};
}

SimpsonRates rates_by_simpson(const PolaronFrame& frame, const PhononBath& bath,
                              const SystemParams& sys, double horizon, int log2_points)
{
    const std::size_t n = std::size_t{1} << log2_points;
    const double c = std::cos(frame.theta), s = std::sin(frame.theta);
    const double c2 = c * c, s2 = s * s, s2t = std::sin(2.0 * frame.theta);
    const double d = frame.delta;
    const cplx one{1.0, 0.0};

    auto simpson_weight = [n](std::size_t i) {
        if (i == 0 || i == n)
            return 1.0;
        return i % 2 == 1 ? 4.0 : 2.0;
    };

    // half-line integrands, literal forms with Q(-t) evaluated on its own
    std::array<cplx, 8> half{};
    const double h = horizon / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = h * static_cast<double>(i);
        const cplx qp = bath_exponent(t, bath);
        const cplx qm = bath_exponent(-t, bath);
        const cplx f = std::cosh(qp) + std::cosh(qm) - 2.0 * one;
        const cplx g = std::sinh(qp) + std::sinh(qm);
        const double cw = std::cos(d * t), sw = std::sin(d * t);
        const double w = simpson_weight(i);
        half[0] += w * cw * (f * c2 + g);
        half[1] += w * (f * s2 + cw * g);
        half[2] += w * f * (c2 * cw + s2);
        half[3] += w * f;
        half[4] += w * f * cw;
        half[5] += w * g * sw;
        half[6] += w * f * sw;
        half[7] += w * (1.0 - cw) * (std::cosh(qp) - std::cosh(qm));
    }
    for (auto& v : half)
        v *= h / 3.0;

    // full-line integrands on [-T, T]
    cplx full_cz{}, full_cx{};
    const double hf = 2.0 * horizon / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = -horizon + hf * static_cast<double>(i);
        const cplx q = bath_exponent(t, bath);
        const double sw = std::sin(d * t);
        const double w = simpson_weight(i);
        full_cz += w * sw * (c2 * std::cosh(q) + std::sinh(q));
        full_cx += w * sw * std::cosh(q);
    }
    full_cz *= hf / 3.0;
    full_cx *= hf / 3.0;

    // beyond the horizon only the parts linear in Q matter
    const Tail re_tail =
        oscillatory_tail([&](double t) { return 2.0 * bath_exponent(t, bath).real(); },
                         horizon, d);
    const Tail im_tail =
        oscillatory_tail([&](double t) { return bath_exponent(t, bath).imag(); }, horizon, d);
    half[0] += re_tail.cos_part;
    half[1] += re_tail.cos_part;
    half[5] += re_tail.sin_part;
    full_cz += cplx{0.0, 2.0 * im_tail.sin_part};

    const double k2j2 = frame.kappa * frame.kappa * sys.J * sys.J;
    const double p = 0.5 * k2j2;
    const cplx mi{0.0, -1.0};

    std::array<cplx, 11> z = {
        p * half[0],
        p * half[1],
        p * half[2],
        0.25 * k2j2 * s2t * half[3],
        0.25 * k2j2 * s2t * half[4],
        p * half[5],
        -p * c2 * half[6],
        0.25 * k2j2 * s2t * half[6],
        0.5 * mi * k2j2 * full_cz,
        0.25 * mi * k2j2 * s2t * full_cx,
        0.25 * mi * k2j2 * s2t * half[7],
    };

    SimpsonRates out;
    RateSet& r = out.rates;
    r.gamma_z = z[0].real();
    r.gamma_x = z[1].real();
    r.gamma_y = z[2].real();
    r.gamma_zx = z[3].real();
    r.gamma_xz = z[4].real();
    r.gamma_xy = z[5].real();
    r.gamma_yx = z[6].real();
    r.gamma_yz = z[7].real();
    r.c_z = z[8].real();
    r.c_x = z[9].real();
    r.c_y = z[10].real();
    r.horizon = horizon;
    for (const auto& v : z)
        if (std::abs(v.real()) > 0.0)
            out.imaginary_residue =
                std::max(out.imaginary_residue, std::abs(v.imag()) / std::abs(v.real()));
    return out;
}

BlochVector propagate_by_ode(const TlsGenerator& gen, const BlochVector& tau0, double t,
                             double tol)
{
    using state = std::array<double, 3>;
    namespace odeint = boost::numeric::odeint;
    state x = {tau0.tau_z, tau0.tau_x, tau0.tau_y};
    auto rhs = [&](const state& v, state& dv, double) {
        for (int i = 0; i < 3; ++i) {
            dv[i] = gen.c[i];
            for (int j = 0; j < 3; ++j)
                dv[i] -= gen.m(i, j) * v[j];
        }
    };
    odeint::integrate_adaptive(
        odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<state>()), rhs, x, 0.0,
        t, 1e-3);
    return {x[0], x[1], x[2]};
}

std::vector<Check> run_validation(const SweepConfig& cfg)
{
    std::vector<Check> checks;
    const auto started = std::chrono::steady_clock::now();

    // kappa closed form against its integral
    {
        Check ch{"kappa closed form vs integral", true, {}};
        double worst = 0.0;
        const double alphas[] = {0.05, 0.5, 1.0, 2.0, 5.0};
        const double betas[] = {0.2, 1.0};
        for (double a : alphas)
            for (double b : betas) {
                const PhononBath bath{a, cfg.phonon.omega_c, b};
                worst = std::max(worst, rel_diff(kappa(bath), kappa_by_integration(bath)));
            }
        const PhononBath zero{0.0, cfg.phonon.omega_c, cfg.phonon.beta_v};
        ch.passed = worst <= 1e-10 && kappa(zero) == 1.0;
        ch.detail = fmt("max rel diff %.3e over 10 sets", worst);
        checks.push_back(ch);
    }

    // Q(t) closed form against frequency integration
    {
        Check ch{"Q(t) closed form vs integral", true, {}};
        const PhononBath bath{1.0, cfg.phonon.omega_c, cfg.phonon.beta_v};
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double t = 0.01 * std::pow(10.0, 4.0 * i / 19.0);
            const cplx a = bath_exponent(t, bath);
            const cplx b = bath_exponent_by_integration(t, bath);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
        const double k_gap = rel_diff(kappa(bath), std::exp(-0.5 * bath_exponent(0.0, bath).real()));
        ch.passed = worst <= 1e-8 && k_gap <= 1e-12;
        ch.detail = fmt("max rel diff %.3e at 20 t; kappa vs exp(-Q(0)/2) %.3e", worst, k_gap);
        checks.push_back(ch);
    }

    // rate constants against the fixed-grid Simpson evaluation
    for (double a : {0.1, 1.0, 5.0}) {
        const PhononBath bath{a, cfg.phonon.omega_c, cfg.phonon.beta_v};
        const PolaronFrame frame = build_polaron_frame(cfg.system, kappa(bath));
        const RateSet fast = compute_rates(frame, bath, cfg.system, cfg.quadrature);
        const SimpsonRates slow = rates_by_simpson(frame, bath, cfg.system);
        const auto fv = fast.values();
        const auto sv = slow.rates.values();
        double worst = 0.0;
        std::size_t worst_i = 0;
        for (std::size_t i = 0; i < fv.size(); ++i) {
            const double r = rel_diff(fv[i], sv[i]);
            if (r > worst) {
                worst = r;
                worst_i = i;
            }
        }
        Check ch{"rate constants vs Simpson, alpha=" + fmt("%g", a), worst <= 1e-6, {}};
        ch.detail = fmt("max rel diff %.3e", worst) + " (" + std::string(RateSet::names[worst_i])
                    + ")";
        checks.push_back(ch);
    }

    // energy conservation on a short sweep
    {
        Check ch{"flux conservation on 5 points", true, {}};
        double worst = 0.0;
        for (double a : {1e-3, 0.1, 1.0, 5.0, 20.0}) {
            const ResultRow row = run_point(cfg, a, cfg.phonon.beta_v);
            if (row.failed()) {
                ch.passed = false;
                ch.detail = row.flag_string();
                break;
            }
            const double scale = std::max(std::abs(row.j_pump), std::abs(row.j_trap));
            worst = std::max(worst, std::abs(row.j_pump + row.j_phonon + row.j_trap) / scale);
        }
        if (ch.passed) {
            ch.passed = worst <= 1e-8;
            ch.detail = fmt("max relative imbalance %.3e", worst);
        }
        checks.push_back(ch);
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    checks.push_back({"runtime under 60 s", secs < 60.0, fmt("%.2f s", secs)});
    return checks;
}

} // namespace ptre::validation
