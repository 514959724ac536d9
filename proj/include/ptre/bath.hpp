#ifndef PTRE_BATH_HPP
#define PTRE_BATH_HPP

#include <complex>

#include <ptre/quadrature.hpp>

namespace ptre {

/**
 * Super-Ohmic phonon bath J(w) = alpha * pi * w^3 / omega_c^2 * exp(-w/omega_c).
 * Energies are in units of the inter-site coupling J, times in 1/J.
 */
struct PhononBath
{
    double alpha = 0.0;
    double omega_c = 5.0;
    double beta_v = 1.0;

    void validate() const;

    /// Decay time of the bath correlation, max(beta_v, 1/omega_c).
    double time_scale() const;
};

double spectral_density(double omega, const PhononBath& bath);

/// J(w) / (pi w^2), the weight of each mode in the bath exponent.
double mode_weight(double omega, const PhononBath& bath);

/// mode_weight(w) * coth(beta_v w / 2); finite at w = 0.
double thermal_mode_weight(double omega, const PhononBath& bath);

/// Renormalization factor kappa = <cos B> from the trigamma closed form.
double kappa(const PhononBath& bath);

/**
 * Complex bath exponent
 *   Q(t) = int_0^inf dw J(w)/(pi w^2) [(2n(w)+1) cos(wt) - i sin(wt)]
 * evaluated through its trigamma closed form. Q(-t) = conj(Q(t)) and
 * kappa = exp(-Q(0)/2).
 */
std::complex<double> bath_exponent(double t, const PhononBath& bath);

/**
 * Analytic continuation of Q to complex time,
 *   Q(t) = alpha [psi1(x + i t/beta_v) + psi1(1 + x - i t/beta_v)] / (beta_v omega_c)^2,
 * x = 1/(beta_v omega_c), valid for -(beta_v + 1/omega_c) < Im t < 1/omega_c.
 * On the real axis it equals bath_exponent.
 */
std::complex<double> bath_exponent_analytic(std::complex<double> t, const PhononBath& bath);

/// Q(s - i beta_v/2), which is real and even in s.
double bath_exponent_shifted(double s, const PhononBath& bath);

struct BathKernels
{
    double f = 0.0; ///< cosh Q(t) + cosh Q(-t) - 2
    double g = 0.0; ///< sinh Q(t) + sinh Q(-t)
};

/// Rate kernels f(t), g(t); requires t >= 0.
BathKernels kernels_f_g(double t, const PhononBath& bath);

/// cosh(z) - 1 without cancellation for small |z|.
std::complex<double> cosh_minus_one(std::complex<double> z);

/// sinh(z) - z without cancellation for small |z|.
std::complex<double> sinh_minus_identity(std::complex<double> z);

/// exp(z) - 1 - z without cancellation for small |z|.
std::complex<double> exp_remainder(std::complex<double> z);
double exp_remainder(double x);

/**
 * Half-line Fourier transforms of the bath exponent at frequency w > 0,
 * evaluated in the frequency domain:
 *   cos_re = int_0^inf cos(wt) Re Q(t) dt = (pi/2) thermal_mode_weight(w)
 *   sin_im = int_0^inf sin(wt) Im Q(t) dt = -(pi/2) mode_weight(w)
 *   sin_re = int_0^inf sin(wt) Re Q(t) dt
 *          = PV int_0^inf dv thermal_mode_weight(v) w / (w^2 - v^2)
 * Re Q decays only as t^-2, so these are the parts of the rate integrals
 * that are not done in the time domain.
 */
struct ExponentTransforms
{
    double cos_re = 0.0;
    double sin_re = 0.0;
    double sin_im = 0.0;
};

ExponentTransforms exponent_transforms(double omega, const PhononBath& bath,
                                       const QuadratureConfig& cfg);

} // namespace ptre

#endif
