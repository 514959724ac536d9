#ifndef PTRE_RATES_HPP
#define PTRE_RATES_HPP

#include <array>
#include <string_view>

#include <Eigen/Dense>

#include <ptre/bath.hpp>
#include <ptre/quadrature.hpp>
#include <ptre/system.hpp>

namespace ptre {

/**
 * Eigenbasis of the renormalized excited-state Hamiltonian
 * (epsilon/2) sigma_z + (kappa J / 2) sigma_x.
 *
 * theta = atan2(kappa J, epsilon), so theta lies in (pi/2, pi) for
 * epsilon < 0. cos_theta and sin_theta are stored as epsilon/delta and
 * kappa J/delta so that they vanish exactly in the limiting cases.
 */
struct PolaronFrame
{
    double kappa = 1.0;
    double epsilon = 0.0;
    double theta = 0.0;
    double cos_theta = 1.0;
    double sin_theta = 0.0;
    double delta = 0.0;
    double eps_plus = 0.0;
    double eps_minus = 0.0;

    double sin_2theta() const { return 2.0 * sin_theta * cos_theta; }
};

PolaronFrame build_polaron_frame(const SystemParams& sys, double kappa);

/// Bloch-equation rate constants of the excited-state pair in the polaron frame.
struct RateSet
{
    double gamma_z = 0.0;
    double gamma_x = 0.0;
    double gamma_y = 0.0;
    double gamma_zx = 0.0;
    double gamma_xz = 0.0;
    double gamma_xy = 0.0;
    double gamma_yx = 0.0;
    double gamma_yz = 0.0;
    double c_z = 0.0;
    double c_x = 0.0;
    double c_y = 0.0;

    /// Truncation horizon of the time-domain integrals.
    double horizon = 0.0;

    static constexpr std::array<std::string_view, 11> names = {
        "gamma_z",  "gamma_x",  "gamma_y",  "gamma_zx", "gamma_xz", "gamma_xy",
        "gamma_yx", "gamma_yz", "c_z",      "c_x",      "c_y",
    };
    std::array<double, 11> values() const;

    /// gamma_z, gamma_x and gamma_y are all positive.
    bool diagonal_positive() const;
};

/**
 * Evaluates the eleven rate constants for the given frame.
 *
 * Each constant is kappa^2 J^2 times a half-line integral of the kernels
 * built from Q(t). The part of each integrand that is linear in Q decays only
 * as t^-2; it is taken from exponent_transforms, and the remainder (which
 * decays at least as t^-4) is integrated in the time domain.
 *
 * Integrals that extend to the full time line are split into transforms of
 * e^Q - 1 - Q and e^-Q - 1 + Q. The first is integrated along Im t = -beta_v/2,
 * where Q is real; on the real axis it reaches kappa^-2 and the transform
 * would be lost to cancellation at strong coupling.
 */
RateSet compute_rates(const PolaronFrame& frame, const PhononBath& bath,
                      const SystemParams& sys, const QuadratureConfig& cfg);

/// d<tau>/dt = -m <tau> + c, components ordered (z, x, y).
struct TlsGenerator
{
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    double delta = 0.0;
};

TlsGenerator assemble_tls_generator(const RateSet& rates, const PolaronFrame& frame);

} // namespace ptre

#endif
