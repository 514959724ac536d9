#ifndef PTRE_THREE_LEVEL_HPP
#define PTRE_THREE_LEVEL_HPP

#include <Eigen/Dense>

#include <ptre/rates.hpp>

namespace ptre {

/// 1 / (exp(beta E) - 1); requires beta E > 0.
double photon_occupation(double beta, double transition_energy);

/// Lindblad photon bath on one ground-to-excited transition.
struct PhotonBath
{
    double gamma = 0.01;
    double beta = 1.0;
    double transition_energy = 1.0;
    double n = 0.0;

    /// Occupation from the Bose-Einstein factor at beta.
    static PhotonBath thermal(double gamma, double beta, double transition_energy);
    /// Occupation given directly; beta is left at its default.
    static PhotonBath with_occupation(double gamma, double transition_energy, double n);

    void validate() const;
};

/**
 * d x / dt = -mbar x + drive with
 *   x = (rho11 - rho22, rho11 + rho22, 2 Re rho12, -2 Im rho12).
 * mbar = phonon + photon; the phonon part also carries the coherent
 * rotation by Delta.
 */
struct ThreeLevelGenerator
{
    Eigen::Matrix4d mbar = Eigen::Matrix4d::Zero();
    Eigen::Vector4d drive = Eigen::Vector4d::Zero();
    Eigen::Matrix4d phonon = Eigen::Matrix4d::Zero();
    Eigen::Matrix4d photon = Eigen::Matrix4d::Zero();
    /// Photon-only steady state (zero coherence), used as the solve reference.
    Eigen::Vector4d reference = Eigen::Vector4d::Zero();
};

ThreeLevelGenerator assemble_three_level_generator(const RateSet& rates,
                                                   const PolaronFrame& frame,
                                                   const PhotonBath& pump,
                                                   const PhotonBath& trap);

/**
 * Steady state of the three-level system. Populations are held both in
 * full and as deviations from the photon-only reference state, which keeps
 * the flux differences accurate when the phonon rates are tiny.
 */
struct ThreeLevelState
{
    double rho00 = 1.0;
    double rho11 = 0.0;
    double rho22 = 0.0;
    double re12 = 0.0;
    double im12 = 0.0;

    double dev00 = 0.0;
    double dev11 = 0.0;
    double dev22 = 0.0;

    double condition_number = 0.0;

    /// (rho11 - rho22, rho11 + rho22, 2 Re rho12, -2 Im rho12)
    Eigen::Vector4d x() const;
    /// x minus the reference state.
    Eigen::Vector4d deviation() const;

    /// Populations in range and |rho12|^2 <= rho11 rho22 within tolerance.
    bool positive(double pop_tol = 1e-10, double coh_tol = 1e-8) const;
};

ThreeLevelState three_level_steady_state(const ThreeLevelGenerator& gen);

} // namespace ptre

#endif
