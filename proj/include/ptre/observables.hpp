#ifndef PTRE_OBSERVABLES_HPP
#define PTRE_OBSERVABLES_HPP

#include <ptre/rates.hpp>
#include <ptre/system.hpp>
#include <ptre/three_level.hpp>

namespace ptre {

/// Steady-state energy fluxes, positive into the system.
struct FluxReport
{
    double j_pump = 0.0;
    double j_phonon = 0.0;
    double j_trap = 0.0;
    double eta = 0.0;
    double eta0 = 0.0;

    /// |j_pump + j_phonon + j_trap| / max(|j_pump|, |j_trap|)
    double conservation_residual() const;
};

struct PhotonFluxes
{
    double j_pump = 0.0;
    double j_trap = 0.0;
};

PhotonFluxes fluxes(const ThreeLevelState& state, const SystemParams& sys,
                    const PhotonBath& pump, const PhotonBath& trap);

/// Energy flux from the phonon part of the generator, Tr[L_v(rho) H_s].
double phonon_flux(const ThreeLevelState& state, const ThreeLevelGenerator& gen,
                   const SystemParams& sys);

/// |j_trap / j_pump|; throws DomainError unless j_pump > 0.
double efficiency(double j_pump, double j_trap);

enum class Regime { eta_above, eta_below, boundary, not_operating };

const char* regime_name(Regime r);

struct Diagnostics
{
    double pop_inversion = 0.0;
    double coherence_re = 0.0;
    Regime regime = Regime::boundary;
    double residence_proxy = 0.0;
    double gamma_z_rate = 0.0;
};

/// Sign classification of eta - eta0 from Re rho12.
Diagnostics classify_regime(const ThreeLevelState& state, double eta, double eta0,
                            bool output_positive, double tol_sign = 1e-12);

/**
 * Mean time an excitation spends in the excited manifold: occupancy
 * (rho11 + rho22) over the net pump throughput gamma_p [n_p rho00 - (n_p+1) rho11].
 * Throws DomainError when the throughput is not positive.
 */
double residence_time_proxy(const ThreeLevelState& state, const PhotonBath& pump);

struct KineticCrossover
{
    double gamma_z = 0.0;
    double gamma_t = 0.0;
    /// gamma_z < gamma_t: trapping outpaces phonon-assisted transfer.
    bool trap_limited = false;
};

KineticCrossover kinetic_crossover(const RateSet& rates, const PhotonBath& trap);

/// All fluxes plus efficiency; eta is NaN when j_pump <= 0.
FluxReport flux_report(const ThreeLevelState& state, const ThreeLevelGenerator& gen,
                       const SystemParams& sys, const PhotonBath& pump,
                       const PhotonBath& trap);

} // namespace ptre

#endif
