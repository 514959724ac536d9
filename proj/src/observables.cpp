#include <ptre/observables.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <ptre/error.hpp>

namespace ptre {

namespace {

// gamma [n rho00 - (n+1) rho_ii], from the deviations so the reference
// state (which balances this exactly) drops out
double net_absorption(const PhotonBath& b, double dev00, double devii)
{
    return b.gamma * (b.n * dev00 - (b.n + 1.0) * devii);
}

} // namespace

double FluxReport::conservation_residual() const
{
    const double scale = std::max(std::abs(j_pump), std::abs(j_trap));
    const double sum = j_pump + j_phonon + j_trap;
    if (scale == 0.0)
        return std::abs(sum);
    return std::abs(sum) / scale;
}

PhotonFluxes fluxes(const ThreeLevelState& state, const SystemParams& sys,
                    const PhotonBath& pump, const PhotonBath& trap)
{
    PhotonFluxes f;
    f.j_pump = sys.epsilon1 * net_absorption(pump, state.dev00, state.dev11)
               - 0.5 * sys.J * pump.gamma * (pump.n + 1.0) * state.re12;
    f.j_trap = sys.epsilon2 * net_absorption(trap, state.dev00, state.dev22)
               - 0.5 * sys.J * trap.gamma * (trap.n + 1.0) * state.re12;
    return f;
}

double phonon_flux(const ThreeLevelState& state, const ThreeLevelGenerator& gen,
                   const SystemParams& sys)
{
    // -phonon * (reference + deviation); the reference has no coherence
    const Eigen::Vector4d x0 = gen.reference;
    const Eigen::Vector4d dx = -(gen.phonon.leftCols<2>() * x0.head<2>())
                               - gen.phonon * state.deviation();

    Eigen::Matrix3d drho = Eigen::Matrix3d::Zero();
    drho(1, 1) = 0.5 * (dx[0] + dx[1]);
    drho(2, 2) = 0.5 * (dx[1] - dx[0]);
    drho(0, 0) = -dx[1];
    drho(1, 2) = 0.5 * dx[2];
    drho(2, 1) = 0.5 * dx[2];

    Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
    h(1, 1) = sys.epsilon1;
    h(2, 2) = sys.epsilon2;
    h(1, 2) = 0.5 * sys.J;
    h(2, 1) = 0.5 * sys.J;
    // the imaginary part of d rho12 does not couple to a real symmetric H
    return (drho * h).trace();
}

double efficiency(double j_pump, double j_trap)
{
    if (!(j_pump > 0.0))
        throw DomainError("efficiency: pump flux is not positive (j_pump = "
                          + std::to_string(j_pump) + "), efficiency undefined");
    return std::abs(j_trap / j_pump);
}

const char* regime_name(Regime r)
{
    switch (r) {
    case Regime::eta_above:
        return "eta_above";
    case Regime::eta_below:
        return "eta_below";
    case Regime::boundary:
        return "boundary";
    case Regime::not_operating:
        return "not_operating";
    }
    return "unknown";
}

Diagnostics classify_regime(const ThreeLevelState& state, double eta, double eta0,
                            bool output_positive, double tol_sign)
{
    (void)eta;
    (void)eta0;
    Diagnostics d;
    d.pop_inversion = state.rho11 - state.rho22;
    d.coherence_re = state.re12;
    if (!output_positive)
        d.regime = Regime::not_operating;
    else if (state.re12 > tol_sign)
        d.regime = Regime::eta_above;
    else if (state.re12 < -tol_sign)
        d.regime = Regime::eta_below;
    else
        d.regime = Regime::boundary;
    return d;
}

double residence_time_proxy(const ThreeLevelState& state, const PhotonBath& pump)
{
    const double throughput = net_absorption(pump, state.dev00, state.dev11);
    if (!(throughput > 0.0))
        throw DomainError("residence_time_proxy: net pump throughput is not positive");
    return (state.rho11 + state.rho22) / throughput;
}

KineticCrossover kinetic_crossover(const RateSet& rates, const PhotonBath& trap)
{
    return {rates.gamma_z, trap.gamma, rates.gamma_z < trap.gamma};
}

FluxReport flux_report(const ThreeLevelState& state, const ThreeLevelGenerator& gen,
                       const SystemParams& sys, const PhotonBath& pump,
                       const PhotonBath& trap)
{
    const PhotonFluxes pf = fluxes(state, sys, pump, trap);
    FluxReport r;
    r.j_pump = pf.j_pump;
    r.j_trap = pf.j_trap;
    r.j_phonon = phonon_flux(state, gen, sys);
    r.eta0 = sys.epsilon2 / sys.epsilon1;
    r.eta = r.j_pump > 0.0 ? efficiency(r.j_pump, r.j_trap)
                           : std::numeric_limits<double>::quiet_NaN();
    return r;
}

} // namespace ptre
