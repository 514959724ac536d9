#ifndef PTRE_VALIDATION_HPP
#define PTRE_VALIDATION_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <ptre/bath.hpp>
#include <ptre/config.hpp>
#include <ptre/rates.hpp>
#include <ptre/tls.hpp>

namespace ptre::validation {

/// kappa from numerical integration of exp(-1/2 int dw J/(pi w^2) coth(beta w/2)).
double kappa_by_integration(const PhononBath& bath);

/// Q(t) by numerical integration of its frequency-domain definition.
std::complex<double> bath_exponent_by_integration(double t, const PhononBath& bath);

struct SimpsonRates
{
    RateSet rates;
    /// Largest |Im| left over relative to |Re| when the literal complex
    /// integrands are used.
    double imaginary_residue = 0.0;
};

/**
 * Rate constants from the literal integrands (Q(t) and Q(-t) evaluated
 * separately, full-line integrals kept full-line) on a fixed composite
 * Simpson grid of 2^log2_points intervals over [0, horizon], plus
 * integration-by-parts tails for the slowly decaying parts.
 */
SimpsonRates rates_by_simpson(const PolaronFrame& frame, const PhononBath& bath,
                              const SystemParams& sys, double horizon = 800.0,
                              int log2_points = 20);

/// Adaptive Dormand-Prince integration of d tau/dt = -m tau + c.
BlochVector propagate_by_ode(const TlsGenerator& gen, const BlochVector& tau0, double t,
                             double tol = 1e-12);

struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// kappa, Q(t), rate and conservation oracles at the configuration's parameters.
std::vector<Check> run_validation(const SweepConfig& cfg);

} // namespace ptre::validation

#endif
