#ifndef PTRE_TLS_HPP
#define PTRE_TLS_HPP

#include <Eigen/Dense>

#include <ptre/bath.hpp>
#include <ptre/rates.hpp>
#include <ptre/system.hpp>

namespace ptre {

/// Polaron-frame Bloch vector (<tau_z>, <tau_x>, <tau_y>).
struct BlochVector
{
    double tau_z = 0.0;
    double tau_x = 0.0;
    double tau_y = 0.0;

    Eigen::Vector3d vec() const { return {tau_z, tau_x, tau_y}; }
    static BlochVector from(const Eigen::Vector3d& v) { return {v[0], v[1], v[2]}; }

    /// Components and length lie within 1 + tol.
    bool physical(double tol = 1e-9) const;
};

/// Local-basis expectations of the excited-state pair.
struct LocalBloch
{
    double sigma_z = 0.0;
    double sigma_x = 0.0;
    double sigma_y = 0.0;
};

struct TlsSteadyState
{
    BlochVector tau;
    /// 1-norm condition estimate of m.
    double condition_number = 0.0;
};

/// Solves m tau = c. Throws SingularError when m is numerically singular.
TlsSteadyState tls_steady_state(const TlsGenerator& gen);

/// exp(-m t) (tau0 - tau_ss) + tau_ss, t >= 0.
BlochVector tls_propagate(const TlsGenerator& gen, const BlochVector& tau0, double t);

enum class TlsLimit { weak, polaron, strong };

/// Closed-form <tau_z> in the weak, polaron-canonical and strong coupling limits.
double analytic_limit_tau_z(const SystemParams& sys, const PhononBath& bath, TlsLimit which);

LocalBloch to_local_frame(const BlochVector& tau, const PolaronFrame& frame);

} // namespace ptre

#endif
