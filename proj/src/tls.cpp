#include <ptre/tls.hpp>

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include <ptre/error.hpp>

namespace ptre {

namespace {

constexpr double min_rcond = 1e-14;

} // namespace

bool BlochVector::physical(double tol) const
{
    const double bound = 1.0 + tol;
    return std::abs(tau_z) <= bound && std::abs(tau_x) <= bound
           && std::abs(tau_y) <= bound
           && tau_z * tau_z + tau_x * tau_x + tau_y * tau_y <= bound;
}

TlsSteadyState tls_steady_state(const TlsGenerator& gen)
{
    if (!gen.m.allFinite() || !gen.c.allFinite())
        throw SingularError("tls_steady_state: generator has non-finite entries");

    // equilibrate rows so the pivoting sees comparable magnitudes
    Eigen::Vector3d scale;
    for (int i = 0; i < 3; ++i) {
        const double n = gen.m.row(i).cwiseAbs().maxCoeff();
        scale[i] = n > 0.0 ? 1.0 / n : 1.0;
    }
    const Eigen::Matrix3d a = scale.asDiagonal() * gen.m;
    const Eigen::PartialPivLU<Eigen::Matrix3d> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > min_rcond))
        throw SingularError("tls_steady_state: transition matrix is singular (rcond = "
                            + std::to_string(rcond) + ", Delta = "
                            + std::to_string(gen.delta) + ")");

    TlsSteadyState out;
    out.tau = BlochVector::from(lu.solve(scale.asDiagonal() * gen.c));
    out.condition_number = 1.0 / rcond;
    return out;
}

BlochVector tls_propagate(const TlsGenerator& gen, const BlochVector& tau0, double t)
{
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("tls_propagate: t must be finite and >= 0");
    if (t == 0.0)
        return tau0;
    const Eigen::Vector3d ss = tls_steady_state(gen).tau.vec();
    const Eigen::Matrix3d prop = (-gen.m * t).exp();
    return BlochVector::from(prop * (tau0.vec() - ss) + ss);
}

double analytic_limit_tau_z(const SystemParams& sys, const PhononBath& bath, TlsLimit which)
{
    sys.validate();
    bath.validate();
    const double eps = sys.epsilon();
    double energy = 0.0;
    switch (which) {
    case TlsLimit::weak:
        energy = std::hypot(eps, sys.J);
        break;
    case TlsLimit::polaron:
        energy = std::hypot(eps, kappa(bath) * sys.J);
        break;
    case TlsLimit::strong:
        energy = eps;
        break;
    }
    // (1 - e^x) / (1 + e^x)
    return -std::tanh(0.5 * bath.beta_v * energy);
}

LocalBloch to_local_frame(const BlochVector& tau, const PolaronFrame& frame)
{
    const double c = frame.cos_theta;
    const double s = frame.sin_theta;
    const double k = frame.kappa;
    return {c * tau.tau_z + s * tau.tau_x, k * s * tau.tau_z - k * c * tau.tau_x,
            -k * tau.tau_y};
}

} // namespace ptre
