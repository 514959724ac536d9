#include <ptre/three_level.hpp>

#include <cmath>
#include <string>

#include <ptre/error.hpp>

namespace ptre {

namespace {

constexpr double min_rcond = 1e-15;

Eigen::Matrix4d photon_part(const PhotonBath& pump, const PhotonBath& trap)
{
    const double gp = pump.gamma, np = pump.n;
    const double gt = trap.gamma, nt = trap.n;
    const double dephase = 0.5 * (gp * (np + 1.0) + gt * (nt + 1.0));

    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = dephase;
    m(0, 1) = 0.5 * (gp * (3.0 * np + 1.0) - gt * (3.0 * nt + 1.0));
    m(1, 0) = 0.5 * (gp * (np + 1.0) - gt * (nt + 1.0));
    m(1, 1) = 0.5 * (gp * (3.0 * np + 1.0) + gt * (3.0 * nt + 1.0));
    m(2, 2) = dephase;
    m(3, 3) = dephase;
    return m;
}

Eigen::Matrix4d phonon_part(const RateSet& r, const PolaronFrame& f)
{
    const double c = f.cos_theta, s = f.sin_theta;
    const double c2 = c * c, s2 = s * s, s2t = f.sin_2theta();
    const double k = f.kappa, d = f.delta;

    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = r.gamma_z * c2 + r.gamma_x * s2 + 0.5 * (r.gamma_xz + r.gamma_zx) * s2t;
    m(0, 1) = -r.c_z * c - r.c_x * s;
    m(0, 2) = (r.gamma_xz * s2 - r.gamma_zx * c2 + 0.5 * (r.gamma_z - r.gamma_x) * s2t) / k;
    m(0, 3) = -(d + r.gamma_xy) * s / k;
    m(2, 0) = k * (r.gamma_zx * s2 - r.gamma_xz * c2 + 0.5 * (r.gamma_z - r.gamma_x) * s2t);
    m(2, 1) = k * (r.c_x * c - r.c_z * s);
    m(2, 2) = r.gamma_x * c2 + r.gamma_z * s2 - 0.5 * (r.gamma_xz + r.gamma_zx) * s2t;
    m(2, 3) = (d + r.gamma_xy) * c;
    m(3, 0) = k * ((d - r.gamma_yx) * s - r.gamma_yz * c);
    m(3, 1) = k * r.c_y;
    m(3, 2) = -(d - r.gamma_yx) * c - r.gamma_yz * s;
    m(3, 3) = r.gamma_y;
    return m;
}

// populations proportional to (np+1)(nt+1), np(nt+1), nt(np+1)
Eigen::Vector4d photon_reference(const PhotonBath& pump, const PhotonBath& trap)
{
    const double np = pump.n, nt = trap.n;
    const double w0 = (np + 1.0) * (nt + 1.0);
    const double w1 = np * (nt + 1.0);
    const double w2 = nt * (np + 1.0);
    const double z = w0 + w1 + w2;
    return {(w1 - w2) / z, (w1 + w2) / z, 0.0, 0.0};
}

Eigen::Vector4d equilibrated_solve(const Eigen::Matrix4d& m, const Eigen::Vector4d& b,
                                   double& condition)
{
    Eigen::Vector4d scale;
    for (int i = 0; i < 4; ++i) {
        const double n = m.row(i).cwiseAbs().maxCoeff();
        scale[i] = n > 0.0 ? 1.0 / n : 1.0;
    }
    const Eigen::PartialPivLU<Eigen::Matrix4d> lu(scale.asDiagonal() * m);
    const double rcond = lu.rcond();
    if (!(rcond > min_rcond))
        throw SingularError("three_level_steady_state: generator is singular (rcond = "
                            + std::to_string(rcond) + ")");
    condition = 1.0 / rcond;
    return lu.solve(scale.asDiagonal() * b);
}

} // namespace

double photon_occupation(double beta, double transition_energy)
{
    const double x = beta * transition_energy;
    if (!(x > 0.0) || std::isnan(x))
        throw DomainError("photon_occupation: beta * E must be > 0, got "
                          + std::to_string(x));
    return 1.0 / std::expm1(x);
}

PhotonBath PhotonBath::thermal(double gamma, double beta, double transition_energy)
{
    PhotonBath b;
    b.gamma = gamma;
    b.beta = beta;
    b.transition_energy = transition_energy;
    b.n = photon_occupation(beta, transition_energy);
    b.validate();
    return b;
}

PhotonBath PhotonBath::with_occupation(double gamma, double transition_energy, double n)
{
    PhotonBath b;
    b.gamma = gamma;
    b.transition_energy = transition_energy;
    b.n = n;
    b.validate();
    return b;
}

void PhotonBath::validate() const
{
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw DomainError("PhotonBath: gamma must be finite and >= 0");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw DomainError("PhotonBath: beta must be finite and > 0");
    if (!(n >= 0.0) || !std::isfinite(n))
        throw DomainError("PhotonBath: occupation must be finite and >= 0");
    if (!std::isfinite(transition_energy))
        throw DomainError("PhotonBath: transition energy must be finite");
}

ThreeLevelGenerator assemble_three_level_generator(const RateSet& rates,
                                                   const PolaronFrame& frame,
                                                   const PhotonBath& pump,
                                                   const PhotonBath& trap)
{
    pump.validate();
    trap.validate();
    if (!(frame.kappa > 0.0))
        throw SingularError("assemble_three_level_generator: kappa = 0");

    ThreeLevelGenerator g;
    g.phonon = phonon_part(rates, frame);
    g.photon = photon_part(pump, trap);
    g.mbar = g.phonon + g.photon;
    g.drive << pump.gamma * pump.n - trap.gamma * trap.n,
        pump.gamma * pump.n + trap.gamma * trap.n, 0.0, 0.0;
    g.reference = photon_reference(pump, trap);
    return g;
}

Eigen::Vector4d ThreeLevelState::x() const
{
    return {rho11 - rho22, rho11 + rho22, 2.0 * re12, -2.0 * im12};
}

Eigen::Vector4d ThreeLevelState::deviation() const
{
    return {dev11 - dev22, dev11 + dev22, 2.0 * re12, -2.0 * im12};
}

bool ThreeLevelState::positive(double pop_tol, double coh_tol) const
{
    auto in_range = [&](double p) { return p >= -pop_tol && p <= 1.0 + pop_tol; };
    return in_range(rho00) && in_range(rho11) && in_range(rho22)
           && re12 * re12 + im12 * im12 <= rho11 * rho22 + coh_tol;
}

ThreeLevelState three_level_steady_state(const ThreeLevelGenerator& gen)
{
    if (!gen.mbar.allFinite() || !gen.drive.allFinite())
        throw SingularError("three_level_steady_state: generator has non-finite entries");

    // the reference balances the photon part exactly and has no coherence,
    // so only the first two phonon columns act on it
    const Eigen::Vector4d& x0 = gen.reference;
    const Eigen::Vector4d rhs = -(gen.phonon.leftCols<2>() * x0.head<2>());

    ThreeLevelState st;
    const Eigen::Vector4d dx = equilibrated_solve(gen.mbar, rhs, st.condition_number);

    st.dev11 = 0.5 * (dx[0] + dx[1]);
    st.dev22 = 0.5 * (dx[1] - dx[0]);
    st.dev00 = -dx[1];
    st.re12 = 0.5 * dx[2];
    st.im12 = -0.5 * dx[3];

    const double ref11 = 0.5 * (x0[0] + x0[1]);
    const double ref22 = 0.5 * (x0[1] - x0[0]);
    st.rho11 = ref11 + st.dev11;
    st.rho22 = ref22 + st.dev22;
    st.rho00 = (1.0 - ref11 - ref22) + st.dev00;

    const double trace = st.rho00 + st.rho11 + st.rho22;
    if (!(std::abs(trace - 1.0) <= 1e-9))
        throw ConsistencyError("three_level_steady_state: trace = "
                               + std::to_string(trace));

    const Eigen::Vector4d residual = gen.mbar * st.x() - gen.drive;
    const double scale = gen.mbar.cwiseAbs().maxCoeff() + gen.drive.cwiseAbs().maxCoeff();
    if (!(residual.cwiseAbs().maxCoeff() <= 1e-9 * scale))
        throw ConsistencyError("three_level_steady_state: steady-state residual too large");
    return st;
}

} // namespace ptre
