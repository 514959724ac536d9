#include <doctest.h>

#include <cmath>

#include <ptre/bath.hpp>
#include <ptre/error.hpp>
#include <ptre/rates.hpp>
#include <ptre/tls.hpp>
#include <ptre/validation.hpp>

using namespace ptre;

namespace {

struct Setup
{
    SystemParams sys;
    PhononBath bath;
    PolaronFrame frame;
    TlsGenerator gen;
};

Setup setup(double alpha, double beta_v = 1.0)
{
    Setup s;
    s.bath = {alpha, 5.0, beta_v};
    s.frame = build_polaron_frame(s.sys, kappa(s.bath));
    s.gen = assemble_tls_generator(compute_rates(s.frame, s.bath, s.sys, QuadratureConfig{}),
                                   s.frame);
    return s;
}

} // namespace

TEST_SUITE("tls")
{
    TEST_CASE("analytic limits")
    {
        const SystemParams sys;
        const PhononBath bath{1.0, 5.0, 1.0};
        CHECK(analytic_limit_tau_z(sys, bath, TlsLimit::weak)
              == doctest::Approx(-std::tanh(0.5 * std::hypot(0.5, 1.0))));
        CHECK(analytic_limit_tau_z(sys, bath, TlsLimit::strong)
              == doctest::Approx(-0.24491866240370913));
        CHECK(analytic_limit_tau_z(sys, bath, TlsLimit::polaron)
              == doctest::Approx(-std::tanh(0.5 * std::hypot(0.5, kappa(bath)))));
    }

    TEST_CASE("steady state solves the generator")
    {
        const Setup s = setup(1.0);
        const TlsSteadyState ss = tls_steady_state(s.gen);
        CHECK((s.gen.m * ss.tau.vec() - s.gen.c).norm() < 1e-14);
        CHECK(ss.tau.physical());
        CHECK(ss.condition_number >= 1.0);
    }

    TEST_CASE("weak and strong coupling limits are reached")
    {
        const SystemParams sys;
        const Setup weak = setup(1e-3);
        CHECK(tls_steady_state(weak.gen).tau.tau_z
              == doctest::Approx(analytic_limit_tau_z(sys, weak.bath, TlsLimit::weak))
                     .epsilon(2e-3));
        const Setup strong = setup(40.0);
        CHECK(std::abs(tls_steady_state(strong.gen).tau.tau_z
                       - analytic_limit_tau_z(sys, strong.bath, TlsLimit::strong))
              < 1e-6);
    }

    TEST_CASE("relaxation matches the ODE oracle and reaches the steady state")
    {
        const Setup s = setup(0.5);
        const BlochVector start{1.0, 0.0, 0.0};
        for (double t : {0.5, 7.0, 60.0}) {
            CAPTURE(t);
            const BlochVector a = tls_propagate(s.gen, start, t);
            const BlochVector b = validation::propagate_by_ode(s.gen, start, t);
            CHECK((a.vec() - b.vec()).norm() < 1e-9);
        }
        CHECK(tls_propagate(s.gen, start, 0.0).tau_z == 1.0);
        const BlochVector late = tls_propagate(s.gen, start, 5000.0);
        CHECK((late.vec() - tls_steady_state(s.gen).tau.vec()).norm() < 1e-10);
    }

    TEST_CASE("local frame")
    {
        const Setup s = setup(1.0);
        const BlochVector tau{-0.3, 0.1, 0.05};
        const LocalBloch l = to_local_frame(tau, s.frame);
        const double c = s.frame.cos_theta, sn = s.frame.sin_theta, k = s.frame.kappa;
        CHECK(l.sigma_z == doctest::Approx(c * tau.tau_z + sn * tau.tau_x));
        CHECK(l.sigma_x == doctest::Approx(k * (sn * tau.tau_z - c * tau.tau_x)));
        CHECK(l.sigma_y == doctest::Approx(-k * tau.tau_y));
    }

    TEST_CASE("physicality check")
    {
        CHECK(BlochVector{0.6, 0.8, 0.0}.physical());
        CHECK_FALSE(BlochVector{0.8, 0.8, 0.0}.physical());
        CHECK_FALSE(BlochVector{1.1, 0.0, 0.0}.physical());
    }

    TEST_CASE("singular generator")
    {
        CHECK_THROWS_AS(tls_steady_state(TlsGenerator{}), SingularError);
    }
}
