#include <doctest.h>

#include <cmath>
#include <numbers>

#include <ptre/error.hpp>
#include <ptre/quadrature.hpp>

using namespace ptre;

TEST_SUITE("quadrature")
{
    TEST_CASE("exponential decay")
    {
        const auto r = integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0,
                                               QuadratureConfig{});
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.horizon > 20.0);
        CHECK(r.horizon < 100.0);
    }

    TEST_CASE("damped oscillation")
    {
        // int_0^inf cos(3t) e^-t dt = 1/10
        const auto r = integrate_semi_infinite(
            [](double t) { return std::cos(3.0 * t) * std::exp(-t); }, 3.0, QuadratureConfig{});
        CHECK(r.value == doctest::Approx(0.1).epsilon(1e-12));
    }

    TEST_CASE("algebraic tail")
    {
        // int_0^inf (1 + t^2)^-2 dt = pi/4
        QuadratureConfig cfg;
        cfg.tail_threshold = 1e-16;
        const auto r = integrate_semi_infinite(
            [](double t) { return 1.0 / ((1.0 + t * t) * (1.0 + t * t)); }, 0.0, cfg);
        CHECK(r.value == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-10));
    }

    TEST_CASE("vector integrands share one horizon")
    {
        auto sample = [](double t) {
            QuadratureSample<2> s;
            s.value = {std::exp(-t), t * std::exp(-2.0 * t)};
            s.envelope = std::exp(-t);
            return s;
        };
        const auto r = integrate_semi_infinite<2>(sample, SemiInfiniteOptions{0.0, 1.0},
                                                  QuadratureConfig{});
        CHECK(r.value[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.value[1] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(r.evaluations > 0);
    }

    TEST_CASE("finite interval")
    {
        auto sample = [](double t) {
            QuadratureSample<1> s;
            s.value[0] = std::sin(t);
            return s;
        };
        const auto r = integrate_interval<1>(sample, 0.0, std::numbers::pi, QuadratureConfig{});
        CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(integrate_interval<1>(sample, 1.0, 1.0, QuadratureConfig{}).value[0] == 0.0);
    }

    TEST_CASE("slow decay hits the horizon cap")
    {
        QuadratureConfig cfg;
        cfg.max_time_factor = 50.0;
        auto sample = [](double t) {
            QuadratureSample<3> s;
            s.value = {0.0, 1.0 / (1.0 + t), 0.0};
            s.envelope = 1.0 / (1.0 + t);
            return s;
        };
        try {
            (void)integrate_semi_infinite<3>(sample, SemiInfiniteOptions{0.0, 1.0}, cfg);
            FAIL("expected QuadratureError");
        } catch (const QuadratureError& e) {
            CHECK(e.component() == 1);
            CHECK(e.horizon() >= 50.0);
            CHECK(e.estimate() > 0.0);
        }
    }

    TEST_CASE("option and config validation")
    {
        auto f = [](double t) { return std::exp(-t); };
        QuadratureConfig bad;
        bad.rel_tol = 0.0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        bad = {};
        bad.max_time_factor = 1.0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        CHECK_THROWS_AS(integrate_semi_infinite(f, -1.0, QuadratureConfig{}), DomainError);
        CHECK_THROWS_AS(integrate_semi_infinite(f, 0.0, QuadratureConfig{}, 0.0), DomainError);
    }
}
