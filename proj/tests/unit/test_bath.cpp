#include <doctest.h>

#include <cmath>
#include <complex>

#include <ptre/bath.hpp>
#include <ptre/error.hpp>
#include <ptre/trigamma.hpp>

using namespace ptre;
using cd = std::complex<double>;

namespace {

double rel(cd a, cd b)
{
    return std::abs(a - b) / std::abs(b);
}

} // namespace

TEST_SUITE("bath")
{
    TEST_CASE("trigamma matches reference values")
    {
        struct Ref
        {
            cd z, value;
        };
        // mpmath psi(1, z) at 30 digits
        const Ref refs[] = {
            {{0.2, 0.0}, {26.267377205423776331, 0.0}},
            {{1.0, 0.0}, {1.6449340668482264365, 0.0}},
            {{2.5, 0.0}, {0.49035775610023486497, 0.0}},
            {{10.0, 0.0}, {0.10516633568168574612, 0.0}},
            {{0.2, 0.5}, {-1.5484449439143327135, -2.9475339674618708321}},
            {{0.2, -3.0}, {-0.033963462016766507707, 0.33305081048064318598}},
            {{1.2, 40.0}, {0.00043743437116800150824, -0.024993646070258546066}},
            {{0.7, 0.001}, {2.834036217162493592, -0.0064349687562216584879}},
            {{3.0, -100.0}, {0.00024985008495452311873, 0.0099938369280207933587}},
            {{0.05, 0.001}, {401.05267446884983962, -15.989315830662337402}},
        };
        for (const auto& r : refs) {
            CAPTURE(r.z);
            CHECK(rel(trigamma(r.z), r.value) < 1e-14);
        }
        CHECK(trigamma(1.0) == doctest::Approx(1.6449340668482264365).epsilon(1e-14));
    }

    TEST_CASE("trigamma recurrence and conjugate symmetry")
    {
        const cd z{0.37, 2.1};
        CHECK(rel(trigamma(z), trigamma(z + 1.0) + 1.0 / (z * z)) < 1e-14);
        CHECK(rel(trigamma(std::conj(z)), std::conj(trigamma(z))) < 1e-15);
    }

    TEST_CASE("kappa closed form")
    {
        const PhononBath bath{1.0, 5.0, 1.0};
        CHECK(kappa(bath) == doctest::Approx(0.5765489187091983249).epsilon(1e-13));
        CHECK(kappa(PhononBath{0.0, 5.0, 1.0}) == 1.0);
        CHECK(kappa(bath) == doctest::Approx(std::exp(-0.5 * bath_exponent(0.0, bath).real()))
                                 .epsilon(1e-15));
        // kappa falls with coupling and with temperature
        CHECK(kappa(PhononBath{2.0, 5.0, 1.0}) < kappa(bath));
        CHECK(kappa(PhononBath{1.0, 5.0, 0.5}) < kappa(bath));
    }

    TEST_CASE("bath exponent on the real axis")
    {
        const PhononBath bath{1.0, 5.0, 1.0};
        // frequency-domain integral of the definition, mpmath
        CHECK(rel(bath_exponent(0.5, bath), {-0.023994501577355901559, -0.095124851367419738407})
              < 1e-12);
        CHECK(rel(bath_exponent(3.0, bath),
                  {0.0016685444655519363921, -0.00058736001253034693398})
              < 1e-11);
        CHECK(rel(bath_exponent(-1.7, bath), std::conj(bath_exponent(1.7, bath))) < 1e-15);
        CHECK(bath_exponent(0.0, bath).imag() == 0.0);
    }

    TEST_CASE("analytic continuation")
    {
        const PhononBath bath{1.0, 5.0, 1.0};
        for (double t : {0.0, 0.3, 2.0, 40.0})
            CHECK(rel(bath_exponent_analytic(cd{t, 0.0}, bath), bath_exponent(t, bath)) < 1e-13);
        CHECK(rel(bath_exponent_analytic(cd{0.3, -0.4}, bath),
                  {0.15528140528775896973, -0.037053262930295934442})
              < 1e-13);
        // on Im t = -beta_v/2 the exponent is real
        for (double s : {0.0, 0.7, 4.0}) {
            const cd q = bath_exponent_analytic(cd{s, -0.5}, bath);
            CHECK(std::abs(q.imag()) < 1e-15 * std::abs(q.real()) + 1e-18);
            CHECK(bath_exponent_shifted(s, bath) == doctest::Approx(q.real()).epsilon(1e-14));
        }
        CHECK(bath_exponent_shifted(0.0, bath)
              == doctest::Approx(0.22672393253556885015).epsilon(1e-13));
        CHECK(bath_exponent_shifted(0.7, bath)
              == doctest::Approx(0.049503434993197890448).epsilon(1e-13));
        CHECK(bath_exponent_shifted(4.0, bath)
              == doctest::Approx(0.0010136051184368168381).epsilon(1e-12));
        CHECK_THROWS_AS(bath_exponent_analytic(cd{0.0, 0.25}, bath), DomainError);
        CHECK_THROWS_AS(bath_exponent_analytic(cd{0.0, -1.3}, bath), DomainError);
    }

    TEST_CASE("small-argument kernels")
    {
        for (cd z : {cd{0.3, -0.2}, cd{2.0, 1.0}, cd{-0.45, 0.1}, cd{0.6, 0.0}}) {
            CAPTURE(z);
            CHECK(rel(cosh_minus_one(z), std::cosh(z) - 1.0) < 1e-13);
            CHECK(rel(sinh_minus_identity(z), std::sinh(z) - z) < 1e-12);
            CHECK(rel(exp_remainder(z), std::exp(z) - 1.0 - z) < 1e-13);
        }
        const cd tiny{1e-5, -3e-5};
        CHECK(rel(cosh_minus_one(tiny), tiny * tiny / 2.0 + tiny * tiny * tiny * tiny / 24.0)
              < 1e-15);
        CHECK(rel(sinh_minus_identity(tiny), tiny * tiny * tiny / 6.0) < 1e-9);
        CHECK(rel(exp_remainder(tiny), tiny * tiny / 2.0 + tiny * tiny * tiny / 6.0
                                      + tiny * tiny * tiny * tiny / 24.0)
              < 1e-15);
        CHECK(exp_remainder(1e-4) == doctest::Approx(5.0001666708e-9).epsilon(1e-10));
        CHECK(exp_remainder(3.0) == doctest::Approx(std::exp(3.0) - 4.0).epsilon(1e-15));
    }

    TEST_CASE("exponent transforms")
    {
        const PhononBath bath{0.7, 5.0, 1.3};
        const double w = 0.9;
        const ExponentTransforms tr = exponent_transforms(w, bath, QuadratureConfig{});
        const double pi = 3.14159265358979323846;
        CHECK(tr.cos_re == doctest::Approx(0.5 * pi * thermal_mode_weight(w, bath)));
        CHECK(tr.sin_im == doctest::Approx(-0.5 * pi * mode_weight(w, bath)));
        CHECK(std::isfinite(tr.sin_re));
    }

    TEST_CASE("spectral density")
    {
        const PhononBath bath{2.0, 5.0, 1.0};
        const double pi = 3.14159265358979323846;
        CHECK(spectral_density(1.0, bath) == doctest::Approx(2.0 * pi / 25.0 * std::exp(-0.2)));
        CHECK(mode_weight(1.0, bath) == doctest::Approx(spectral_density(1.0, bath) / pi));
        CHECK(std::isfinite(thermal_mode_weight(0.0, bath)));
    }

    TEST_CASE("bath validation")
    {
        CHECK_THROWS_AS(PhononBath({-1.0, 5.0, 1.0}).validate(), DomainError);
        CHECK_THROWS_AS(PhononBath({1.0, 0.0, 1.0}).validate(), DomainError);
        CHECK_THROWS_AS(PhononBath({1.0, 5.0, 0.0}).validate(), DomainError);
        CHECK_NOTHROW(PhononBath({0.0, 5.0, 1.0}).validate());
    }
}
